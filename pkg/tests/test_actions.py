from __future__ import annotations

import threading

import pytest
from hypothesis import given, settings

from semisimp import seqmat as M
from semisimp.actions import (NAMES, CoSSObject, by_name, check_cosimplicial, cone_sd_check,
                              cosimp_cil, cosimp_sd, cosimp_yoneda, cylinder, cylinder0, cylinder2,
                              direct_cil_subcomplex, direct_sd_subcomplex, extend, interior_count,
                              subdivision)
from semisimp.combinat import binomial
from semisimp.errors import NonRegular, NotASubcomplex
from semisimp.sscore import AugSSet, EMPTY, boundary, gamma, hexagon, join, validate

from conftest import subcomplexes

MATRIX = {"yoneda": M.bin, "cil": M.cil, "cil0": M.cil0, "cil2": M.cil2, "sd": M.cad_plus}


@pytest.mark.parametrize("name", NAMES)
def test_shipped_objects_are_co_semi_simplicial(name):
    assert check_cosimplicial(by_name(name), 4)
    assert by_name(name).regular


def test_yoneda_levels_and_cofaces():
    Y = cosimp_yoneda()
    assert Y.at(-1).same_structure(gamma(-1))
    assert Y.at(3).same_structure(gamma(3))
    f = Y.coface(2, 1)
    src, dst = Y.at(1), Y.at(2)
    assert dst.labels[2][f(1, src.labels[2].index((0, 1)))] == (0, 2)
    for n in range(-1, 8):
        for m in range(-1, 9):
            assert Y.cardinal_matrix()(n, m) == binomial(n + 1, m + 1)


def test_pair_objects_small_levels():
    assert by_name("cil").at(1).cardinal() == (1, 4, 5, 2)
    assert set(by_name("cil").at(1).labels[2]) == {
        ((0, 1), ()), ((), (0, 1)), ((0,), (1,)), ((0,), (0,)), ((1,), (1,))}
    assert by_name("cil0").at(2).cardinal() == (1, 6, 9, 4)
    assert by_name("cil2").at(1).cardinal() == (1, 4, 6, 4, 1)


def test_sd_levels_and_faces():
    S = cosimp_sd()
    assert S.at(2).cardinal() == (1, 7, 12, 6)
    assert S.at(0).same_structure(gamma(0))
    X = S.at(2)
    chain = ((0,), (0, 1), (0, 1, 2))
    s = X.labels[3].index(chain)
    assert X.labels[2][X.face(2, 1, s)] == ((0,), (0, 1, 2))


def test_cardinal_matrices_match_closed_forms():
    for name in NAMES:
        geo = by_name(name).cardinal_matrix()
        assert M.equal_on_window(geo, MATRIX[name](), 5), name


def test_levels_built_once_under_concurrency():
    Z = cosimp_cil()
    seen = []

    def work():
        seen.append(Z.at(4))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(x is seen[0] for x in seen)


def test_extend_of_standard_simplex_is_the_level():
    for name in NAMES:
        Z = by_name(name)
        for n in range(-1, 6):
            assert extend(gamma(n), Z).cardinal() == Z.at(n).cardinal()


def test_extend_examples():
    assert cylinder2(boundary(2)).cardinal() == (1, 6, 15, 12, 3)
    assert subdivision(gamma(-1)).cardinal() == (1,)
    assert extend(EMPTY, by_name("cil")).is_empty
    twice = subdivision(subdivision(gamma(2)))
    assert twice.cardinal() == M.sd_seq(M.sd_seq(gamma(2).cardinal()))
    assert validate(twice)


def test_hexagon_constructions():
    H = hexagon()
    assert cylinder(H).cardinal() == (1, 12, 24, 12)
    assert cylinder0(H).cardinal() == (1, 12, 18)
    assert cylinder2(H).cardinal() == (1, 12, 30, 24, 6)
    assert direct_sd_subcomplex(H).cardinal() == (1, 12, 12)
    assert direct_sd_subcomplex(H).cardinal() == M.sd_seq(H.cardinal())


def test_extend_rejects_non_regular():
    # two (-1)-simplices collapsed onto one point by the only coface
    def level(n):
        return AugSSet((2,), ()) if n == -1 else AugSSet((1, 1), (((0,),),))

    def coface(n, i):
        return ((0, 0),)

    Z = CoSSObject("collapse", level, coface, regular=False)
    assert not Z.coface(0, 0).is_injective()
    with pytest.raises(NonRegular):
        extend(gamma(1), Z)
    with pytest.raises(NonRegular):
        interior_count(Z, 0)


def test_direct_constructions():
    assert direct_cil_subcomplex(gamma(2)).cardinal() == (1, 6, 12, 10, 3)
    assert direct_cil_subcomplex(boundary(2)).cardinal() == (1, 6, 12, 6)
    assert direct_sd_subcomplex(gamma(3)).cardinal() == (1, 15, 50, 60, 24)
    assert direct_sd_subcomplex(gamma(0)).same_structure(gamma(0))
    with pytest.raises(NotASubcomplex):
        direct_cil_subcomplex(cylinder(gamma(1)))
    with pytest.raises(NotASubcomplex):
        direct_sd_subcomplex(gamma(2).strip_labels())
    with pytest.raises(ValueError):
        direct_cil_subcomplex(gamma(1), kind="wide")


@settings(max_examples=40, deadline=None)
@given(subcomplexes())
def test_direct_oracles_agree_with_extend(X):
    for kind, name in (("standard", "cil"), ("zero", "cil0"), ("two", "cil2")):
        D = direct_cil_subcomplex(X, kind)
        assert validate(D)
        assert D.cardinal() == extend(X, by_name(name)).cardinal()
    assert direct_sd_subcomplex(X).cardinal() == subdivision(X).cardinal()


@settings(max_examples=40, deadline=None)
@given(subcomplexes())
def test_commutation_property(X):
    for name in NAMES:
        Y = extend(X, by_name(name))
        assert validate(Y)
        assert Y.cardinal() == M.triangle_action(X.cardinal(), MATRIX[name]())


@settings(max_examples=25, deadline=None)
@given(subcomplexes(max_n=2), subcomplexes(max_n=2))
def test_monoidal_objects_give_monoidal_actions(X, Y):
    # yoneda and cil2 send [p] ⊔ [q] to the join of the images
    for name in ("yoneda", "cil2"):
        Z = by_name(name)
        lhs = extend(join(X, Y), Z).cardinal()
        rhs = join(extend(X, Z), extend(Y, Z)).cardinal()
        assert lhs == rhs


@pytest.mark.parametrize("name", ["cil", "cil0", "sd"])
def test_non_monoidal_objects_break_join_compatibility(name):
    Z = by_name(name)
    point = gamma(0)
    assert extend(join(point, point), Z).cardinal() != join(extend(point, Z), extend(point, Z)).cardinal()


def test_interior_counts():
    assert interior_count(by_name("cil"), 3) == (0, 0, 0, 0, 5, 4)
    assert interior_count(by_name("sd"), 4) == (0, 1, 30, 150, 240, 120)
    for n in range(-1, 5):
        assert interior_count(by_name("yoneda"), n) == M.unit(n)


@pytest.mark.parametrize("name", NAMES)
def test_reconstruction_from_interiors(name):
    Z = by_name(name)
    for n in range(-1, 5):
        total = M.ZERO
        for i in range(-1, n + 1):
            total = total + binomial(n + 1, i + 1) * interior_count(Z, i)
        assert total == Z.at(n).cardinal()


def test_nesting_of_cylinders():
    for n in range(-1, 5):
        a, b, c = (by_name(k).at(n) for k in ("cil0", "cil", "cil2"))
        for m in range(len(c.sizes)):
            la = set(a.labels[m]) if m < len(a.sizes) else set()
            lb = set(b.labels[m]) if m < len(b.sizes) else set()
            assert la <= lb <= set(c.labels[m])


def test_dup_is_not_cil2():
    dup = join(boundary(2), boundary(2)).cardinal()
    assert dup == (1, 6, 15, 18, 9)
    assert dup != cylinder2(boundary(2)).cardinal()


def test_cone_sd_check_report():
    r0 = cone_sd_check(0)
    assert r0.passed and r0.left == (1, 1)
    r2 = cone_sd_check(2)
    assert r2.passed and r2.left == (1, 7, 12, 6)
    assert "PASS" in r2.render() and "level 1: 12 vs 12 ok" in r2.render()
    with pytest.raises(ValueError):
        cone_sd_check(-1)
