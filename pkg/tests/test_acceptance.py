"""Acceptance criteria 1-11, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line. Results are
cached so criterion 11 can re-validate every complex built by 1-10 without
rebuilding it. Run directly (``python tests/test_acceptance.py``) to get
just the eleven lines.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from functools import cache

import pytest

from semisimp import reference
from semisimp import seqmat as M
from semisimp.actions import (NAMES, by_name, cone_sd_check, cylinder, cylinder0, cylinder2,
                              direct_cil_subcomplex, direct_sd_subcomplex, extend, interior_count)
from semisimp.combinat import binomial, enumerate_strict_chains, stirling2
from semisimp.sscore import (AugSSet, boundary, cone_left, cone_right, gamma, hexagon, join,
                             random_subcomplex, validate)
from semisimp.verify import OEIS

MATRIX = {"yoneda": M.bin, "cil": M.cil, "cil0": M.cil0, "cil2": M.cil2, "sd": M.cad_plus}

# geometric sources for table rows: (object, which part of at(n))
GEOMETRIC = {
    "breve-cil": ("cil", "interior"), "cil-partial": ("cil", "boundary"), "cil": ("cil", "full"),
    "breve-cil0": ("cil0", "interior"), "cil0-partial": ("cil0", "boundary"), "cil0": ("cil0", "full"),
    "breve-cil2": ("cil2", "interior"), "cil2-partial": ("cil2", "boundary"), "cil2": ("cil2", "full"),
    "cad+": ("sd", "full"), "breve-cad+": ("sd", "interior"),
}


class Outcome:
    def __init__(self, n: int, title: str):
        self.n, self.title = n, title
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.complexes: list[AugSSet] = []

    def expect(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def keep(self, *xs: AugSSet) -> None:
        self.complexes.extend(xs)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "; ".join(self.failures[:3]) if self.failures else "; ".join(self.notes)
        return f"criterion {self.n} ({self.title}): {status}" + (f" [{extra}]" if extra else "")


def random_corpus(count: int, max_n: int, seed: int) -> list[AugSSet]:
    rng = random.Random(seed)
    return [random_subcomplex(k % (max_n + 1), rng) for k in range(count)]


def geometric_row(table: str, n: int) -> M.AugSequence:
    obj, part = GEOMETRIC[table]
    Z = by_name(obj)
    if part == "interior":
        return interior_count(Z, n)
    if part == "boundary":
        return extend(boundary(n), Z).cardinal()
    return Z.at(n).cardinal()


# ---------------------------------------------------------------- criteria

@cache
def criterion_1() -> Outcome:
    out = Outcome(1, "table reproduction")
    for t in reference.TABLES:
        A = M.named(t.matrix)
        waived = reference.waivers_for(t.id)
        (r0, r1), (c0, c1) = t.row_range, t.col_range
        for n in range(r0, r1 + 1):
            geo_max = 5 if t.matrix in ("cad+", "breve-cad+") else 6
            geo = geometric_row(t.matrix, n) if t.matrix in GEOMETRIC and n <= geo_max else None
            for m in range(c0, c1 + 1):
                printed, got = t.cell(n, m), A(n, m)
                if (n, m) in waived:
                    w = waived[(n, m)]
                    out.expect(printed == w.printed, f"{t.id}[{n}]_{m} waiver does not match print")
                    out.expect(got == w.formula, f"{t.id}[{n}]_{m} formula {got} != {w.formula}")
                    if geo is not None:
                        out.expect(geo[m] == w.formula, f"{t.id}[{n}]_{m} geometric {geo[m]}")
                    out.notes.append(f"waiver {t.id}[{n}]_{m}: printed {w.printed}, asserted {w.formula}")
                else:
                    out.expect(got == printed, f"{t.id}[{n}]_{m}: {got} != {printed}")
                    if geo is not None:
                        out.expect(geo[m] == printed, f"{t.id}[{n}]_{m} geometric {geo[m]} != {printed}")
    return out


@cache
def criterion_2() -> Outcome:
    out = Outcome(2, "hexagon")
    H = hexagon()
    out.keep(H)
    out.expect(H.cardinal() == reference.HEXAGON["hexagon"], "|H|")
    a = H.cardinal()
    for name, build, breve, full in (("cil", cylinder, M.breve_cil, M.cil),
                                     ("cil0", cylinder0, M.breve_cil0, M.cil0),
                                     ("cil2", cylinder2, M.breve_cil2, M.cil2)):
        geometric = build(H)
        kind = {"cil": "standard", "cil0": "zero", "cil2": "two"}[name]
        direct = direct_cil_subcomplex(H, kind)
        out.keep(geometric, direct)
        values = [geometric.cardinal(), M.dot(a, breve()), M.triangle_action(a, full()), direct.cardinal()]
        expected = reference.HEXAGON[name]
        out.expect(all(v == expected for v in values), f"{name}: {[str(v) for v in values]}")
    return out


@cache
def criterion_3() -> Outcome:
    out = Outcome(3, "commutation")
    xs = random_corpus(200, 5, seed=3)
    for X in xs:
        out.keep(X)
        for name in NAMES:
            Y = extend(X, by_name(name))
            out.keep(Y)
            expected = M.triangle_action(X.cardinal(), MATRIX[name]())
            out.expect(Y.cardinal() == expected, f"{name} on {X.cardinal()}")
            if name == "yoneda":
                out.expect(Y.cardinal() == X.cardinal(), f"yoneda changed {X.cardinal()}")
    out.notes.append(f"{len(xs)} complexes x {len(NAMES)} objects")
    return out


@cache
def criterion_4() -> Outcome:
    out = Outcome(4, "oracle equivalence")
    xs = random_corpus(100, 4, seed=4)
    for X in xs:
        for kind, name in (("standard", "cil"), ("zero", "cil0"), ("two", "cil2")):
            D, E = direct_cil_subcomplex(X, kind), extend(X, by_name(name))
            out.keep(D, E)
            out.expect(D.cardinal() == E.cardinal(), f"{kind} on {X.cardinal()}")
        D, E = direct_sd_subcomplex(X), extend(X, by_name("sd"))
        out.keep(D, E)
        out.expect(D.cardinal() == E.cardinal(), f"sd on {X.cardinal()}")
    out.notes.append(f"{len(xs)} complexes")
    return out


@cache
def criterion_5() -> Outcome:
    out = Outcome(5, "stirling/chain identity")
    from math import factorial
    for n in range(-1, 9):
        for p in range(-1, n + 1):
            got = enumerate_strict_chains(n, p, anchored=True)
            out.expect(got == factorial(p + 1) * stirling2(n + 1, p + 1), f"chains({n},{p})")
    prod = M.matmul(M.bin(), M.breve_cad_plus())
    for i in range(-1, 9):
        for j in range(-1, 9):
            out.expect(prod(i, j) == M.cad_plus()(i, j), f"bin*breve-cad+ [{i},{j}]")
            # cad+ counts all chains, anchored or not
            if j <= i:
                out.expect(M.cad_plus()(i, j) == enumerate_strict_chains(i, j), f"cad+ [{i},{j}] vs chains")
    return out


@cache
def criterion_6() -> Outcome:
    out = Outcome(6, "inverse pairs")
    B, Bi, I = M.bin(), M.bin_inv(), M.identity()
    left, right = M.matmul(B, Bi), M.matmul(Bi, B)
    for i in range(-1, 65):
        for j in range(-1, 65):
            out.expect(left(i, j) == I(i, j) and right(i, j) == I(i, j), f"bin pair [{i},{j}]")
    C = M.breve_cil()
    prod = M.matmul(M.invert_triangular(C), C)
    for i in range(-1, 33):
        for j in range(-1, 33):
            out.expect(prod(i, j) == I(i, j), f"breve-cil pair [{i},{j}]")
    inv0 = M.iterate_operator(M.breve_cil0(), -1)
    for n in range(-1, 65):
        out.expect(inv0(n, n) == Fraction(1, n + 2), f"breve-cil0^-1 [{n},{n}]")
    return out


@cache
def criterion_7() -> Outcome:
    out = Outcome(7, "OEIS closed forms")
    for name, c in OEIS.items():
        for n in range(0, 51):
            out.expect(c.observed(n) == c.closed_form(n), f"{name} n={n}")
    # small rows once more from the geometric objects
    geo = {"cil": by_name("cil"), "cil0": by_name("cil0"), "cil2": by_name("cil2")}
    for n in range(0, 6):
        out.expect(geo["cil"].at(n - 1).size(1) == n * (3 * n - 1) // 2, f"pentagonal geometric n={n}")
        out.expect(geo["cil2"].at(n - 1).size(1) == n * (2 * n - 1), f"hexagonal geometric n={n}")
        out.expect(geo["cil0"].at(n).size(1) == 3 * n * (n + 1) // 2, f"matchstick geometric n={n}")
    return out


@cache
def criterion_8() -> Outcome:
    out = Outcome(8, "join/cone laws")
    xs = random_corpus(60, 4, seed=8) + [gamma(k) for k in range(-1, 5)] + [boundary(k) for k in range(-1, 5)]
    rng = random.Random(88)
    for X in xs:
        Y = rng.choice(xs)
        J, CL, CR = join(X, Y), cone_left(X), cone_right(X)
        out.keep(J, CL, CR)
        out.expect(J.cardinal() == M.seq_join(X.cardinal(), Y.cardinal()), f"join {X.cardinal()} {Y.cardinal()}")
        out.expect(CL.cardinal() == M.seq_cone(X.cardinal()), f"cone_left {X.cardinal()}")
        out.expect(CR.cardinal() == M.seq_cone(X.cardinal()), f"cone_right {X.cardinal()}")
    for n in range(-1, 12):
        for m in range(-1, 11 - n):
            J = join(gamma(n), gamma(m))
            out.keep(J)
            expected = tuple(binomial(n + m + 2, k + 1) for k in range(-1, n + m + 2))
            out.expect(J.cardinal() == expected, f"gamma({n}) join gamma({m})")
    return out


@cache
def criterion_9() -> Outcome:
    out = Outcome(9, "cone of subdivision")
    cad_rows = reference.table("cad+")
    for n in range(0, 6):
        r = cone_sd_check(n)
        expected = tuple(cad_rows.cell(n, m) for m in range(-1, 7))
        out.expect(r.passed, f"n={n} sides differ")
        out.expect(r.left == expected, f"n={n} cardinal {r.left}")
    out.keep(*(cone_left(extend(boundary(n), by_name("sd"))) for n in range(0, 6)))
    out.keep(*(extend(gamma(n), by_name("sd")) for n in range(0, 6)))
    return out


@cache
def criterion_10() -> Outcome:
    out = Outcome(10, "dup counterexample")
    dup = join(boundary(2), boundary(2))
    cyl = extend(boundary(2), by_name("cil2"))
    out.keep(dup, cyl)
    out.expect(dup.cardinal() == reference.DUP_BOUNDARY_2, f"dup {dup.cardinal()}")
    out.expect(cyl.cardinal() == reference.CIL2_BOUNDARY_2, f"cil2 {cyl.cardinal()}")
    out.expect(dup.cardinal() != cyl.cardinal(), "dup equals cil2")
    return out


@cache
def criterion_11() -> Outcome:
    out = Outcome(11, "validation closure")
    total = 0
    for k in range(1, 11):
        for X in CRITERIA[k]().complexes:
            total += 1
            report = validate(X)
            out.expect(report.ok, f"criterion {k}: {report.message}")
    out.expect(total > 0, "no complexes collected")
    out.notes.append(f"{total} complexes validated")
    return out


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 12)}


@pytest.mark.parametrize("k", range(1, 12))
def test_criterion(k, capsys):
    result = CRITERIA[k]()
    with capsys.disabled():
        print(f"\n{result.line()}")
    assert result.ok, result.line()


if __name__ == "__main__":
    failed = 0
    for k in range(1, 12):
        r = CRITERIA[k]()
        print(r.line())
        failed += not r.ok
    sys.exit(1 if failed else 0)
