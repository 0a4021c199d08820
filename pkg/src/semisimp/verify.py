"""Verification suites driven by ``semisimp verify`` and the acceptance tests.

Every suite returns a list of ``Check`` results sorted by id. Random
complexes come from a fixed seed so reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import seqmat as M
from . import reference
from .actions import (NAMES, by_name, cone_sd_check, direct_cil_subcomplex, direct_sd_subcomplex,
                      extend, interior_count)
from .combinat import binomial
from .sscore import AugSSet, boundary, gamma, join, random_subcomplex, validate

SEED = 20240601

# closed-form matrix for each shipped object
MATRIX_OF: dict[str, Callable[[], M.AugMatrix]] = {
    "yoneda": M.bin,
    "cil": M.cil,
    "cil0": M.cil0,
    "cil2": M.cil2,
    "sd": M.cad_plus,
}
BREVE_OF: dict[str, Callable[[], M.AugMatrix]] = {
    "yoneda": M.identity,
    "cil": M.breve_cil,
    "cil0": M.breve_cil0,
    "cil2": M.breve_cil2,
    "sd": M.breve_cad_plus,
}


@dataclass
class Check:
    id: str
    ok: bool
    detail: str = ""
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        text = f"{'PASS' if self.ok else 'FAIL'} {self.id}"
        return f"{text}: {self.detail}" if self.detail else text


def corpus(n: int, count: int, seed: int = SEED) -> list[AugSSet]:
    """gamma(n), boundary(n) and ``count`` random subcomplexes of gamma(n)."""
    rng = random.Random(seed * 100 + n)
    return [gamma(n), boundary(n)] + [random_subcomplex(n, rng) for _ in range(count)]


# ---------------------------------------------------------------- suites

def suite_commutation(n: int = 4, per_n: int = 8) -> list[Check]:
    out = []
    for k in range(0, n + 1):
        xs = corpus(k, per_n)
        for name in NAMES:
            Z, B = by_name(name), MATRIX_OF[name]()
            bad = []
            for idx, X in enumerate(xs):
                Y = extend(X, Z)
                if not validate(Y):
                    bad.append(f"#{idx} invalid")
                elif Y.cardinal() != M.triangle_action(X.cardinal(), B):
                    bad.append(f"#{idx} {Y.cardinal()} != {M.triangle_action(X.cardinal(), B)}")
                elif name == "yoneda" and Y.cardinal() != X.cardinal():
                    bad.append(f"#{idx} yoneda changed the cardinal")
            out.append(Check(f"commutation/{name}/n={k}", not bad,
                             f"{len(xs)} complexes" if not bad else "; ".join(bad[:3])))
    return sorted(out, key=lambda c: c.id)


def suite_tables() -> list[Check]:
    out = []
    for t in reference.TABLES:
        A = M.named(t.matrix)
        waived = reference.waivers_for(t.id)
        mismatches, notes = [], []
        (r0, r1), (c0, c1) = t.row_range, t.col_range
        for n in range(r0, r1 + 1):
            for m in range(c0, c1 + 1):
                got = A(n, m)
                if (n, m) in waived:
                    w = waived[(n, m)]
                    ok = got == w.formula and t.cell(n, m) == w.printed
                    notes.append(f"waiver [{n}]_{m}: printed {w.printed}, formula {w.formula}"
                                 f" ({w.reason}){'' if ok else ' -- NOT CONFIRMED'}")
                    if not ok:
                        mismatches.append(f"[{n}]_{m}")
                elif got != t.cell(n, m):
                    mismatches.append(f"[{n}]_{m}: expected {t.cell(n, m)}, got {got}")
        detail = f"{(r1 - r0 + 1) * (c1 - c0 + 1)} cells" if not mismatches else "; ".join(mismatches[:4])
        out.append(Check(f"tables/{t.id}", not mismatches, detail, notes))
    return sorted(out, key=lambda c: c.id)


def suite_oracles(n: int = 4, per_n: int = 6) -> list[Check]:
    out = []
    for k in range(0, n + 1):
        xs = corpus(k, per_n)
        for kind, name in (("standard", "cil"), ("zero", "cil0"), ("two", "cil2")):
            bad = [idx for idx, X in enumerate(xs)
                   if direct_cil_subcomplex(X, kind).cardinal() != extend(X, by_name(name)).cardinal()]
            out.append(Check(f"oracles/{kind}/n={k}", not bad, f"mismatch at {bad}" if bad else ""))
        bad = [idx for idx, X in enumerate(xs)
               if direct_sd_subcomplex(X).cardinal() != extend(X, by_name("sd")).cardinal()]
        out.append(Check(f"oracles/sd/n={k}", not bad, f"mismatch at {bad}" if bad else ""))
    for name in NAMES:
        Z, breve, full = by_name(name), BREVE_OF[name](), MATRIX_OF[name]()
        bad = []
        for k in range(-1, n + 1):
            inner = interior_count(Z, k)
            if inner != breve.row(k):
                bad.append(f"interior row {k}")
            rebuilt = M.ZERO
            for i in range(-1, k + 1):
                rebuilt = rebuilt + binomial(k + 1, i + 1) * interior_count(Z, i)
            if rebuilt != Z.at(k).cardinal() or rebuilt != full.row(k):
                bad.append(f"reconstruction row {k}")
        out.append(Check(f"oracles/interior/{name}", not bad, ", ".join(bad)))
    return sorted(out, key=lambda c: c.id)


def suite_nesting(n: int = 6) -> list[Check]:
    out = []
    c0, c1, c2 = by_name("cil0"), by_name("cil"), by_name("cil2")
    for k in range(-1, n + 1):
        a, b, c = c0.at(k), c1.at(k), c2.at(k)
        bad = []
        for m in range(-1, 2 * k + 2):
            sa = set(a.labels[m + 1]) if m + 1 < len(a.sizes) else set()
            sb = set(b.labels[m + 1]) if m + 1 < len(b.sizes) else set()
            sc = set(c.labels[m + 1]) if m + 1 < len(c.sizes) else set()
            if not (sa <= sb <= sc):
                bad.append(str(m))
        out.append(Check(f"nesting/n={k}", not bad, f"levels {','.join(bad)}" if bad else ""))
    dup = join(boundary(2), boundary(2)).cardinal()
    cyl = extend(boundary(2), c2).cardinal()
    ok = (dup == reference.DUP_BOUNDARY_2 and cyl == reference.CIL2_BOUNDARY_2 and dup != cyl)
    out.append(Check("nesting/dup-differs", ok, f"dup {dup} vs cil2 {cyl}"))
    return sorted(out, key=lambda c: c.id)


def suite_cone_sd(n: int = 5) -> list[Check]:
    out = []
    cad = M.cad_plus()
    for k in range(0, n + 1):
        r = cone_sd_check(k)
        ok = r.passed and r.left == cad.row(k)
        out.append(Check(f"cone-sd/n={k}", ok, str(r.left), list(r.level_lines)))
    return sorted(out, key=lambda c: c.id)


SUITES: dict[str, Callable[..., list[Check]]] = {
    "commutation": suite_commutation,
    "tables": suite_tables,
    "oracles": suite_oracles,
    "nesting": suite_nesting,
    "cone-sd": suite_cone_sd,
}


def run_suite(name: str, n: int | None = None) -> list[Check]:
    if name == "all":
        checks = []
        for key in SUITES:
            checks.extend(run_suite(key, n))
        return sorted(checks, key=lambda c: c.id)
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    if name == "tables" or n is None:
        return fn()
    return fn(n)


# ---------------------------------------------------------------- OEIS columns

@dataclass(frozen=True)
class OeisCheck:
    name: str
    description: str
    closed_form: Callable[[int], int]
    observed: Callable[[int], int]


OEIS: dict[str, OeisCheck] = {
    c.name: c for c in (
        OeisCheck("pentagonal", "cil[n-1]_1 = n(3n-1)/2",
                  lambda n: n * (3 * n - 1) // 2, lambda n: M.cil()(n - 1, 1)),
        OeisCheck("A006331", "cil[n]_2 = n(n+1)(2n+1)/3",
                  lambda n: n * (n + 1) * (2 * n + 1) // 3, lambda n: M.cil()(n, 2)),
        OeisCheck("A212415", "cil[n]_3 = (n-1)n(n+1)(5n+2)/24",
                  lambda n: (n - 1) * n * (n + 1) * (5 * n + 2) // 24, lambda n: M.cil()(n, 3)),
        OeisCheck("matchstick", "cil0[n]_1 = 3n(n+1)/2",
                  lambda n: 3 * n * (n + 1) // 2, lambda n: M.cil0()(n, 1)),
        OeisCheck("A210440", "cil0[n+1]_2 = 2n(n+1)(n+2)/3",
                  lambda n: 2 * n * (n + 1) * (n + 2) // 3, lambda n: M.cil0()(n + 1, 2)),
        OeisCheck("hexagonal", "cil2[n-1]_1 = n(2n-1)",
                  lambda n: n * (2 * n - 1), lambda n: M.cil2()(n - 1, 1)),
        OeisCheck("A002492", "cil2[n]_2 = 2n(n+1)(2n+1)/3",
                  lambda n: 2 * n * (n + 1) * (2 * n + 1) // 3, lambda n: M.cil2()(n, 2)),
    )
}


def run_oeis(name: str, count: int) -> Check:
    """Compare a matrix column with its closed form for n = 0..count."""
    c = OEIS[name]
    bad = [n for n in range(count + 1) if c.observed(n) != c.closed_form(n)]
    detail = f"{c.description}, n = 0..{count}"
    if bad:
        detail += f"; first mismatch at n = {bad[0]}: {c.observed(bad[0])} vs {c.closed_form(bad[0])}"
    return Check(f"oeis/{name}", not bad, detail)
