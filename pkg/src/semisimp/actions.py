"""Co-semi-simplicial objects and the right action X ▷̃ Z.

A co-semi-simplicial object assigns a finite complex ``at(n)`` to every
n >= -1, together with coface maps ``coface(n, i): at(n-1) -> at(n)``
induced by the vertex inclusion j -> j (j < i), j -> j + 1 (j >= i).
The shipped objects describe their simplices by labels (vertex tuples,
pairs of vertex tuples, or chains of vertex tuples) and cofaces push
labels forward, so every structure map is a relabelling.

``extend`` glues one copy of ``Z.at(n)`` per n-simplex of X and quotients
by the coface relation with a union-find.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Optional

from .combinat import iter_strict_chains
from .errors import NonRegular, NotASubcomplex, SemisimpError
from .seqmat import AugMatrix, AugSequence, seq_cone
from .sscore import (EMPTY, AugSSet, SSetMap, ValidationReport, boundary, check_embedding,
                     cone_left, delete_vertex, from_labeled_levels, gamma, validate)

Label = Hashable


def push_vertex(v: int, i: int) -> int:
    """The i-th coface of the simplex category on a single vertex."""
    return v if v < i else v + 1


class CoSSObject:
    """Lazily built co-semi-simplicial object.

    ``build_level(n)`` returns at(n); ``build_coface(n, i)`` returns the
    component arrays of coface(n, i), one per level of at(n - 1). Both are
    called at most once per argument, under a lock.
    """

    def __init__(self, name: str,
                 build_level: Callable[[int], AugSSet],
                 build_coface: Callable[[int, int], tuple[tuple[int, ...], ...]],
                 regular: bool = True):
        self.name = name
        self.regular = regular
        self._build_level = build_level
        self._build_coface = build_coface
        self._levels: dict[int, AugSSet] = {}
        self._cofaces: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}
        self._lock = threading.RLock()

    def at(self, n: int) -> AugSSet:
        if n < -1:
            raise ValueError("levels start at -1")
        X = self._levels.get(n)
        if X is None:
            with self._lock:
                X = self._levels.get(n)
                if X is None:
                    X = self._build_level(n)
                    self._levels[n] = X
        return X

    def coface_arrays(self, n: int, i: int) -> tuple[tuple[int, ...], ...]:
        if not 0 <= i <= n:
            raise ValueError(f"coface index {i} out of range for n = {n}")
        key = (n, i)
        arr = self._cofaces.get(key)
        if arr is None:
            with self._lock:
                arr = self._cofaces.get(key)
                if arr is None:
                    arr = self._build_coface(n, i)
                    self._cofaces[key] = arr
        return arr

    def coface(self, n: int, i: int) -> SSetMap:
        return SSetMap(self.at(n - 1), self.at(n), self.coface_arrays(n, i))

    def cardinal_matrix(self) -> AugMatrix:
        """Geometric cardinal matrix: row n is |at(n)|."""
        return AugMatrix(lambda n, m: self.at(n).size(m), name=f"|{self.name}|")

    def __repr__(self) -> str:
        return f"CoSSObject({self.name})"


def _labeled(name: str, labels: Callable[[int], list[list[Label]]],
             face_of: Callable[[Label, int], Label],
             push: Callable[[Label, int], Label]) -> CoSSObject:
    indexes: dict[int, list[dict]] = {}

    def build_level(n: int) -> AugSSet:
        levels = labels(n)
        indexes[n] = [{lab: k for k, lab in enumerate(lv)} for lv in levels]
        return from_labeled_levels(levels, face_of)

    def build_coface(n: int, i: int):
        source, target = obj.at(n - 1), obj.at(n)
        idx = indexes[n]
        out = []
        for q in source.levels():
            out.append(tuple(idx[q + 1][push(lab, i)] for lab in source.labels[q + 1]))
        return tuple(out)

    obj = CoSSObject(name, build_level, build_coface, regular=True)
    return obj


def _push_tuple(t: tuple[int, ...], i: int) -> tuple[int, ...]:
    return tuple(push_vertex(v, i) for v in t)


# ---------------------------------------------------------------- shipped objects

def _gamma_labels(n: int) -> list[list[tuple]]:
    return [list(combinations(range(n + 1), p + 1)) for p in range(-1, n + 1)]


def cosimp_yoneda() -> CoSSObject:
    """n -> gamma(n)."""
    return _labeled("yoneda", _gamma_labels, delete_vertex, _push_tuple)


def weak_precedes(s: tuple, t: tuple) -> bool:
    """σ ≼ τ: every vertex of σ is <= every vertex of τ (so they share at most one)."""
    return not s or not t or s[-1] <= t[0]


def strict_precedes(s: tuple, t: tuple) -> bool:
    """σ ≺ τ: every vertex of σ is < every vertex of τ."""
    return not s or not t or s[-1] < t[0]


def _pair_labels(rel: Optional[Callable[[tuple, tuple], bool]]):
    def labels(n: int) -> list[list[tuple]]:
        subsets = _gamma_labels(n)
        levels = []
        for m in range(-1, 2 * n + 2):
            lv = []
            for p in range(-1, m + 1):
                q = m - 1 - p
                if p > n or q > n:
                    continue
                for s in subsets[p + 1]:
                    for t in subsets[q + 1]:
                        if rel is None or rel(s, t):
                            lv.append((s, t))
            levels.append(lv)
        while levels and not levels[-1]:
            levels.pop()
        return levels
    return labels


def _pair_face(pair: tuple, i: int) -> tuple:
    s, t = pair
    p = len(s) - 1
    if i <= p:
        return (delete_vertex(s, i), t)
    return (s, delete_vertex(t, i - p - 1))


def _pair_push(pair: tuple, i: int) -> tuple:
    s, t = pair
    return (_push_tuple(s, i), _push_tuple(t, i))


def cosimp_cil() -> CoSSObject:
    """Standard cylinder: pairs (σ, τ) with σ ≼ τ."""
    return _labeled("cil", _pair_labels(weak_precedes), _pair_face, _pair_push)


def cosimp_cil0() -> CoSSObject:
    """Cylinder without vertical edges: pairs with σ ≺ τ."""
    return _labeled("cil0", _pair_labels(strict_precedes), _pair_face, _pair_push)


def cosimp_cil2() -> CoSSObject:
    """Join square gamma(n) ⊞ gamma(n): all pairs."""
    return _labeled("cil2", _pair_labels(None), _pair_face, _pair_push)


def _chain_labels(n: int) -> list[list[tuple]]:
    return [sorted(tuple(tuple(sorted(member)) for member in chain)
                   for chain in iter_strict_chains(n, m))
            for m in range(-1, n + 1)]


def _chain_push(chain: tuple, i: int) -> tuple:
    return tuple(_push_tuple(member, i) for member in chain)


def cosimp_sd() -> CoSSObject:
    """Barycentric subdivision: strict chains of nonempty vertex sets; d_i drops member i."""
    return _labeled("sd", _chain_labels, delete_vertex, _chain_push)


_FACTORIES = {
    "yoneda": cosimp_yoneda,
    "cil": cosimp_cil,
    "cil0": cosimp_cil0,
    "cil2": cosimp_cil2,
    "sd": cosimp_sd,
}
_SHARED: dict[str, CoSSObject] = {}
_SHARED_LOCK = threading.Lock()

NAMES = tuple(_FACTORIES)


def by_name(name: str) -> CoSSObject:
    """Shared (cached) instance of a shipped object."""
    if name not in _FACTORIES:
        raise KeyError(f"unknown co-semi-simplicial object {name!r}; choose from {', '.join(NAMES)}")
    with _SHARED_LOCK:
        if name not in _SHARED:
            _SHARED[name] = _FACTORIES[name]()
        return _SHARED[name]


def check_cosimplicial(Z: CoSSObject, n_max: int) -> ValidationReport:
    """Validate levels, coface maps, injectivity (if regular) and the coface identities."""
    for n in range(-1, n_max + 1):
        r = validate(Z.at(n))
        if not r:
            return ValidationReport(False, f"at({n}): {r.message}")
    for n in range(0, n_max + 1):
        for i in range(n + 1):
            f = Z.coface(n, i)
            r = f.validate()
            if not r:
                return ValidationReport(False, f"coface({n},{i}): {r.message}")
            if Z.regular and not f.is_injective():
                return ValidationReport(False, f"coface({n},{i}) is not injective")
    for n in range(0, n_max):
        for j in range(1, n + 2):
            for i in range(j):
                a1, a2 = Z.coface_arrays(n, i), Z.coface_arrays(n + 1, j)
                b1, b2 = Z.coface_arrays(n, j - 1), Z.coface_arrays(n + 1, i)
                for q in Z.at(n - 1).levels():
                    for z in range(Z.at(n - 1).size(q)):
                        if a2[q + 1][a1[q + 1][z]] != b2[q + 1][b1[q + 1][z]]:
                            return ValidationReport(
                                False, f"coface identity fails for n={n}, i={i}, j={j}")
    return ValidationReport(True)


# ---------------------------------------------------------------- the action

def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _union(parent: list[int], a: int, b: int) -> None:
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        # the smaller id is always the root, so roots are canonical representatives
        if ra < rb:
            parent[rb] = ra
        else:
            parent[ra] = rb


def extend(X: AugSSet, Z: CoSSObject) -> AugSSet:
    """X ▷̃ Z: copies of Z.at(n) indexed by X_n, glued along the cofaces."""
    if not Z.regular:
        raise NonRegular(f"{Z.name} is not regular")
    if X.is_empty:
        return EMPTY
    d = X.dim
    pieces = {n: Z.at(n) for n in range(-1, d + 1)}
    top = max(len(P.sizes) for P in pieces.values()) - 2

    # base[q + 1][(n, s)] = first id of the copy for simplex s of X_n in output level q
    base: list[dict[tuple[int, int], int]] = []
    totals: list[int] = []
    for q in range(-1, top + 1):
        off, pos = {}, 0
        for n in range(-1, d + 1):
            width = pieces[n].size(q)
            for s in range(X.size(n)):
                off[(n, s)] = pos
                pos += width
        base.append(off)
        totals.append(pos)
    parents = [list(range(t)) for t in totals]

    for n in range(0, d + 1):
        lower = pieces[n - 1]
        for i in range(n + 1):
            arrays = Z.coface_arrays(n, i)
            dx = X.faces[n][i]
            for s in range(X.size(n)):
                t = dx[s]
                for q in lower.levels():
                    arr = arrays[q + 1]
                    if not arr:
                        continue
                    parent = parents[q + 1]
                    b_hi, b_lo = base[q + 1][(n, s)], base[q + 1][(n - 1, t)]
                    for z, w in enumerate(arr):
                        _union(parent, b_hi + w, b_lo + z)

    # dense re-indexing in canonical (smallest member) order
    classes: list[list[int]] = []
    roots: list[list[int]] = []
    for q in range(-1, top + 1):
        parent = parents[q + 1]
        root_of = [_find(parent, x) for x in range(len(parent))]
        dense, cls = {}, []
        for x, r in enumerate(root_of):
            if r not in dense:
                dense[r] = len(dense)
            cls.append(dense[r])
        roots.append(root_of)
        classes.append(cls)

    sizes = [max(c, default=-1) + 1 for c in classes]
    faces = []
    for q in range(0, top + 1):
        cls_here, cls_below = classes[q + 1], classes[q]
        maps = [[-1] * sizes[q + 1] for _ in range(q + 1)]
        for n in range(-1, d + 1):
            P = pieces[n]
            if P.size(q) == 0:
                continue
            pf = P.faces[q]
            for s in range(X.size(n)):
                b_hi, b_lo = base[q + 1][(n, s)], base[q][(n, s)]
                for z in range(P.size(q)):
                    c = cls_here[b_hi + z]
                    for j in range(q + 1):
                        target = cls_below[b_lo + pf[j][z]]
                        cur = maps[j][c]
                        if cur == -1:
                            maps[j][c] = target
                        elif cur != target:
                            raise SemisimpError(
                                f"induced face d_{j} is not well defined on level {q}")
        faces.append(tuple(tuple(m) for m in maps))
    return AugSSet(tuple(sizes), tuple(faces))


def cylinder(X: AugSSet) -> AugSSet:
    return extend(X, by_name("cil"))


def cylinder0(X: AugSSet) -> AugSSet:
    return extend(X, by_name("cil0"))


def cylinder2(X: AugSSet) -> AugSSet:
    return extend(X, by_name("cil2"))


def subdivision(X: AugSSet) -> AugSSet:
    return extend(X, by_name("sd"))


# ---------------------------------------------------------------- oracles

def _restrict(Y: AugSSet, keep: Callable[[Label], bool]) -> AugSSet:
    """Sub-complex of a labelled complex cut out by a face-closed predicate."""
    levels = [[lab for lab in lv if keep(lab)] for lv in Y.labels]
    while levels and not levels[-1]:
        levels.pop()
    if not levels:
        return EMPTY
    index = [{lab: k for k, lab in enumerate(lv)} for lv in Y.labels]
    faces = []
    new_index = [{lab: k for k, lab in enumerate(lv)} for lv in levels]
    for n in range(0, len(levels) - 1):
        maps = []
        for i in range(n + 1):
            d = Y.faces[n][i]
            old_below = Y.labels[n]
            maps.append(tuple(new_index[n][old_below[d[index[n + 1][lab]]]] for lab in levels[n + 1]))
        faces.append(tuple(maps))
    return AugSSet(tuple(len(lv) for lv in levels), tuple(faces), labels=tuple(map(tuple, levels)))


def _simplex_sets(X: AugSSet) -> set[frozenset]:
    check_embedding(X)
    return {frozenset(lab) for lv in X.labels for lab in lv}


_PAIR_KINDS = {"standard": "cil", "zero": "cil0", "two": "cil2"}


def direct_cil_subcomplex(X: AugSSet, kind: str = "standard") -> AugSSet:
    """Pairs (σ, τ) over the ambient simplex whose union lies in some simplex of X."""
    if kind not in _PAIR_KINDS:
        raise ValueError(f"kind must be one of {', '.join(_PAIR_KINDS)}")
    if X.is_empty:
        return EMPTY
    n = check_embedding(X)
    simplices = _simplex_sets(X)
    Y = by_name(_PAIR_KINDS[kind]).at(n)
    return _restrict(Y, lambda pair: frozenset(pair[0]) | frozenset(pair[1]) in simplices)


def direct_sd_subcomplex(X: AugSSet) -> AugSSet:
    """Chains of vertex sets each of which is a simplex of X."""
    if X.is_empty:
        return EMPTY
    n = check_embedding(X)
    simplices = _simplex_sets(X)
    Y = by_name("sd").at(n)
    return _restrict(Y, lambda chain: all(frozenset(m) in simplices for m in chain))


def interior_count(Z: CoSSObject, n: int) -> AugSequence:
    """Per level, simplices of Z.at(n) outside every coface image."""
    if not Z.regular:
        raise NonRegular(f"{Z.name} is not regular")
    Y = Z.at(n)
    if n == -1:
        return Y.cardinal()
    hit: list[set[int]] = [set() for _ in Y.sizes]
    for i in range(n + 1):
        for q, arr in enumerate(Z.coface_arrays(n, i)):
            hit[q].update(arr)
    return AugSequence(size - len(h) for size, h in zip(Y.sizes, hit))


# ---------------------------------------------------------------- cone of subdivision

@dataclass(frozen=True)
class ConeSdReport:
    n: int
    left: AugSequence
    right: AugSequence
    left_valid: bool
    right_valid: bool
    level_lines: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.left_valid and self.right_valid and self.left == self.right

    def render(self) -> str:
        head = f"cone-sd n={self.n}: {'PASS' if self.passed else 'FAIL'}"
        return "\n".join((head,) + self.level_lines)


def cone_sd_check(n: int) -> ConeSdReport:
    """Compare cone_left(Sd(boundary(n))) with Sd(gamma(n)) levelwise."""
    if n < 0:
        raise ValueError("cone_sd_check needs n >= 0")
    left = cone_left(subdivision(boundary(n)))
    right = subdivision(gamma(n))
    lc, rc = left.cardinal(), right.cardinal()
    top = max(len(left.sizes), len(right.sizes)) - 2
    lines = tuple(f"  level {m}: {lc[m]} vs {rc[m]} {'ok' if lc[m] == rc[m] else 'MISMATCH'}"
                  for m in range(-1, top + 1))
    return ConeSdReport(n, lc, rc, bool(validate(left)), bool(validate(right)), lines)


def expected_cone_cardinal(X: AugSSet) -> AugSequence:
    return seq_cone(X.cardinal())
