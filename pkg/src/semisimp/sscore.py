"""Finite augmented semi-simplicial sets.

Simplices are dense ordinals per level and each face map d_i is an integer
array, so ``faces[n][i][s]`` is the index of d_i(s) in level n - 1.
Levels run from -1 to ``dim``. A complex built as a subcomplex of
gamma(n) also carries ``ambient = n`` and the vertex tuple of every simplex
in ``labels``; the direct-construction oracles rely on that embedding.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence

from .errors import NotASubcomplex, ValidationError, VertexOutOfRange
from .seqmat import AugSequence


@dataclass(frozen=True, eq=False)
class AugSSet:
    """sizes[k] is the number of simplices at level k - 1."""

    sizes: tuple[int, ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]
    labels: Optional[tuple[tuple[Hashable, ...], ...]] = None
    ambient: Optional[int] = None

    def __post_init__(self):
        sizes = list(self.sizes)
        while sizes and sizes[-1] == 0:
            sizes.pop()
        object.__setattr__(self, "sizes", tuple(sizes))
        object.__setattr__(self, "faces", tuple(self.faces[:max(len(sizes) - 1, 0)]))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(tuple(lv) for lv in self.labels[:len(sizes)]))

    @property
    def dim(self) -> int | float:
        """Top nonempty level; -inf for the empty complex."""
        return len(self.sizes) - 2 if self.sizes else -math.inf

    @property
    def is_empty(self) -> bool:
        return not self.sizes

    def size(self, n: int) -> int:
        k = n + 1
        return self.sizes[k] if 0 <= k < len(self.sizes) else 0

    def face(self, n: int, i: int, s: int) -> int:
        """Index of d_i applied to simplex s of level n."""
        return self.faces[n][i][s]

    def label(self, n: int, s: int) -> Hashable:
        return self.labels[n + 1][s] if self.labels is not None else (n, s)

    def levels(self) -> range:
        return range(-1, len(self.sizes) - 1)

    def cardinal(self) -> AugSequence:
        return AugSequence(self.sizes)

    def strip_labels(self) -> "AugSSet":
        return AugSSet(self.sizes, self.faces)

    def same_structure(self, other: "AugSSet") -> bool:
        return self.sizes == other.sizes and self.faces == other.faces

    def __repr__(self) -> str:
        return f"AugSSet(cardinal={tuple(self.sizes)})"


EMPTY = AugSSet((), ())


def cardinal(X: AugSSet) -> AugSequence:
    return X.cardinal()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    message: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def validate(X: AugSSet) -> ValidationReport:
    """Check face-map shapes, ranges and d_i d_j = d_{j-1} d_i for i < j."""
    if any(s < 0 for s in X.sizes):
        return ValidationReport(False, "negative level size")
    if len(X.faces) != max(len(X.sizes) - 1, 0):
        return ValidationReport(False, "face table count does not match levels")
    for n in range(0, len(X.sizes) - 1):
        maps = X.faces[n]
        if len(maps) != n + 1:
            return ValidationReport(False, f"level {n} has {len(maps)} face maps, expected {n + 1}")
        below = X.size(n - 1)
        for i, d in enumerate(maps):
            if len(d) != X.size(n):
                return ValidationReport(False, f"d_{i} on level {n} has wrong length")
            for s, t in enumerate(d):
                if not 0 <= t < below:
                    return ValidationReport(False, f"d_{i}({n}:{s}) = {t} out of range")
    for n in range(1, len(X.sizes) - 1):
        upper, lower = X.faces[n], X.faces[n - 1]
        for j in range(1, n + 1):
            for i in range(j):
                for s in range(X.size(n)):
                    if lower[i][upper[j][s]] != lower[j - 1][upper[i][s]]:
                        return ValidationReport(
                            False, f"d_{i} d_{j} != d_{j - 1} d_{i} on simplex {s} of level {n}")
    if X.labels is not None and [len(lv) for lv in X.labels] != list(X.sizes):
        return ValidationReport(False, "label table does not match level sizes")
    return ValidationReport(True)


def require_valid(X: AugSSet) -> AugSSet:
    report = validate(X)
    if not report:
        raise ValidationError(report.message)
    return X


@dataclass(frozen=True)
class SSetMap:
    """Levelwise map; components[k] maps level k - 1 of source into target."""

    source: AugSSet
    target: AugSSet
    components: tuple[tuple[int, ...], ...] = field(repr=False)

    def __call__(self, n: int, s: int) -> int:
        return self.components[n + 1][s]

    def validate(self) -> ValidationReport:
        for n in self.source.levels():
            comp = self.components[n + 1] if n + 1 < len(self.components) else ()
            if len(comp) != self.source.size(n):
                return ValidationReport(False, f"component {n} has wrong length")
            if any(not 0 <= t < self.target.size(n) for t in comp):
                return ValidationReport(False, f"component {n} out of range")
        for n in range(0, len(self.source.sizes) - 1):
            for i in range(n + 1):
                for s in range(self.source.size(n)):
                    lhs = self(n - 1, self.source.face(n, i, s))
                    rhs = self.target.face(n, i, self(n, s))
                    if lhs != rhs:
                        return ValidationReport(False, f"f d_{i} != d_{i} f at level {n}, simplex {s}")
        return ValidationReport(True)

    def is_injective(self) -> bool:
        return all(len(set(c)) == len(c) for c in self.components)


# ---------------------------------------------------------------- builders

def from_labeled_levels(levels: Sequence[Sequence[Hashable]], face_of, ambient: int | None = None) -> AugSSet:
    """Build a complex from per-level label lists and a label-level face function.

    ``face_of(label, i)`` must return a label present one level down.
    """
    index = [{lab: k for k, lab in enumerate(lv)} for lv in levels]
    faces = []
    for n in range(0, len(levels) - 1):
        below = index[n]
        faces.append(tuple(tuple(below[face_of(lab, i)] for lab in levels[n + 1])
                           for i in range(n + 1)))
    return AugSSet(tuple(len(lv) for lv in levels), tuple(faces),
                   labels=tuple(tuple(lv) for lv in levels), ambient=ambient)


def delete_vertex(t: tuple, i: int) -> tuple:
    return t[:i] + t[i + 1:]


def _from_vertex_sets(simplices: Iterable[Iterable[int]], ambient: int) -> AugSSet:
    by_level: dict[int, set[tuple[int, ...]]] = {}
    for s in simplices:
        t = tuple(sorted(s))
        by_level.setdefault(len(t) - 1, set()).add(t)
    if not by_level:
        return AugSSet((), (), labels=(), ambient=ambient)
    top = max(by_level)
    levels = [sorted(by_level.get(n, ())) for n in range(-1, top + 1)]
    return from_labeled_levels(levels, delete_vertex, ambient=ambient)


def gamma(n: int) -> AugSSet:
    """The standard augmented n-simplex: all subsets of {0..n}."""
    if n < -1:
        raise ValueError("gamma(n) needs n >= -1")
    levels = [list(combinations(range(n + 1), p + 1)) for p in range(-1, n + 1)]
    return from_labeled_levels(levels, delete_vertex, ambient=n)


def boundary(n: int) -> AugSSet:
    """gamma(n) without its top simplex; boundary(-1) is the empty complex."""
    if n < -1:
        raise ValueError("boundary(n) needs n >= -1")
    levels = [list(combinations(range(n + 1), p + 1)) for p in range(-1, n)]
    return from_labeled_levels(levels, delete_vertex, ambient=n)


def subcomplex_of_gamma(n: int, generators: Iterable[Iterable[int]]) -> AugSSet:
    """Smallest face-closed part of gamma(n) containing the generators (and the empty simplex)."""
    closure: set[tuple[int, ...]] = {()}
    for g in generators:
        t = tuple(sorted(set(g)))
        if any(not 0 <= v <= n for v in t):
            raise VertexOutOfRange(f"generator {t} not inside {{0..{n}}}")
        for k in range(len(t) + 1):
            closure.update(combinations(t, k))
    return _from_vertex_sets(closure, ambient=n)


def hexagon() -> AugSSet:
    """The 6-cycle with vertices 0..5; cardinal (1, 6, 6)."""
    return subcomplex_of_gamma(5, [(i, (i + 1) % 6) for i in range(6)])


def random_subcomplex(n: int, rng: random.Random, max_generators: int = 6) -> AugSSet:
    """Closure of a few random vertex subsets of {0..n}."""
    if n < 0:
        return gamma(-1)
    gens = []
    for _ in range(rng.randint(0, max_generators)):
        k = rng.randint(1, n + 1)
        gens.append(rng.sample(range(n + 1), k))
    return subcomplex_of_gamma(n, gens)


def vertex_sets(X: AugSSet) -> set[frozenset]:
    """All simplices of an embedded complex as vertex sets."""
    check_embedding(X)
    return {frozenset(lab) for lv in X.labels for lab in lv}


def check_embedding(X: AugSSet) -> int:
    """Return the ambient n if X is a genuine subcomplex of gamma(n), else raise."""
    if X.ambient is None or X.labels is None:
        raise NotASubcomplex("complex carries no embedding into a standard simplex")
    n = X.ambient
    for lvl in X.levels():
        seen = set()
        for lab in X.labels[lvl + 1]:
            if (not isinstance(lab, tuple) or len(lab) != lvl + 1
                    or list(lab) != sorted(set(lab)) or any(not 0 <= v <= n for v in lab)):
                raise NotASubcomplex(f"bad vertex label {lab!r} at level {lvl}")
            if lab in seen:
                raise NotASubcomplex(f"repeated simplex {lab!r}")
            seen.add(lab)
    for lvl in range(0, len(X.sizes) - 1):
        for i in range(lvl + 1):
            for s, lab in enumerate(X.labels[lvl + 1]):
                if X.labels[lvl][X.face(lvl, i, s)] != delete_vertex(lab, i):
                    raise NotASubcomplex(f"face d_{i} of {lab!r} is not the vertex deletion")
    return n


# ---------------------------------------------------------------- join and cones

def join(X: AugSSet, Y: AugSSet) -> AugSSet:
    """(X ⊞ Y)_m = disjoint union of X_p × Y_q over p + q = m - 1.

    Ordering inside a level is lexicographic in (p, index in X_p, index in Y_q).
    Faces d_i with i <= p act on the X part, the rest on the Y part.
    When both inputs sit in standard simplices, so does the join (Y's
    vertices are shifted past X's).
    """
    if X.is_empty or Y.is_empty:
        return EMPTY
    dx, dy = X.dim, Y.dim
    top = dx + dy + 1
    # offsets[m + 1][p] = first index of the X_p × Y_q block inside level m
    offsets: list[dict[int, int]] = []
    sizes = []
    for m in range(-1, top + 1):
        off, pos = {}, 0
        for p in range(-1, m + 1):
            q = m - 1 - p
            off[p] = pos
            pos += X.size(p) * Y.size(q)
        offsets.append(off)
        sizes.append(pos)

    faces = []
    for m in range(0, top + 1):
        maps = [[0] * sizes[m + 1] for _ in range(m + 1)]
        for p in range(-1, m + 1):
            q = m - 1 - p
            nx, ny = X.size(p), Y.size(q)
            if not nx or not ny:
                continue
            base = offsets[m + 1][p]
            for i in range(m + 1):
                d = maps[i]
                if i <= p:
                    tgt = offsets[m][p - 1]
                    fx = X.faces[p][i]
                    for a in range(nx):
                        row = tgt + fx[a] * ny
                        start = base + a * ny
                        for b in range(ny):
                            d[start + b] = row + b
                else:
                    tgt = offsets[m][p]
                    fy = Y.faces[q][i - p - 1]
                    ny_below = Y.size(q - 1)
                    for a in range(nx):
                        start = base + a * ny
                        row = tgt + a * ny_below
                        for b in range(ny):
                            d[start + b] = row + fy[b]
        faces.append(tuple(tuple(d) for d in maps))

    labels, ambient = None, None
    if X.labels is not None and Y.labels is not None:
        embedded = X.ambient is not None and Y.ambient is not None
        shift = X.ambient + 1 if embedded else 0
        labels = []
        for m in range(-1, top + 1):
            lv = []
            for p in range(-1, m + 1):
                q = m - 1 - p
                for a in range(X.size(p)):
                    for b in range(Y.size(q)):
                        la, lb = X.label(p, a), Y.label(q, b)
                        lv.append(la + tuple(v + shift for v in lb) if embedded else (la, lb))
            labels.append(tuple(lv))
        if embedded:
            ambient = X.ambient + Y.ambient + 1
    return AugSSet(tuple(sizes), tuple(faces), labels=labels, ambient=ambient)


def cone_left(X: AugSSet) -> AugSSet:
    return join(gamma(0), X)


def cone_right(X: AugSSet) -> AugSSet:
    return join(X, gamma(0))
