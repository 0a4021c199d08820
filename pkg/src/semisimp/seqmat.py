"""Augmented integer sequences and lazily evaluated augmented matrices.

Both are indexed from -1. Scalars are Python ints or ``Fraction``; any
fraction with denominator 1 is collapsed back to an int, so integer
results compare and print as integers.

A matrix is an entry function plus two support functions. ``rows(i)``
returns bounds ``(lo, hi)`` such that row i vanishes outside ``[lo, hi]``;
``hi is None`` means the row may be infinite. ``cols(j)`` does the same for
columns. Sums in products only run over the intersection of supports,
which is what makes products of infinite matrices computable.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import cache
from typing import Callable, Iterable, Optional, Sequence, Union

from . import combinat
from .combinat import binomial
from .errors import BothInfinite, DivergentSum, InfiniteInput, SingularDiagonal, UndecidableComparison

Scalar = Union[int, Fraction]
Bounds = tuple[int, Optional[int]]

# indices probed when deriving row/column finiteness from support functions
_PROBE = range(-1, 17)


def scalar(x) -> Scalar:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return scalar(Fraction(x))
    raise TypeError(f"not an exact scalar: {x!r}")


def _div(a: Scalar, b: Scalar) -> Scalar:
    return scalar(Fraction(a) / b)


# ---------------------------------------------------------------- sequences

class AugSequence:
    """Sequence a_{-1}, a_0, a_1, ...

    Finite sequences store entries up to their dimension. Infinite ones
    hold a generator ``fn(i)`` and have an unknown tail; anything that
    needs finiteness refuses them.
    """

    __slots__ = ("_entries", "_fn")

    def __init__(self, entries: Iterable = (), fn: Callable[[int], Scalar] | None = None):
        if fn is not None:
            self._entries = None
            self._fn = fn
            return
        vals = [scalar(x) for x in entries]
        while vals and vals[-1] == 0:
            vals.pop()
        self._entries = tuple(vals)
        self._fn = None

    @classmethod
    def lazy(cls, fn: Callable[[int], Scalar], dim: int | None = None) -> "AugSequence":
        """Sequence given by ``fn``; with ``dim`` it is known to vanish past dim."""
        if dim is not None:
            return cls(fn(i) for i in range(-1, dim + 1))
        cache_: dict[int, Scalar] = {}

        def memo(i: int) -> Scalar:
            v = cache_.get(i)
            if v is None:
                v = cache_[i] = scalar(fn(i))
            return v

        return cls(fn=memo)

    @property
    def is_finite(self) -> bool:
        return self._entries is not None

    @property
    def tail(self) -> str:
        return "zero" if self.is_finite else "unknown"

    @property
    def dim(self) -> float | int:
        """Largest index with a nonzero entry; -inf for the zero sequence."""
        if not self.is_finite:
            raise InfiniteInput("dimension of a sequence with unknown tail")
        return len(self._entries) - 2 if self._entries else -math.inf

    def __getitem__(self, i: int) -> Scalar:
        if i < -1:
            return 0
        if self._entries is None:
            return self._fn(i)
        k = i + 1
        return self._entries[k] if k < len(self._entries) else 0

    @property
    def entries(self) -> tuple[Scalar, ...]:
        """Entries from index -1 up to the dimension (finite sequences only)."""
        if not self.is_finite:
            raise InfiniteInput("entries of a sequence with unknown tail")
        return self._entries

    def window(self, lo: int = -1, hi: int = 8) -> tuple[Scalar, ...]:
        return tuple(self[i] for i in range(lo, hi + 1))

    def __eq__(self, other) -> bool:
        if isinstance(other, (tuple, list)):
            other = AugSequence(other)
        if not isinstance(other, AugSequence):
            return NotImplemented
        if not (self.is_finite and other.is_finite):
            raise UndecidableComparison("cannot compare sequences with unknown tails")
        return self._entries == other._entries

    def __hash__(self):
        if not self.is_finite:
            raise TypeError("unhashable: infinite sequence")
        return hash(self._entries)

    def _combine(self, other: "AugSequence", op) -> "AugSequence":
        if self.is_finite and other.is_finite:
            n = max(len(self._entries), len(other._entries))
            return AugSequence(op(self[i], other[i]) for i in range(-1, n - 1))
        return AugSequence.lazy(lambda i: op(self[i], other[i]))

    def __add__(self, other: "AugSequence") -> "AugSequence":
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other: "AugSequence") -> "AugSequence":
        return self._combine(other, lambda x, y: x - y)

    def __neg__(self) -> "AugSequence":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "AugSequence":
        if self.is_finite:
            return AugSequence(c * x for x in self._entries)
        return AugSequence.lazy(lambda i: c * self[i])

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __repr__(self) -> str:
        if not self.is_finite:
            head = ", ".join(str(self[i]) for i in range(-1, 6))
            return f"AugSequence({head}, ...?)"
        return f"AugSequence({', '.join(str(x) for x in self._entries)})"

    def __str__(self) -> str:
        if not self.is_finite:
            return "(" + ", ".join(str(self[i]) for i in range(-1, 8)) + ", ...)"
        return "(" + ", ".join(str(x) for x in self._entries + (0,)) + ", ...)"


def seq(*entries) -> AugSequence:
    return AugSequence(entries)


def unit(k: int) -> AugSequence:
    """The basis sequence 1_k."""
    return AugSequence([0] * (k + 1) + [1])


ZERO = AugSequence()
CONE = AugSequence((1, 1))  # 1_{-1} + 1_0, the cardinal of a point


def gamma_seq(n: int) -> AugSequence:
    """Cardinal of the standard n-simplex: binom(n+1, k+1)."""
    return AugSequence(binomial(n + 1, k + 1) for k in range(-1, n + 1))


def boundary_seq(n: int) -> AugSequence:
    return gamma_seq(n) - unit(n) if n >= -1 else ZERO


def seq_join(a: AugSequence, b: AugSequence) -> AugSequence:
    """(a ⊞ b)_m = sum over p + q = m - 1 of a_p b_q."""
    if a.is_finite and b.is_finite:
        if not a.entries or not b.entries:
            return ZERO
        out = [0] * (len(a.entries) + len(b.entries))
        for p, x in enumerate(a.entries):
            if x:
                for q, y in enumerate(b.entries):
                    out[p + q] += x * y
        # index bookkeeping: (p-1) + (q-1) = m - 1  =>  m + 1 = p + q
        return AugSequence(out)
    if not a.is_finite and not b.is_finite:
        raise BothInfinite("join of two sequences with unknown tails")
    fin, inf = (a, b) if a.is_finite else (b, a)
    if not fin.entries:
        return ZERO
    top = fin.dim
    return AugSequence.lazy(
        lambda m: sum(fin[p] * inf[m - 1 - p] for p in range(-1, top + 1) if m - 1 - p >= -1))


def shift(b: AugSequence, k: int) -> AugSequence:
    """D_k: (D_k b)_i = b_{i+k}, zero where i + k < -1."""
    if b.is_finite:
        if k >= 0:
            return AugSequence(b.entries[k:])
        return AugSequence([0] * (-k) + list(b.entries))
    return AugSequence.lazy(lambda i: b[i + k] if i + k >= -1 else 0)


def seq_cone(c: AugSequence) -> AugSequence:
    """con(c) = c + D_{-1}(c)."""
    return c + shift(c, -1)


# ---------------------------------------------------------------- matrices

class AugMatrix:
    """Lazy matrix over {-1, 0, 1, ...}^2 with memoized entries."""

    def __init__(self, entry: Callable[[int, int], Scalar], *,
                 rows: Callable[[int], Bounds] | None = None,
                 cols: Callable[[int], Bounds] | None = None,
                 triangle: str | None = None,
                 name: str | None = None,
                 interior: "AugMatrix | Callable[[], AugMatrix] | None" = None):
        if triangle not in (None, "lower", "upper", "diagonal"):
            raise ValueError(f"bad triangle flag {triangle!r}")
        self._entry = entry
        self._rows = rows or (lambda i: (-1, None))
        self._cols = cols or (lambda j: (-1, None))
        self.triangle = triangle
        self.name = name
        self._interior = interior
        self._memo: dict[tuple[int, int], Scalar] = {}

    def __call__(self, i: int, j: int) -> Scalar:
        if i < -1 or j < -1:
            return 0
        key = (i, j)
        v = self._memo.get(key)
        if v is None:
            lo, hi = self._rows(i)
            if j < lo or (hi is not None and j > hi):
                v = 0
            else:
                v = scalar(self._entry(i, j))
            self._memo[key] = v  # idempotent fill, safe if two threads race
        return v

    entry = __call__

    def rows(self, i: int) -> Bounds:
        return self._rows(i)

    def cols(self, j: int) -> Bounds:
        return self._cols(j)

    @property
    def row_finite(self) -> bool:
        return all(self._rows(i)[1] is not None for i in _PROBE)

    @property
    def column_finite(self) -> bool:
        return all(self._cols(j)[1] is not None for j in _PROBE)

    @property
    def interior(self) -> "AugMatrix | None":
        """A matrix known to equal bin^-1 · self, when one was declared."""
        if callable(self._interior) and not isinstance(self._interior, AugMatrix):
            self._interior = self._interior()
        return self._interior

    def row(self, i: int) -> AugSequence:
        hi = self._rows(i)[1]
        if hi is None:
            return AugSequence.lazy(lambda j: self(i, j))
        return AugSequence(self(i, j) for j in range(-1, hi + 1))

    def window(self, rows: tuple[int, int], cols: tuple[int, int]) -> list[list[Scalar]]:
        return [[self(i, j) for j in range(cols[0], cols[1] + 1)]
                for i in range(rows[0], rows[1] + 1)]

    def __repr__(self) -> str:
        return f"AugMatrix({self.name or '?'})"


def check_structure(A: AugMatrix, size: int = 12) -> list[str]:
    """Compare declared supports with raw entries on a window; return violations."""
    bad = []
    for i in range(-1, size):
        rlo, rhi = A.rows(i)
        for j in range(-1, size):
            v = scalar(A._entry(i, j))
            clo, chi = A.cols(j)
            outside = (j < rlo or (rhi is not None and j > rhi)
                       or i < clo or (chi is not None and i > chi))
            if A.triangle in ("lower", "diagonal") and j > i:
                outside = True
            if A.triangle in ("upper", "diagonal") and j < i:
                outside = True
            if outside and v != 0:
                bad.append(f"{A.name}[{i},{j}] = {v} outside declared support")
    return bad


def _rng(lo: int, hi: int) -> range:
    return range(max(lo, -1), hi + 1)


def identity() -> AugMatrix:
    return _identity()


@cache
def _identity() -> AugMatrix:
    return AugMatrix(lambda i, j: 1 if i == j else 0,
                     rows=lambda i: (i, i), cols=lambda j: (j, j),
                     triangle="diagonal", name="id")


def elementary(k: int, l: int) -> AugMatrix:
    """The matrix 1_{k,l}: a single 1 at (k, l)."""
    return AugMatrix(lambda i, j: 1 if (i, j) == (k, l) else 0,
                     rows=lambda i: (l, l) if i == k else (-1, -1),
                     cols=lambda j: (k, k) if j == l else (-1, -1),
                     name=f"1[{k},{l}]")


def from_rows(rows: Sequence[Sequence], name: str | None = None) -> AugMatrix:
    """Finite matrix from explicit rows (row -1 first); zero elsewhere."""
    data = [[scalar(x) for x in r] for r in rows]
    nr = len(data)
    nc = max((len(r) for r in data), default=0)

    def entry(i, j):
        if i + 1 < nr and j + 1 < len(data[i + 1]):
            return data[i + 1][j + 1]
        return 0

    return AugMatrix(entry, rows=lambda i: (-1, nc - 2), cols=lambda j: (-1, nr - 2), name=name)


def shifting_matrix(b: AugSequence) -> AugMatrix:
    """R(b): row i is D_{-(i+1)}(b), so that a · R(b) = a ⊞ b."""
    if b.is_finite:
        d = b.dim if b.entries else -1
        rows = lambda i: (i, i + 1 + d)
        cols = lambda j: (j - 1 - d, j)
    else:
        rows = lambda i: (i, None)
        cols = lambda j: (-1, j)
    return AugMatrix(lambda i, j: b[j - i - 1] if j - i - 1 >= -1 else 0,
                     rows=rows, cols=cols, triangle="upper", name="R")


def _span(bounds: Callable[[int], Bounds], lo: int, hi: int | None) -> Bounds:
    """Union of supports over indices lo..hi (conservative when infinite)."""
    if hi is None:
        return (-1, None)
    los, his = [], []
    for k in _rng(lo, hi):
        a, b = bounds(k)
        los.append(a)
        if b is None:
            return (min(los), None)
        his.append(b)
    if not los:
        return (-1, -1)
    return (min(los), max(his))


def matmul(A: AugMatrix, B: AugMatrix, name: str | None = None) -> AugMatrix:
    """Lazy product A · B; needs A row-finite or B column-finite entrywise."""

    def entry(i, j):
        alo, ahi = A.rows(i)
        blo, bhi = B.cols(j)
        lo = max(alo, blo)
        if ahi is None and bhi is None:
            raise DivergentSum(f"({A.name} · {B.name})[{i},{j}] is an infinite sum")
        hi = bhi if ahi is None else ahi if bhi is None else min(ahi, bhi)
        return sum(A(i, k) * B(k, j) for k in _rng(lo, hi))

    def rows(i):
        lo, hi = A.rows(i)
        return _span(B.rows, lo, hi)

    def cols(j):
        lo, hi = B.cols(j)
        return _span(A.cols, lo, hi)

    tri = None
    if A.triangle == B.triangle:
        tri = A.triangle
    elif {A.triangle, B.triangle} in ({"lower", "diagonal"}, {"upper", "diagonal"}):
        tri = ({A.triangle, B.triangle} - {"diagonal"}).pop()
    return AugMatrix(entry, rows=rows, cols=cols, triangle=tri,
                     name=name or f"{A.name}·{B.name}")


def dot(a: AugSequence, B: AugMatrix) -> AugSequence:
    """Row vector times matrix: (a · B)_j = sum_k a_k B_{k,j}."""
    if a.is_finite:
        if not a.entries:
            return ZERO
        top = a.dim

        def entry(j):
            lo, hi = B.cols(j)
            hi = top if hi is None else min(hi, top)
            return sum(a[k] * B(k, j) for k in _rng(lo, hi))

        _, out_hi = _span(B.rows, -1, top)
        if out_hi is None:
            return AugSequence.lazy(entry)
        return AugSequence(entry(j) for j in range(-1, out_hi + 1))
    if not B.column_finite:
        raise DivergentSum(f"infinite sequence times {B.name}, which is not column-finite")

    def entry_inf(j):
        lo, hi = B.cols(j)
        return sum(a[k] * B(k, j) for k in _rng(lo, hi))

    return AugSequence.lazy(entry_inf)


def triangle_action(a: AugSequence, B: AugMatrix) -> AugSequence:
    """a ▷ B = (a · bin^-1) · B."""
    if a.is_finite:
        return dot(dot(a, bin_inv()), B)
    inner = B.interior
    if inner is None:
        inner = matmul(bin_inv(), B)
    if not inner.column_finite:
        raise DivergentSum(f"bin^-1 · {B.name} is not known to be column-finite")
    return dot(a, inner)


def sd_seq(a: AugSequence) -> AugSequence:
    """Barycentric subdivision of a finite sequence: a · breve-cad+."""
    if not a.is_finite:
        raise InfiniteInput("sd is only defined on finite sequences")
    return dot(a, breve_cad_plus())


def _check_diagonal(A: AugMatrix, i: int) -> Scalar:
    d = A(i, i)
    if d == 0:
        raise SingularDiagonal(f"{A.name}[{i},{i}] = 0")
    return d


def invert_triangular(A: AugMatrix) -> AugMatrix:
    """Exact inverse of a triangular matrix by substitution, one column at a time."""
    if A.triangle is None:
        raise ValueError(f"{A.name} is not declared triangular")
    for i in _PROBE:
        _check_diagonal(A, i)
    name = f"{A.name}^-1"

    if A.triangle == "diagonal":
        return AugMatrix(lambda i, j: _div(1, _check_diagonal(A, i)) if i == j else 0,
                         rows=lambda i: (i, i), cols=lambda j: (j, j),
                         triangle="diagonal", name=name)

    columns: dict[int, dict[int, Scalar]] = {}
    lock = threading.Lock()

    if A.triangle == "lower":
        def entry(i, j):
            if j > i:
                return 0
            with lock:
                col = columns.setdefault(j, {})
                if i not in col:
                    start = max(col) + 1 if col else j
                    for r in range(start, i + 1):
                        d = _check_diagonal(A, r)
                        if r == j:
                            col[r] = _div(1, d)
                            continue
                        lo, _ = A.rows(r)
                        s = sum(A(r, k) * col[k] for k in range(max(lo, j), r))
                        col[r] = _div(-s, d)
                return col[i]

        return AugMatrix(entry, rows=lambda i: (-1, i), cols=lambda j: (j, None),
                         triangle="lower", name=name)

    def entry_up(i, j):
        if i > j:
            return 0
        with lock:
            col = columns.setdefault(j, {})
            if i not in col:
                start = min(col) - 1 if col else j
                for r in range(start, i - 1, -1):
                    d = _check_diagonal(A, r)
                    if r == j:
                        col[r] = _div(1, d)
                        continue
                    _, hi = A.rows(r)
                    top = j if hi is None else min(hi, j)
                    s = sum(A(r, k) * col[k] for k in range(r + 1, top + 1))
                    col[r] = _div(-s, d)
            return col[i]

    return AugMatrix(entry_up, rows=lambda i: (i, None), cols=lambda j: (-1, j),
                     triangle="upper", name=name)


def iterate_operator(A: AugMatrix, k: int) -> AugMatrix:
    """A^k for any integer k; A^0 is the identity, negative k inverts first."""
    if k == 0:
        return identity()
    if k == 1:
        return A
    base = A if k > 0 else invert_triangular(A)
    out = base
    for _ in range(abs(k) - 1):
        out = matmul(out, base, name=f"{A.name}^{k}")
    return out


def equal_on_window(A: AugMatrix, B: AugMatrix, size: int) -> bool:
    return all(A(i, j) == B(i, j) for i in range(-1, size + 1) for j in range(-1, size + 1))


# ---------------------------------------------------------------- named matrices

def _ceil_half(x: int) -> int:
    return -((-x) // 2)


@cache
def bin() -> AugMatrix:  # noqa: A001 - the matrix is called bin throughout
    """Augmented Pascal matrix binom(i+1, j+1)."""
    return AugMatrix(lambda i, j: binomial(i + 1, j + 1),
                     rows=lambda i: (-1, i), cols=lambda j: (j, None),
                     triangle="lower", name="bin", interior=identity)


@cache
def bin_inv() -> AugMatrix:
    return AugMatrix(lambda i, j: (-1 if (i - j) % 2 else 1) * binomial(i + 1, j + 1),
                     rows=lambda i: (-1, i), cols=lambda j: (j, None),
                     triangle="lower", name="bin-inv")


def _breve_cil_entry(n: int, m: int) -> int:
    return (n + 2) * (m == n) + (n + 1) * (m == n + 1)


def _breve_cil0_entry(n: int, m: int) -> int:
    return (n + 2) * (m == n)


def _breve_cil2_entry(n: int, m: int) -> int:
    return sum(binomial(n + 1, i + 1) * binomial(i + 1, m - n) for i in range(-1, n + 1))


def _binomial_sum(breve: Callable[[int, int], int], lo_of: Callable[[int], int],
                  hi_of: Callable[[int], int], partial: bool) -> Callable[[int, int], int]:
    """Entry of sum_{j <= n (or < n)} binom(n+1, j+1) breve[j]; j limited to breve's column support."""
    def entry(n, m):
        top = n - 1 if partial else n
        return sum(binomial(n + 1, j + 1) * breve(j, m)
                   for j in range(max(-1, lo_of(m)), min(top, hi_of(m)) + 1))
    return entry


@cache
def breve_cil() -> AugMatrix:
    return AugMatrix(_breve_cil_entry, rows=lambda i: (i, i + 1),
                     cols=lambda j: (max(j - 1, -1), j), triangle="upper", name="breve-cil")


def _cil(partial: bool) -> AugMatrix:
    entry = _binomial_sum(_breve_cil_entry, lambda m: m - 1, lambda m: m, partial)
    return AugMatrix(entry, rows=lambda n: (-1, n if partial else n + 1),
                     cols=lambda m: (m - 1, None),
                     name="cil-partial" if partial else "cil",
                     interior=None if partial else breve_cil)


@cache
def cil() -> AugMatrix:
    return _cil(False)


@cache
def cil_partial() -> AugMatrix:
    return _cil(True)


@cache
def breve_cil0() -> AugMatrix:
    return AugMatrix(_breve_cil0_entry, rows=lambda i: (i, i), cols=lambda j: (j, j),
                     triangle="diagonal", name="breve-cil0")


def _cil0(partial: bool) -> AugMatrix:
    entry = _binomial_sum(_breve_cil0_entry, lambda m: m, lambda m: m, partial)
    return AugMatrix(entry, rows=lambda n: (-1, n - 1 if partial else n),
                     cols=lambda m: (m + 1 if partial else m, None),
                     triangle="lower", name="cil0-partial" if partial else "cil0",
                     interior=None if partial else breve_cil0)


@cache
def cil0() -> AugMatrix:
    return _cil0(False)


@cache
def cil0_partial() -> AugMatrix:
    return _cil0(True)


@cache
def breve_cil2() -> AugMatrix:
    return AugMatrix(_breve_cil2_entry, rows=lambda n: (n, 2 * n + 1),
                     cols=lambda m: (max(-1, _ceil_half(m - 1)), m),
                     triangle="upper", name="breve-cil2")


def _cil2(partial: bool) -> AugMatrix:
    entry = _binomial_sum(_breve_cil2_entry, lambda m: _ceil_half(m - 1), lambda m: m, partial)
    return AugMatrix(entry, rows=lambda n: (-1, 2 * n - 1 if partial else 2 * n + 1),
                     cols=lambda m: (max(-1, _ceil_half(m - 1)), None),
                     name="cil2-partial" if partial else "cil2",
                     interior=None if partial else breve_cil2)


@cache
def cil2() -> AugMatrix:
    return _cil2(False)


@cache
def cil2_partial() -> AugMatrix:
    return _cil2(True)


@cache
def cad_plus() -> AugMatrix:
    return AugMatrix(combinat.cad_plus_entry, rows=lambda n: (-1, n),
                     cols=lambda p: (p, None), triangle="lower", name="cad+",
                     interior=breve_cad_plus)


@cache
def breve_cad_plus() -> AugMatrix:
    return AugMatrix(combinat.breve_cad_plus_entry,
                     rows=lambda n: (-1, -1) if n == -1 else (0, n),
                     cols=lambda p: (-1, -1) if p == -1 else (p, None),
                     triangle="lower", name="breve-cad+")


@cache
def cad() -> AugMatrix:
    return AugMatrix(combinat.cad_entry, rows=lambda n: (-1, n + 1),
                     cols=lambda p: (p - 1, None), name="cad")


NAMED: dict[str, Callable[[], AugMatrix]] = {
    "bin": bin,
    "bin-inv": bin_inv,
    "breve-cil": breve_cil,
    "cil": cil,
    "cil-partial": cil_partial,
    "breve-cil0": breve_cil0,
    "cil0": cil0,
    "cil0-partial": cil0_partial,
    "breve-cil2": breve_cil2,
    "cil2": cil2,
    "cil2-partial": cil2_partial,
    "cad+": cad_plus,
    "breve-cad+": breve_cad_plus,
    "cad": cad,
}


def named(name: str) -> AugMatrix:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown matrix {name!r}; choose from {', '.join(NAMED)}") from None
