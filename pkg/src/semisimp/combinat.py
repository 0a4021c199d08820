"""Exact number families: binomials, Stirling numbers, subset-chain counts.

All values are Python ints, so nothing overflows. Indices follow the
augmented convention where -1 is a legal dimension (the empty simplex).
The ``count_*`` and ``enumerate_*`` functions are brute-force oracles that
never touch the closed formulas they are used to check.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations
from typing import Iterator


def binomial(p: int, q: int) -> int:
    """binom(p, q), taken as 0 whenever q < 0, p < 0 or q > p."""
    if p < 0 or q < 0 or q > p:
        return 0
    return math.comb(p, q)


@lru_cache(maxsize=None)
def stirling2(p: int, q: int) -> int:
    """Stirling number of the second kind S(p, q).

    S(0, 0) = 1 and S(p, q) = q S(p-1, q) + S(p-1, q-1); every other
    combination (negative arguments, q > p, q = 0 < p) gives 0.
    """
    if p == 0 and q == 0:
        return 1
    if p <= 0 or q <= 0 or q > p:
        return 0
    # iterate over p to keep the recursion depth flat for large arguments
    row = [1] + [0] * q
    for _ in range(p):
        new = [0] * (q + 1)
        for k in range(1, q + 1):
            new[k] = k * row[k] + row[k - 1]
        row = new
    return row[q]


def breve_cad_plus_entry(n: int, p: int) -> int:
    """Number of chains of nonempty subsets ending exactly at {0..n}.

    Equals (p+1)! S(n+1, p+1).
    """
    if p < -1 or n < -1:
        return 0
    return math.factorial(p + 1) * stirling2(n + 1, p + 1)


def cad_plus_entry(n: int, p: int) -> int:
    """Number of strict chains of p+1 nonempty subsets of {0..n}."""
    if p < -1 or n < -1:
        return 0
    return sum(binomial(n + 1, k + 1) * breve_cad_plus_entry(k, p)
               for k in range(max(p, -1), n + 1))


def cad_entry(n: int, p: int) -> int:
    """Chains whose first member may be empty: cad+[n]_p + cad+[n]_{p-1}."""
    return cad_plus_entry(n, p) + cad_plus_entry(n, p - 1)


# ---------------------------------------------------------------- oracles

def iter_set_partitions(p: int) -> Iterator[list[int]]:
    """Yield restricted growth strings of length p (one per set partition)."""
    if p == 0:
        yield []
        return
    rgs = [0] * p

    def rec(i: int, top: int) -> Iterator[list[int]]:
        if i == p:
            yield list(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def count_set_partitions(p: int, q: int) -> int:
    """Count partitions of {1..p} into exactly q blocks by enumeration."""
    if p < 0 or q < 0:
        return 0
    return sum(1 for rgs in iter_set_partitions(p)
               if (max(rgs) + 1 if rgs else 0) == q)


def iter_strict_chains(n: int, p: int, anchored: bool = False) -> Iterator[tuple[frozenset, ...]]:
    """Yield every chain N_0 < N_1 < ... < N_p of nonempty subsets of {0..n}.

    With ``anchored`` the last member must be all of {0..n}. p = -1 yields
    the single empty chain. Exponential; meant for n <= 6 or so.
    """
    if p == -1:
        if not anchored or n == -1:
            yield ()
        return
    if p < -1:
        return
    universe = tuple(range(n + 1))

    def extend(chain: tuple[frozenset, ...]) -> Iterator[tuple[frozenset, ...]]:
        if len(chain) == p + 1:
            if not anchored or len(chain[-1]) == n + 1:
                yield chain
            return
        last = chain[-1] if chain else frozenset()
        rest = [v for v in universe if v not in last]
        for k in range(1, len(rest) + 1):
            for extra in combinations(rest, k):
                yield from extend(chain + (last | frozenset(extra),))

    yield from extend(())


def enumerate_strict_chains(n: int, p: int, anchored: bool = False) -> int:
    """Count strict chains of p+1 nonempty subsets of {0..n} over the subset lattice.

    Walks every strict inclusion T < S of bitmasks level by level, so the
    count never goes through a closed formula. Practical up to n ~ 12.
    """
    if p == -1:
        return 1 if (not anchored or n == -1) else 0
    if p < -1 or n < -1:
        return 0
    full = (1 << (n + 1)) - 1
    # ways[S] = chains of the current length whose top member is S
    ways = [0] + [1] * full
    for _ in range(p):
        nxt = [0] * (full + 1)
        for s in range(1, full + 1):
            t = (s - 1) & s
            total = 0
            while t:
                total += ways[t]
                t = (t - 1) & s
            nxt[s] = total
        ways = nxt
    if anchored:
        return ways[full]
    return sum(ways)
