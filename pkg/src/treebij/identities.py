"""Exact closed forms for Lacasse's sums, Abel polynomials and the refined
tree/function counts, together with brute-force oracles for every count.

Everything is integer or :class:`fractions.Fraction` arithmetic, with the
convention ``0**0 == 1`` throughout.  Probability-weighted sums are computed
in their ``n**n``-scaled integer form and divided once at the end.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from . import kernels
from .errors import CapExceeded, PoleAtZero, TreeBijError
from .generation import all_doubly_rooted, all_trees, all_triply_rooted

DEFAULT_CAP = 6


def default_cap() -> int:
    """Brute-force size cap: ``TREEBIJ_CAP`` if set, else 6."""
    raw = os.environ.get("TREEBIJ_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(n: int, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the brute-force cap {cap}")


def _check_n(n: int) -> None:
    if n < 1:
        raise TreeBijError(f"n must be positive, got {n}")


def xi_scaled(n: int) -> int:
    """``n**n * xi(n) = sum_k C(n,k) k^k (n-k)^(n-k)``."""
    _check_n(n)
    return sum(comb(n, k) * k**k * (n - k) ** (n - k) for k in range(n + 1))


def xi_scaled_factorial(n: int) -> int:
    """Single-sum form ``sum_j n^j n!/j!``."""
    _check_n(n)
    return sum(n**j * (factorial(n) // factorial(j)) for j in range(n + 1))


def xi(n: int) -> Fraction:
    return Fraction(xi_scaled(n), n**n)


def xi2_scaled(n: int) -> int:
    """``n**n * xi2(n)`` as the double sum over (j, k)."""
    _check_n(n)
    total = 0
    for j in range(n + 1):
        for k in range(n - j + 1):
            rest = n - j - k
            total += comb(n, j) * comb(n - j, k) * j**j * k**k * rest**rest
    return total


def xi2_scaled_single(n: int) -> int:
    """Single-sum form ``sum_j n^(n-j) C(n,j) (j+1)!``."""
    _check_n(n)
    return sum(n ** (n - j) * comb(n, j) * factorial(j + 1) for j in range(n + 1))


def xi2(n: int) -> Fraction:
    return Fraction(xi2_scaled(n), n**n)


def triple_count(n: int) -> int:
    """The double sum with the first block nonempty: the number of triples of
    doubly rooted trees whose vertex sets partition ``[n]`` (first one nonempty)."""
    _check_n(n)
    total = 0
    for j in range(1, n + 1):
        for k in range(n - j + 1):
            rest = n - j - k
            total += comb(n, j) * comb(n - j, k) * j**j * k**k * rest**rest
    return total


@dataclass(frozen=True)
class LacasseWitness:
    n: int
    xi_scaled: int
    xi2_scaled: int
    triple_sum: int
    power: int  # n ** (n + 1)

    @property
    def ok(self) -> bool:
        return (
            self.xi2_scaled == self.xi_scaled + self.n * self.n**self.n
            and self.triple_sum == self.power
        )

    def __bool__(self):
        return self.ok


def lacasse_check(n: int) -> LacasseWitness:
    """Check ``xi2(n) == xi(n) + n`` and its integer form, exactly."""
    return LacasseWitness(n, xi_scaled(n), xi2_scaled(n), triple_count(n), n ** (n + 1))


def rising_factorial(r: int, k: int) -> int:
    if k < 0:
        raise TreeBijError(f"k must be nonnegative, got {k}")
    out = 1
    for i in range(k):
        out *= r + i
    return out


def falling_factorial(n: int, k: int) -> int:
    """``n!/(n-k)!``; zero when ``k > n``."""
    if k > n:
        return 0
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _power(base: int, exp: int) -> Fraction | int:
    if base == 0:
        if exp < 0:
            raise PoleAtZero("zero base raised to a negative exponent")
        return 1 if exp == 0 else 0
    if exp < 0:
        return Fraction(1, base**-exp)
    return base**exp


def weak_compositions(n: int, m: int) -> Iterable[tuple[int, ...]]:
    """All ``(k_1, ..., k_m)`` of nonnegative ints summing to ``n``."""
    for bars in itertools.combinations(range(n + m - 1), m - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(n + m - 2 - prev)
        yield tuple(parts)


def multinomial(n: int, parts: Sequence[int]) -> int:
    out = factorial(n)
    for k in parts:
        out //= factorial(k)
    return out


def abel_poly(x: Sequence[int], p: Sequence[int], n: int) -> Fraction:
    """Multivariate Abel polynomial ``A_n(x; p)`` at integer points."""
    if len(x) != len(p) or not x:
        raise TreeBijError("x and p must be nonempty and of equal length")
    if n < 0:
        raise TreeBijError(f"n must be nonnegative, got {n}")
    total: Fraction | int = 0
    for ks in weak_compositions(n, len(x)):
        term: Fraction | int = multinomial(n, ks)
        for xj, pj, kj in zip(x, p, ks):
            term *= _power(xj + kj, kj + pj)
        total += term
    return Fraction(total)


def hurwitz_rhs(x: Sequence[int], n: int) -> int:
    """Single-sum side of Hurwitz's identity for ``p = 0``."""
    m = len(x)
    s = sum(x) + n
    return sum(comb(n, k) * _power(s, n - k) * rising_factorial(m - 1, k) for k in range(n + 1))


def hurwitz_check(x: Sequence[int], n: int) -> bool:
    return abel_poly(x, [0] * len(x), n) == hurwitz_rhs(x, n)


def forest_count(k: int, n: int) -> int:
    """Rooted forests on ``[n]`` with ``k`` given roots: ``k n^(n-k-1)``, 1 when k == n."""
    if k == n:
        return 1
    if not 1 <= k < n:
        return 0
    return k * n ** (n - k - 1)


def w_count(n: int, i: int, j: int) -> int:
    """Triply rooted trees on ``[n]`` with r2 at depth ``i`` and r3 at depth ``j``.

    Sums over the depth ``d`` of lca(r2, r3): the two root paths cover
    ``k = i + j - d + 1`` distinct vertices, placed in ``n!/(n-k)!`` ways,
    and the rest of the tree is a forest rooted at those ``k`` vertices.
    """
    _check_n(n)
    if i < 0 or j < 0:
        return 0
    total = 0
    for d in range(min(i, j) + 1):
        k = i + j - d + 1
        total += falling_factorial(n, k) * forest_count(k, n)
    return total


def f_count(n: int, i: int, j: int) -> int:
    """Functions ``[n+1] -> [n]`` whose orbit of ``n+1`` has ``i`` elements
    (``n+1`` included) and which have ``j`` periodic points.

    Through the function/tree bijection this is ``w_count(n, i - 2, j - 1)``.
    """
    return w_count(n, i - 2, j - 1)


def w_table(n: int) -> dict[tuple[int, int], int]:
    return {
        (i, j): c
        for i in range(n)
        for j in range(n)
        if (c := w_count(n, i, j))
    }


def f_table(n: int) -> dict[tuple[int, int], int]:
    return {
        (i, j): c
        for i in range(2, n + 2)
        for j in range(1, n + 1)
        if (c := f_count(n, i, j))
    }


def w_count_brute(n: int, cap: int | None = None) -> dict[tuple[int, int], int]:
    """Tally T_n by (depth r2, depth r3) with the tree rooted at r1."""
    _check_n(n)
    _check_cap(n, cap)
    return kernels.tally_triply_rooted(n)


def f_count_brute(n: int, cap: int | None = None) -> dict[tuple[int, int], int]:
    """Tally every ``[n+1] -> [n]`` by (orbit size incl. n+1, periodic count)."""
    _check_n(n)
    _check_cap(n, cap)
    return kernels.tally_functions(n)


def _spanning_forests(n: int, size: int) -> Iterable[tuple[tuple, list[int]]]:
    """Acyclic ``size``-edge subsets of K_n, each with its component representatives."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for chosen in itertools.combinations(pairs, size):
        parent = list(range(n + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in chosen:
            a, b = find(u), find(v)
            if a == b:
                break
            parent[a] = b
        else:
            yield chosen, [find(v) for v in range(n + 1)]


def forest_count_brute(n: int, roots: Iterable[int], cap: int | None = None) -> int:
    """Spanning forests of ``[n]`` with one designated root in each component."""
    roots = sorted(set(roots))
    k = len(roots)
    if k < 1 or roots[0] < 1 or roots[-1] > n:
        raise TreeBijError("roots must be a nonempty subset of [n]")
    _check_cap(n, cap)
    count = 0
    for _, comp in _spanning_forests(n, n - k):
        if len({comp[r] for r in roots}) == k:
            count += 1
    return count


@dataclass(frozen=True)
class BasicCounts:
    n: int
    trees: int
    rooted: int
    doubly_rooted: int
    triply_rooted: int

    @property
    def ok(self) -> bool:
        n = self.n
        return (
            self.rooted == n ** (n - 1)
            and self.doubly_rooted == n**n
            and self.triply_rooted == n ** (n + 1)
        )

    def __bool__(self):
        return self.ok


def basic_counts_check(n: int, cap: int | None = None) -> BasicCounts:
    """Count R_n, D_n, T_n by enumeration.

    Labeled trees are found by testing every (n-1)-edge subset of K_n, which
    is independent of the Prüfer streams; the streams must produce exactly
    that set.
    """
    _check_n(n)
    _check_cap(n, cap)
    labels = range(1, n + 1)
    brute = {frozenset(chosen) for chosen, _ in _spanning_forests(n, n - 1)}
    streamed = [t.edges for t in all_trees(labels)]
    if len(streamed) != len(set(streamed)) or set(streamed) != brute:
        raise AssertionError(f"tree stream disagrees with edge-subset enumeration at n={n}")
    rooted = sum(1 for _ in brute for _r in labels)
    doubly = sum(1 for _ in all_doubly_rooted(labels))
    triply = sum(1 for _ in all_triply_rooted(n))
    return BasicCounts(n, len(brute), rooted, doubly, triply)

