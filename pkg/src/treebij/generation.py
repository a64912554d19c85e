"""Exhaustive streams and seeded samplers for the tree and function families.

Enumeration orders are fixed so that golden files stay reproducible:

* trees on a label set come out in lexicographic order of their Prüfer code;
* root tuples and function value tables run in odometer order (last
  coordinate fastest) over ascending labels.

All streams are lazy generators.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .bijections import RootedTriple
from .errors import EmptyCodomain, EmptyGroundSet, EmptyLabelSet, InvalidCode, TooSmall
from .trees import (
    DoublyRootedTree,
    FiniteFunction,
    LabeledTree,
    TriplyRootedTree,
    label_set,
)

MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class PruferCode:
    labels: tuple[int, ...]
    code: tuple[int, ...]

    def __post_init__(self):
        labels = label_set(self.labels)
        code = tuple(self.code)
        if len(labels) < 2:
            raise InvalidCode("Prüfer codes need at least two labels")
        if len(code) != len(labels) - 2:
            raise InvalidCode(f"code length {len(code)} != {len(labels) - 2}")
        members = set(labels)
        for c in code:
            if c not in members:
                raise InvalidCode(f"code entry {c} is not a label")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "code", code)


def prufer_decode(p: PruferCode) -> LabeledTree:
    degree = {v: 1 for v in p.labels}
    for c in p.code:
        degree[c] += 1
    leaves = [v for v in p.labels if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for c in p.code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, c))
        degree[c] -= 1
        if degree[c] == 1:
            heapq.heappush(leaves, c)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return LabeledTree(p.labels, frozenset((min(e), max(e)) for e in edges))


def prufer_encode(t: LabeledTree) -> PruferCode:
    if len(t) < 2:
        raise TooSmall("Prüfer codes need at least two labels")
    nbrs = {v: set(nb) for v, nb in t.adjacency.items()}
    leaves = [v for v, nb in nbrs.items() if len(nb) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(len(t) - 2):
        leaf = heapq.heappop(leaves)
        (p,) = nbrs.pop(leaf)
        nbrs[p].discard(leaf)
        code.append(p)
        if len(nbrs[p]) == 1:
            heapq.heappush(leaves, p)
    return PruferCode(t.labels, tuple(code))


def all_trees(labels: Iterable[int]) -> Iterator[LabeledTree]:
    labels = label_set(labels)
    if not labels:
        raise EmptyLabelSet("cannot enumerate trees on an empty label set")
    if len(labels) == 1:
        yield LabeledTree(labels, frozenset())
        return
    for code in itertools.product(labels, repeat=len(labels) - 2):
        yield prufer_decode(PruferCode(labels, code))


def all_doubly_rooted(labels: Iterable[int]) -> Iterator[DoublyRootedTree]:
    labels = label_set(labels)
    for t in all_trees(labels):
        for r1, r2 in itertools.product(labels, repeat=2):
            yield DoublyRootedTree(t, r1, r2)


def all_triply_rooted(n: int) -> Iterator[TriplyRootedTree]:
    if n < 1:
        raise EmptyLabelSet(f"n must be positive, got {n}")
    labels = tuple(range(1, n + 1))
    for t in all_trees(labels):
        for r1, r2, r3 in itertools.product(labels, repeat=3):
            yield TriplyRootedTree(t, r1, r2, r3)


def all_functions(domain: Iterable[int], codomain: Iterable[int]) -> Iterator[FiniteFunction]:
    domain, codomain = label_set(domain), label_set(codomain)
    if not codomain:
        raise EmptyCodomain("codomain must be nonempty")
    for values in itertools.product(codomain, repeat=len(domain)):
        yield FiniteFunction(domain, codomain, values)


@dataclass(frozen=True)
class Composition3:
    """Ordered triple of disjoint blocks covering a ground set, first block nonempty."""

    block_a: tuple[int, ...]
    block_b: tuple[int, ...]
    block_c: tuple[int, ...]


def all_compositions3(ground: Iterable[int]) -> Iterator[Composition3]:
    ground = label_set(ground)
    if not ground:
        raise EmptyGroundSet("ground set must be nonempty")
    for assign in itertools.product(range(3), repeat=len(ground)):
        blocks: tuple[list[int], list[int], list[int]] = ([], [], [])
        for x, b in zip(ground, assign):
            blocks[b].append(x)
        if blocks[0]:
            yield Composition3(*(tuple(b) for b in blocks))


def all_rooted_triples(n: int) -> Iterator[RootedTriple]:
    """Every triple (D, D', D'') of doubly rooted trees partitioning ``[n]``,
    with ``D`` nonempty and an empty part given as ``None``."""
    for comp in all_compositions3(range(1, n + 1)):
        for d in all_doubly_rooted(comp.block_a):
            for dp in all_doubly_rooted(comp.block_b) if comp.block_b else [None]:
                for dpp in all_doubly_rooted(comp.block_c) if comp.block_c else [None]:
                    yield RootedTriple(d, dp, dpp)


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014): 64-bit state, Weyl increment
    0x9E3779B97F4A7C15, then the murmur3-style finalizer.

    ``below(k)`` draws uniformly from ``range(k)`` by rejecting raw outputs at
    or above the largest multiple of ``k`` not exceeding 2**64, then reducing
    modulo ``k``.  The sequence is identical on every platform.
    """

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k


def sample_triply_rooted(n: int, seed: int) -> TriplyRootedTree:
    """Uniform element of T_n: a uniform Prüfer code, then r1, r2, r3 in that order."""
    if n < 1:
        raise EmptyLabelSet(f"n must be positive, got {n}")
    rng = SplitMix64(seed)
    labels = tuple(range(1, n + 1))
    if n == 1:
        tree = LabeledTree(labels, frozenset())
    else:
        code = tuple(1 + rng.below(n) for _ in range(n - 2))
        tree = prufer_decode(PruferCode(labels, code))
    r1, r2, r3 = (1 + rng.below(n) for _ in range(3))
    return TriplyRootedTree(tree, r1, r2, r3)


def sample_function(n: int, seed: int) -> FiniteFunction:
    """Uniform function ``[n+1] -> [n]``; values drawn for 1, 2, ..., n+1."""
    if n < 1:
        raise EmptyCodomain(f"n must be positive, got {n}")
    rng = SplitMix64(seed)
    return FiniteFunction.from_values([1 + rng.below(n) for _ in range(n + 1)], n)


