"""Labeled trees over arbitrary positive-integer label sets, with rooting queries.

Trees are free (unrooted) until a root is chosen; rooting derives a parent map
on demand, so the same ``LabeledTree`` can be rooted at different vertices by
different algorithms without copying.  All objects are immutable.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DomainCodomainMismatch,
    EmptyCodomain,
    EmptyTree,
    HasCycle,
    NotAStrictDescendant,
    NotConnected,
    TreeBijError,
    UnknownLabel,
    WrongEdgeCount,
)

Label = int
LabelSet = tuple  # strictly increasing tuple of positive ints
Edge = tuple  # (u, v) with u < v


def label_set(labels: Iterable[int]) -> tuple[int, ...]:
    """Normalize ``labels`` to a strictly increasing tuple of positive ints."""
    out = []
    for x in labels:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise TreeBijError(f"labels must be positive integers, got {x!r}")
        out.append(x)
    out.sort()
    for a, b in zip(out, out[1:]):
        if a == b:
            raise TreeBijError(f"duplicate label {a}")
    return tuple(out)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledTree:
    """A free tree.  Construction validates; use :func:`validate_tree` to build."""

    labels: tuple[int, ...]
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        labels = label_set(self.labels)
        edges = frozenset(_edge(*e) for e in self.edges)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", edges)
        _check_tree(labels, edges)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, v):
        return v in self._label_index

    @cached_property
    def _label_index(self) -> frozenset:
        return frozenset(self.labels)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.labels}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(nb)) for v, nb in adj.items()}

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def rooted_at(self, root: int) -> "RootedTree":
        return RootedTree(self, root)

    def component(self, start: int, removed: Iterable[tuple[int, int]] = ()) -> "LabeledTree":
        """Subtree containing ``start`` after deleting the ``removed`` edges."""
        cut = {_edge(*e) for e in removed}
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen and _edge(u, w) not in cut:
                    seen.add(w)
                    queue.append(w)
        edges = [e for e in self.edges if e[0] in seen and e not in cut]
        return LabeledTree(tuple(seen), frozenset(edges))


def _check_tree(labels: tuple[int, ...], edges: frozenset) -> None:
    members = set(labels)
    for u, v in edges:
        if u not in members or v not in members:
            bad = u if u not in members else v
            raise UnknownLabel(f"edge ({u}, {v}) uses label {bad} outside the label set")
    n = len(labels)
    expected = n - 1 if n else 0
    if len(edges) != expected:
        raise WrongEdgeCount(f"{n} labels need {expected} edges, got {len(edges)}")
    parent = {v: v for v in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sorted(edges):
        if u == v:
            raise HasCycle(f"self-loop at {u}")
        a, b = find(u), find(v)
        if a == b:
            raise HasCycle(f"edge ({u}, {v}) closes a cycle")
        parent[a] = b
    if n and len({find(v) for v in labels}) != 1:
        raise NotConnected("edges do not connect all labels")


def validate_tree(labels: Iterable[int], edges: Iterable[Iterable[int]]) -> LabeledTree:
    """Build a :class:`LabeledTree`, raising a :class:`~treebij.errors.InvalidTree`
    subclass (or :class:`UnknownLabel`) naming the violated invariant."""
    pairs = []
    for e in edges:
        u, v = e
        pairs.append((u, v))
    return LabeledTree(tuple(labels), frozenset(_edge(u, v) for u, v in pairs))


def _require(tree: LabeledTree, *vs: int) -> None:
    for v in vs:
        if v not in tree:
            raise UnknownLabel(f"label {v} is not a vertex of the tree")


@dataclass(frozen=True)
class RootedTree:
    tree: LabeledTree
    root: int

    def __post_init__(self):
        _require(self.tree, self.root)

    @cached_property
    def parent(self) -> dict[int, int | None]:
        par: dict[int, int | None] = {self.root: None}
        queue = deque([self.root])
        adj = self.tree.adjacency
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in par:
                    par[w] = u
                    queue.append(w)
        return par

    def children(self, v: int) -> list[int]:
        _require(self.tree, v)
        par = self.parent
        return [w for w in self.tree.adjacency[v] if par[w] == v]

    def ancestors(self, v: int) -> list[int]:
        """Path from the root down to ``v``, both ends included."""
        _require(self.tree, v)
        par = self.parent
        path = [v]
        while par[path[-1]] is not None:
            path.append(par[path[-1]])
        path.reverse()
        return path

    def depth(self, v: int) -> int:
        return len(self.ancestors(v)) - 1

    def lca(self, u: int, v: int) -> int:
        pu, pv = self.ancestors(u), self.ancestors(v)
        last = pu[0]
        for a, b in zip(pu, pv):
            if a != b:
                break
            last = a
        return last

    def child_toward(self, w: int, v: int) -> int:
        """The child of ``w`` whose subtree contains ``v``."""
        _require(self.tree, w)
        path = self.ancestors(v)
        try:
            i = path.index(w)
        except ValueError:
            raise NotAStrictDescendant(f"{v} is not a descendant of {w}") from None
        if i == len(path) - 1:
            raise NotAStrictDescendant(f"{v} is {w} itself, not a strict descendant")
        return path[i + 1]


@dataclass(frozen=True)
class DoublyRootedTree:
    """A tree with an ordered pair of (possibly equal) roots.

    The empty doubly rooted tree is represented by ``None`` wherever it may
    occur (see :class:`treebij.bijections.RootedTriple`).
    """

    tree: LabeledTree
    r1: int
    r2: int

    def __post_init__(self):
        if not len(self.tree):
            raise EmptyTree("a doubly rooted tree with roots needs at least one vertex")
        _require(self.tree, self.r1, self.r2)

    @property
    def labels(self) -> tuple[int, ...]:
        return self.tree.labels

    def spine(self) -> list[int]:
        """Vertices on the path from the first root to the second root."""
        return self.tree.rooted_at(self.r1).ancestors(self.r2)


@dataclass(frozen=True)
class TriplyRootedTree:
    tree: LabeledTree
    r1: int
    r2: int
    r3: int

    def __post_init__(self):
        if not len(self.tree):
            raise EmptyTree("a triply rooted tree needs at least one vertex")
        _require(self.tree, self.r1, self.r2, self.r3)

    @property
    def labels(self) -> tuple[int, ...]:
        return self.tree.labels

    @property
    def roots(self) -> tuple[int, int, int]:
        return (self.r1, self.r2, self.r3)

    def rooted(self) -> RootedTree:
        """The underlying tree rooted at the first root."""
        return self.tree.rooted_at(self.r1)


@dataclass(frozen=True)
class FiniteFunction:
    """A total map ``domain -> codomain``; ``values[i]`` is the image of ``domain[i]``."""

    domain: tuple[int, ...]
    codomain: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        domain = label_set(self.domain)
        codomain = label_set(self.codomain)
        values = tuple(self.values)
        if len(values) != len(domain):
            raise TreeBijError(f"{len(domain)} domain labels but {len(values)} values")
        if domain and not codomain:
            raise EmptyCodomain("nonempty domain needs a nonempty codomain")
        members = set(codomain)
        for x, y in zip(domain, values):
            if y not in members:
                raise DomainCodomainMismatch(f"f({x}) = {y} is outside the codomain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], codomain: Iterable[int]) -> "FiniteFunction":
        domain = label_set(mapping)
        return cls(domain, tuple(codomain), tuple(mapping[x] for x in domain))

    @classmethod
    def from_values(cls, values: Iterable[int], codomain_max: int) -> "FiniteFunction":
        """Function ``[len(values)] -> [codomain_max]`` with ``values[i-1] = f(i)``."""
        values = tuple(values)
        return cls(tuple(range(1, len(values) + 1)), tuple(range(1, codomain_max + 1)), values)

    @cached_property
    def mapping(self) -> dict[int, int]:
        return dict(zip(self.domain, self.values))

    def __call__(self, x: int) -> int:
        try:
            return self.mapping[x]
        except KeyError:
            raise UnknownLabel(f"{x} is not in the domain") from None

    def restrict(self, subset: Iterable[int]) -> "FiniteFunction":
        """Restriction to a subset closed under the function (an endofunction)."""
        sub = label_set(subset)
        m = self.mapping
        return FiniteFunction(sub, sub, tuple(m[x] for x in sub))

    def periodic_points(self) -> tuple[int, ...]:
        """Points lying on a cycle; requires the function to map its domain into itself."""
        m = self.mapping
        state: dict[int, int] = {}  # 1 = on current walk, 2 = finished
        periodic = set()
        for start in self.domain:
            if start in state:
                continue
            walk = []
            x = start
            while x in m and x not in state:
                state[x] = 1
                walk.append(x)
                x = m[x]
            if x in state and state[x] == 1:
                periodic.update(walk[walk.index(x):])
            for y in walk:
                state[y] = 2
        return tuple(sorted(periodic))
