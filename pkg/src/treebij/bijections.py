"""Constructive bijections between functions and multiply rooted trees.

* :func:`joyal_forward` / :func:`joyal_inverse`: endofunctions of a set S and
  doubly rooted trees on S.  The periodic points become the path between the
  two roots.
* :func:`merge` / :func:`split`: triples ``(D, D', D'')`` of doubly rooted trees
  partitioning ``[n]`` (``D`` nonempty, the others possibly ``None``) and
  triply rooted trees on ``[n]``.
* :func:`phi_forward` / :func:`phi_inverse`: functions ``[n+1] -> [n]`` and
  triply rooted trees on ``[n]``.  The orbit of ``n+1`` (minus ``n+1``) lands
  on the ancestors of the second root, the periodic points on the ancestors
  of the third root, both taken with the tree rooted at the first root.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import BadDomain, DomainCodomainMismatch, EmptyTree, OverlappingLabels
from .trees import DoublyRootedTree, FiniteFunction, LabeledTree, TriplyRootedTree


def joyal_forward(f: FiniteFunction) -> DoublyRootedTree:
    """Doubly rooted tree of an endofunction.

    Sort the periodic points ``c_1 < ... < c_k`` and lay out the spine
    ``f(c_1), ..., f(c_k)``; every other point hangs off its image.
    """
    if f.domain != f.codomain:
        raise DomainCodomainMismatch("Joyal's bijection needs domain == codomain")
    if not f.domain:
        raise EmptyTree("Joyal's bijection needs a nonempty set")
    m = f.mapping
    cyclic = f.periodic_points()
    spine = [m[c] for c in cyclic]
    cyclic_set = set(cyclic)
    edges = set(zip(spine, spine[1:]))
    edges.update((x, m[x]) for x in f.domain if x not in cyclic_set)
    tree = LabeledTree(f.domain, frozenset((min(e), max(e)) for e in edges))
    return DoublyRootedTree(tree, spine[0], spine[-1])


def joyal_inverse(d: Optional[DoublyRootedTree]) -> FiniteFunction:
    if d is None:
        raise EmptyTree("the empty doubly rooted tree has no function")
    rooted = d.tree.rooted_at(d.r1)
    spine = rooted.ancestors(d.r2)
    m = dict(zip(sorted(spine), spine))
    on_spine = set(spine)
    # rooted at r1 (a spine vertex), every off-spine parent points toward the spine
    for x in d.labels:
        if x not in on_spine:
            m[x] = rooted.parent[x]
    return FiniteFunction.from_mapping(m, d.labels)


@dataclass(frozen=True)
class RootedTriple:
    d: DoublyRootedTree
    dp: Optional[DoublyRootedTree] = None
    dpp: Optional[DoublyRootedTree] = None

    def __post_init__(self):
        if self.d is None:
            raise EmptyTree("the first doubly rooted tree must be nonempty")
        seen: set[int] = set()
        for part in self.parts():
            if part is None:
                continue
            overlap = seen.intersection(part.labels)
            if overlap:
                raise OverlappingLabels(f"labels {sorted(overlap)} appear in two blocks")
            seen.update(part.labels)

    def parts(self) -> tuple:
        return (self.d, self.dp, self.dpp)

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(x for p in self.parts() if p is not None for x in p.labels))


def merge(q: RootedTriple) -> TriplyRootedTree:
    d, dp, dpp = q.d, q.dp, q.dpp
    edges = set(d.tree.edges)
    for part in (dp, dpp):
        if part is not None:
            edges |= part.tree.edges
            edges.add((min(d.r2, part.r1), max(d.r2, part.r1)))
    tree = LabeledTree(q.ground, frozenset(edges))
    r2 = dp.r2 if dp is not None else d.r2
    r3 = dpp.r2 if dpp is not None else d.r2
    return TriplyRootedTree(tree, d.r1, r2, r3)


def split(t: TriplyRootedTree) -> RootedTriple:
    rooted = t.rooted()
    r1, r2, r3 = t.roots
    w = rooted.lca(r2, r3)
    cut = []
    x = y = None
    if w != r2:
        x = rooted.child_toward(w, r2)
        cut.append((w, x))
    if w != r3:
        y = rooted.child_toward(w, r3)
        cut.append((w, y))
    d = DoublyRootedTree(t.tree.component(r1, cut), r1, w)
    dp = DoublyRootedTree(t.tree.component(x, cut), x, r2) if x is not None else None
    dpp = DoublyRootedTree(t.tree.component(y, cut), y, r3) if y is not None else None
    return RootedTriple(d, dp, dpp)


def _check_shape(f: FiniteFunction) -> int:
    n = len(f.codomain)
    if n < 1 or f.codomain != tuple(range(1, n + 1)) or f.domain != tuple(range(1, n + 2)):
        raise BadDomain("expected a function from [n+1] to [n]")
    return n


def phi_forward(f: FiniteFunction) -> TriplyRootedTree:
    n = _check_shape(f)
    m = f.mapping
    extra = n + 1
    # walk from n+1 until the first repeated value u_j = f(u_k)
    path = [extra]
    index = {extra: 0}
    x = m[extra]
    while x not in index:
        index[x] = len(path)
        path.append(x)
        x = m[x]
    u_k, u_j, u_1 = path[-1], x, path[1]

    # weak component of n+1 in the functional digraph
    undirected: dict[int, list[int]] = {v: [] for v in f.domain}
    for a, b in m.items():
        undirected[a].append(b)
        undirected[b].append(a)
    comp = {extra}
    queue = deque([extra])
    while queue:
        a = queue.popleft()
        for b in undirected[a]:
            if b not in comp:
                comp.add(b)
                queue.append(b)
    comp.discard(extra)

    edges = {(min(v, m[v]), max(v, m[v])) for v in comp if v != u_k}
    rest = [v for v in f.codomain if v not in comp]
    if not rest:
        return TriplyRootedTree(LabeledTree(f.codomain, frozenset(edges)), u_k, u_1, u_j)
    dt = joyal_forward(f.restrict(rest))
    edges |= dt.tree.edges
    edges.add((min(u_j, dt.r1), max(u_j, dt.r1)))
    return TriplyRootedTree(LabeledTree(f.codomain, frozenset(edges)), u_k, u_1, dt.r2)


def phi_inverse(t: TriplyRootedTree) -> FiniteFunction:
    n = len(t.labels)
    if t.labels != tuple(range(1, n + 1)):
        raise BadDomain("expected a triply rooted tree on [n]")
    rooted = t.rooted()
    r1, r2, r3 = t.roots
    u0 = rooted.lca(r2, r3)
    values: dict[int, int] = {n + 1: r2}
    if u0 == r3:
        main = t.tree
    else:
        u1 = rooted.child_toward(u0, r3)
        main = t.tree.component(r1, [(u0, u1)])
        side = DoublyRootedTree(t.tree.component(u1, [(u0, u1)]), u1, r3)
        values.update(joyal_inverse(side).mapping)
    for v in main.labels:
        values[v] = u0 if v == r1 else rooted.parent[v]
    return FiniteFunction.from_values([values[i] for i in range(1, n + 2)], n)


@dataclass(frozen=True)
class OrbitReport:
    orbit: tuple[int, ...]  # iterates of n+1 in order, n+1 itself excluded
    periodic: tuple[int, ...]


def orbit_report(f: FiniteFunction) -> OrbitReport:
    n = _check_shape(f)
    m = f.mapping
    orbit = []
    seen = set()
    x = m[n + 1]
    while x not in seen:
        seen.add(x)
        orbit.append(x)
        x = m[x]
    return OrbitReport(tuple(orbit), f.periodic_points())
