"""JSON wire formats.

Trees::

    {"labels": [1, 2, 3], "edges": [[1, 2], [2, 3]]}           # free tree
    {..., "root": 2}                                          # rooted
    {..., "roots": [r1, r2]}  /  {..., "roots": [r1, r2, r3]} # doubly / triply
    {"labels": [], "edges": [], "roots": []}                  # empty doubly rooted

Functions ``[m] -> [k]``::

    {"domain_max": m, "codomain_max": k, "values": [f(1), ..., f(m)]}

and on arbitrary label sets ``{"domain": [...], "codomain": [...], "values": [...]}``.
A triple ``(D, D', D'')`` is a JSON list of three doubly rooted trees.

Canonical output sorts keys, labels, each edge pair and the edge list, and is
written compactly on one line.
"""
from __future__ import annotations

import json
from typing import Any

from .bijections import RootedTriple
from .errors import TreeBijError
from .trees import (
    DoublyRootedTree,
    FiniteFunction,
    LabeledTree,
    RootedTree,
    TriplyRootedTree,
    validate_tree,
)


class FormatError(TreeBijError):
    """Input JSON does not have the expected shape."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def canonicalize(text: str) -> str:
    """Re-serialize JSON text canonically (key order, whitespace)."""
    return dumps(json.loads(text))


def _ints(seq: Any, what: str) -> list[int]:
    if not isinstance(seq, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in seq
    ):
        raise FormatError(f"{what} must be a list of integers")
    return seq


def _tree_obj(tree: LabeledTree) -> dict:
    return {"labels": list(tree.labels), "edges": [list(e) for e in tree.sorted_edges()]}


def tree_to_obj(t) -> dict:
    if t is None:
        return {"labels": [], "edges": [], "roots": []}
    if isinstance(t, LabeledTree):
        return _tree_obj(t)
    obj = _tree_obj(t.tree)
    if isinstance(t, RootedTree):
        obj["root"] = t.root
    elif isinstance(t, DoublyRootedTree):
        obj["roots"] = [t.r1, t.r2]
    elif isinstance(t, TriplyRootedTree):
        obj["roots"] = [t.r1, t.r2, t.r3]
    else:
        raise TypeError(f"not a tree: {type(t).__name__}")
    return obj


def tree_from_obj(obj: Any):
    """Parse any tree variant; the empty doubly rooted tree parses to ``None``."""
    if not isinstance(obj, dict) or "labels" not in obj or "edges" not in obj:
        raise FormatError('a tree object needs "labels" and "edges"')
    labels = _ints(obj["labels"], "labels")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise FormatError("edges must be a list")
    for e in edges:
        if len(_ints(e, "each edge")) != 2:
            raise FormatError("each edge must have two endpoints")
    if "roots" in obj:
        roots = _ints(obj["roots"], "roots")
        if not roots:
            if labels or edges:
                raise FormatError("only the empty tree may have no roots")
            return None
        tree = validate_tree(labels, edges)
        if len(roots) == 2:
            return DoublyRootedTree(tree, *roots)
        if len(roots) == 3:
            return TriplyRootedTree(tree, *roots)
        raise FormatError(f"roots must have 0, 2 or 3 entries, got {len(roots)}")
    tree = validate_tree(labels, edges)
    if "root" in obj:
        (root,) = _ints([obj["root"]], "root")
        return RootedTree(tree, root)
    return tree


def function_to_obj(f: FiniteFunction) -> dict:
    m, k = len(f.domain), len(f.codomain)
    if f.domain == tuple(range(1, m + 1)) and f.codomain == tuple(range(1, k + 1)):
        return {"domain_max": m, "codomain_max": k, "values": list(f.values)}
    return {"domain": list(f.domain), "codomain": list(f.codomain), "values": list(f.values)}


def function_from_obj(obj: Any) -> FiniteFunction:
    if not isinstance(obj, dict) or "values" not in obj:
        raise FormatError('a function object needs "values"')
    values = _ints(obj["values"], "values")
    if "domain_max" in obj:
        m, k = _ints([obj["domain_max"], obj.get("codomain_max")], "domain_max/codomain_max")
        if m != len(values):
            raise FormatError(f"domain_max is {m} but {len(values)} values were given")
        return FiniteFunction.from_values(values, k)
    if "domain" in obj and "codomain" in obj:
        return FiniteFunction(
            tuple(_ints(obj["domain"], "domain")), tuple(_ints(obj["codomain"], "codomain")), values
        )
    raise FormatError('a function object needs "domain_max" or "domain"/"codomain"')


def triple_to_obj(q: RootedTriple) -> list:
    return [tree_to_obj(p) for p in q.parts()]


def triple_from_obj(obj: Any) -> RootedTriple:
    if not isinstance(obj, list) or len(obj) != 3:
        raise FormatError("a triple is a list of three doubly rooted trees")
    parts = [tree_from_obj(o) for o in obj]
    for p in parts:
        if p is not None and not isinstance(p, DoublyRootedTree):
            raise FormatError('each part of a triple needs "roots": [r1, r2] or []')
    return RootedTriple(*parts)
