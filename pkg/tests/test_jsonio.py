import json

import pytest

from treebij.bijections import RootedTriple
from treebij.errors import TreeBijError, WrongEdgeCount
from treebij.jsonio import (
    FormatError,
    canonicalize,
    dumps,
    function_from_obj,
    function_to_obj,
    tree_from_obj,
    tree_to_obj,
    triple_from_obj,
    triple_to_obj,
)
from treebij.trees import (
    DoublyRootedTree,
    FiniteFunction,
    LabeledTree,
    RootedTree,
    TriplyRootedTree,
    validate_tree,
)


def test_tree_variants_round_trip():
    t = validate_tree([3, 1, 2], [(3, 1), (2, 1)])
    for obj in (t, RootedTree(t, 2), DoublyRootedTree(t, 1, 3), TriplyRootedTree(t, 1, 2, 2)):
        assert tree_from_obj(json.loads(dumps(tree_to_obj(obj)))) == obj


def test_canonical_tree_output():
    t = validate_tree([3, 1, 2], [(3, 1), (2, 1)])
    assert dumps(tree_to_obj(t)) == '{"edges":[[1,2],[1,3]],"labels":[1,2,3]}\n'


def test_empty_doubly_rooted():
    empty = {"labels": [], "edges": [], "roots": []}
    assert tree_from_obj(empty) is None
    assert tree_to_obj(None) == empty
    with pytest.raises(FormatError):
        tree_from_obj({"labels": [1], "edges": [], "roots": []})


def test_function_formats():
    f = FiniteFunction.from_values([8, 6, 8, 5, 4, 12, 4, 6, 12, 2, 4, 2, 3], 12)
    obj = function_to_obj(f)
    assert obj == {"domain_max": 13, "codomain_max": 12, "values": list(f.values)}
    assert function_from_obj(obj) == f
    g = FiniteFunction.from_mapping({4: 5, 5: 4, 7: 4}, [4, 5, 7])
    assert function_to_obj(g) == {"domain": [4, 5, 7], "codomain": [4, 5, 7], "values": [5, 4, 4]}
    assert function_from_obj(function_to_obj(g)) == g


def test_triple_round_trip():
    single = DoublyRootedTree(LabeledTree((1,), frozenset()), 1, 1)
    q = RootedTriple(single, None, DoublyRootedTree(validate_tree([2, 3], [(2, 3)]), 3, 2))
    obj = triple_to_obj(q)
    assert obj[1] == {"labels": [], "edges": [], "roots": []}
    assert triple_from_obj(json.loads(dumps(obj))) == q


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"labels": [1, 2]},
        {"labels": [1, 2], "edges": [[1]]},
        {"labels": [1, "2"], "edges": [[1, 2]]},
        {"labels": [1, 2], "edges": [[1, 2]], "roots": [1]},
    ],
)
def test_bad_tree_objects(obj):
    with pytest.raises(FormatError):
        tree_from_obj(obj)


def test_invalid_tree_surfaces_tree_error():
    with pytest.raises(WrongEdgeCount):
        tree_from_obj({"labels": [1, 2, 3], "edges": [[1, 2]]})


@pytest.mark.parametrize(
    "obj",
    [
        {"values": [1]},
        {"domain_max": 2, "codomain_max": 1, "values": [1]},
        {"domain_max": 2, "codomain_max": 1, "values": [1, 2]},
        {"domain_max": 1, "codomain_max": 1, "values": [True]},
    ],
)
def test_bad_function_objects(obj):
    with pytest.raises(TreeBijError):
        function_from_obj(obj)


def test_canonicalize():
    assert canonicalize('{ "b": 1,\n "a": [2, 1] }') == '{"a":[2,1],"b":1}\n'
