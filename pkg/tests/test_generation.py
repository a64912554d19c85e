import itertools
import json
import math

import pytest

from treebij.errors import EmptyCodomain, EmptyGroundSet, EmptyLabelSet, InvalidCode, TooSmall
from treebij.generation import (
    PruferCode,
    SplitMix64,
    all_compositions3,
    all_functions,
    all_rooted_triples,
    all_trees,
    all_triply_rooted,
    prufer_decode,
    prufer_encode,
    sample_function,
    sample_triply_rooted,
)
from treebij.jsonio import dumps, tree_to_obj
from treebij.trees import LabeledTree, validate_tree


def test_prufer_examples():
    assert prufer_decode(PruferCode((1, 2), ())).edges == {(1, 2)}
    assert prufer_decode(PruferCode((1, 2, 3), (3,))).edges == {(1, 3), (2, 3)}
    assert prufer_encode(validate_tree([1, 2], [(1, 2)])).code == ()
    assert prufer_encode(validate_tree([1, 2, 3], [(1, 3), (2, 3)])).code == (3,)
    trees = {prufer_decode(PruferCode((1, 2, 3), (c,))) for c in (1, 2, 3)}
    assert len(trees) == 3
    assert {prufer_encode(t).code for t in trees} == {(1,), (2,), (3,)}


def test_prufer_on_arbitrary_labels():
    p = PruferCode((4, 7, 11, 20), (11, 11))
    t = prufer_decode(p)
    assert t.labels == (4, 7, 11, 20)
    assert prufer_encode(t) == p


def test_prufer_errors():
    with pytest.raises(InvalidCode):
        PruferCode((1, 2, 3), (4,))
    with pytest.raises(InvalidCode):
        PruferCode((1, 2, 3), ())
    with pytest.raises(TooSmall):
        prufer_encode(LabeledTree((1,), frozenset()))


@pytest.mark.parametrize("n", range(2, 7))
def test_prufer_round_trip_exhaustive(n):
    labels = tuple(range(1, n + 1))
    seen = set()
    for code in itertools.product(labels, repeat=n - 2):
        p = PruferCode(labels, code)
        t = prufer_decode(p)
        assert prufer_encode(t) == p
        seen.add(t)
    assert len(seen) == n ** (n - 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_stream_counts(n):
    labels = range(1, n + 1)
    assert sum(1 for _ in all_trees(labels)) == (n ** (n - 2) if n >= 2 else 1)
    assert sum(1 for _ in all_triply_rooted(n)) == n ** (n + 1)
    assert sum(1 for _ in all_functions(labels, labels)) == n**n
    assert sum(1 for _ in all_compositions3(labels)) == 3**n - 2**n


def test_small_stream_examples():
    assert sum(1 for _ in all_functions([1, 2], [1])) == 1
    assert sum(1 for _ in all_functions([1, 2, 3], [1, 2])) == 8
    assert sum(1 for _ in all_functions(range(1, 5), range(1, 4))) == 81
    assert list(all_compositions3([1]))[0].block_a == (1,)
    [t] = all_triply_rooted(1)
    assert t.roots == (1, 1, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_streams_have_no_duplicates(n):
    for stream in (all_triply_rooted(n), all_rooted_triples(n)):
        keys = [dumps(obj) for obj in map(_obj, stream)]
        assert len(keys) == len(set(keys)) == n ** (n + 1)


def _obj(x):
    if hasattr(x, "parts"):
        return [tree_to_obj(p) for p in x.parts()]
    return tree_to_obj(x)


def test_stream_errors():
    with pytest.raises(EmptyLabelSet):
        next(all_trees([]))
    with pytest.raises(EmptyCodomain):
        next(all_functions([1], []))
    with pytest.raises(EmptyGroundSet):
        next(all_compositions3([]))


def test_splitmix64_reference_values():
    # first outputs for seed 1234567, from the published reference implementation
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_samplers_deterministic():
    assert sample_triply_rooted(9, 77) == sample_triply_rooted(9, 77)
    assert sample_function(9, 77) == sample_function(9, 77)
    assert sample_triply_rooted(1, 5).roots == (1, 1, 1)
    assert sample_function(1, 5).values == (1, 1)


def test_sampler_frequencies_n2():
    n, total = 2, 10 * 2**3
    counts = {}
    for seed in range(total):
        t = sample_triply_rooted(n, seed)
        counts[t] = counts.get(t, 0) + 1
    assert len(counts) == 8
    p = 1 / 8
    sigma = math.sqrt(total * p * (1 - p))
    for c in counts.values():
        assert abs(c - total * p) <= 5 * sigma


def test_function_sampler_frequencies_n2():
    total = 800
    counts = {}
    for seed in range(total):
        f = sample_function(2, seed)
        counts[f.values] = counts.get(f.values, 0) + 1
    assert len(counts) == 8
    sigma = math.sqrt(total / 8 * 7 / 8)
    assert all(abs(c - total / 8) <= 5 * sigma for c in counts.values())
