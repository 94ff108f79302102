import itertools
import json
import random

import pytest
from hypothesis import given, strategies as st

from equipart import (MergeInput, equitable_merge, exact_acyclic_coloring,
                      lemma_quota_step, merge_quota, merge_threshold,
                      partition_2forests_1graph, proposition_merge)
from equipart.errors import BadParameters, InvalidColoring, OverlappingSets
from equipart.verify import check_mixed_partition
from graphs_util import complete, icosahedron
from equipart import Graph


def classes_of_sizes(sizes):
    out, start = [], 0
    for s in sizes:
        out.append(tuple(range(start, start + s)))
        start += s
    return out


def test_quota_examples():
    assert merge_quota(5, 2, 10) == 3  # floor((n+1)/3) shape
    for n in range(0, 30):
        assert merge_quota(5, 2, n) == (n + 1) // 3
        assert merge_quota(4, 3, n) == n // 3
    assert merge_quota(2, 1, 0) == 0


def test_quota_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        merge_quota(3, 3, 5)
    with pytest.raises(BadParameters):
        merge_quota(3, 0, 5)
    with pytest.raises(BadParameters):
        lemma_quota_step(4, 1, 5)


def test_threshold_never_exceeds_ell_minus_one():
    for k in range(2, 8):
        for ell in range(1, k):
            for n in range(0, 50):
                q = merge_quota(k, ell, n)
                assert merge_threshold(k, ell, n, q) <= ell - 1


def test_lemma_examples():
    assert lemma_quota_step(5, 2, 10) == (3, 7, 4, True)
    assert lemma_quota_step(5, 2, 12) == (4, 8, 4, True)
    # quick scan; the full range runs in the acceptance suite
    for k in range(3, 7):
        for ell in range(2, k):
            for n in range(1, 30):
                assert lemma_quota_step(k, ell, n)[3]


def test_merge_input_rejects_overlap_and_bad_ell():
    with pytest.raises(OverlappingSets):
        MergeInput.of([{0, 1}, {1, 2}], ell=1)
    with pytest.raises(BadParameters):
        MergeInput.of([{0}, {1}], ell=2)


def test_proposition_example_sizes_4_2_2_2_2():
    res = proposition_merge(MergeInput.of(classes_of_sizes((4, 2, 2, 2, 2)), 2))
    assert res.q == 4 and res.r == 0
    assert all(len(b) >= 4 for b in res.B)


def test_proposition_tightness_quota_is_2a():
    # sizes (ell*a, a, ..., a) pin the quota at exactly 2a
    for ell in (1, 2, 3):
        for k in range(ell + 1, 7):
            for a in (1, 2, 3):
                sizes = (ell * a,) + (a,) * (k - 1)
                assert merge_quota(k, ell, sum(sizes)) == 2 * a


def test_proposition_trivial_k2():
    res = proposition_merge(MergeInput.of([{0}, {1}], ell=1))
    assert res.B == ((0, 1),)
    assert res.B0 == () and res.q == 2


def test_proposition_exhaustive_small():
    # every composition of n <= 8 into k <= 5 classes, all ell; the
    # internal invariant assertions do the checking
    for n in range(2, 9):
        for k in range(2, min(6, n + 1)):
            for sizes in itertools.product(range(0, n + 1), repeat=k):
                if sum(sizes) != n:
                    continue
                for ell in range(1, k):
                    proposition_merge(
                        MergeInput.of(classes_of_sizes(sizes), ell))


def test_proposition_size_multiset_permutation_invariant():
    sizes = (5, 1, 4, 2, 2)
    base = sorted(len(b) for b in proposition_merge(
        MergeInput.of(classes_of_sizes(sizes), 2)).B)
    for perm in itertools.permutations(classes_of_sizes(sizes)):
        res = proposition_merge(MergeInput.of(perm, 2))
        assert sorted(len(b) for b in res.B) == base


def test_merge_result_json_shape():
    res = proposition_merge(MergeInput.of(classes_of_sizes((3, 2, 1)), 1))
    data = json.loads(res.dumps())
    assert set(data) == {"B0", "B", "I", "q", "r"}
    assert all(set(b) == {"members", "from"} for b in data["B"])


def test_equitable_merge_examples():
    parts = equitable_merge(classes_of_sizes((3, 3, 3, 3)))
    assert sorted(len(p) for p in parts) == [4, 4, 4]
    assert equitable_merge([{0, 1}, {2}]) == [(0, 1, 2)]
    parts = equitable_merge(classes_of_sizes((1, 1, 1, 1, 1)))
    assert sorted(len(p) for p in parts) == [1, 1, 1, 2]


def test_2forests_edgeless():
    g = Graph(6, [])
    p = partition_2forests_1graph(g, [range(6), (), (), (), ()])
    assert p.sizes() == (2, 2, 2)


def test_2forests_k4():
    p = partition_2forests_1graph(complete(4), [{0}, {1}, {2}, {3}, set()])
    assert p.sizes() == (2, 1, 1)


def test_2forests_icosahedron():
    g = icosahedron()
    col = exact_acyclic_coloring(g, 5)
    p = partition_2forests_1graph(g, col)
    assert p.sizes() == (4, 4, 4)
    r = check_mixed_partition(
        g, p, [("unconstrained", None), ("forest", None), ("forest", None)])
    assert r.passed


def test_2forests_rejects_invalid_coloring():
    g = complete(4)
    with pytest.raises(InvalidColoring):
        partition_2forests_1graph(g, [{0, 1}, {2}, {3}, set(), set()])
    with pytest.raises(InvalidColoring):
        partition_2forests_1graph(g, [{0}, {1}, {2}, {3}])


@st.composite
def class_systems(draw):
    k = draw(st.integers(min_value=2, max_value=6))
    sizes = draw(st.lists(st.integers(min_value=0, max_value=6),
                          min_size=k, max_size=k))
    ell = draw(st.integers(min_value=1, max_value=k - 1))
    return classes_of_sizes(sizes), ell


@given(class_systems())
def test_proposition_invariants_hold(sys_ell):
    classes, ell = sys_ell
    proposition_merge(MergeInput.of(classes, ell))  # asserts internally


@given(st.integers(min_value=2, max_value=6), st.data())
def test_equitable_merge_random(k, data):
    sizes = data.draw(st.lists(st.integers(min_value=0, max_value=8),
                               min_size=k, max_size=k))
    parts = equitable_merge(classes_of_sizes(sizes))
    n = sum(sizes)
    flat = sorted(x for p in parts for x in p)
    assert flat == list(range(n))
    lens = [len(p) for p in parts]
    assert max(lens) - min(lens) <= 1
