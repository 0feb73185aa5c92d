import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon.errors import DegreeMismatch, InvalidPermutation, NotASubgroup, SizeCapExceeded
from bredon.pgroup import (
    conjugate,
    cyclic,
    enumerate_group,
    from_cycles,
    group,
    identity,
    inverse,
    largest_in_coset,
    left_cosets,
    mul,
    perm,
    random_order,
    subgroup_equal,
    subgroup_le,
    subgroups_two_generated,
    symmetric,
)

S3 = symmetric(3)
T01 = group(3, [from_cycles(3, [0, 1])])
T12 = group(3, [from_cycles(3, [1, 2])])


def test_enumerate_examples():
    assert len(enumerate_group(group(2, [[1, 0]]), 10)) == 2
    assert len(enumerate_group(group(3, [[1, 0, 2], [1, 2, 0]]), 10)) == 6
    with pytest.raises(SizeCapExceeded):
        enumerate_group(cyclic(5), 3)


def test_elements_sorted_lexicographically():
    els = S3.elements()
    assert list(els) == sorted(els) and els[0] == identity(3)


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        perm([0, 0, 1])
    with pytest.raises(DegreeMismatch):
        group(3, [[1, 0]])


def test_conjugation_relabels():
    g = from_cycles(3, [0, 1, 2])
    assert subgroup_equal(conjugate(T01, g), T12)
    assert subgroup_le(T01, S3)
    assert not subgroup_equal(T01, T12)
    with pytest.raises(DegreeMismatch):
        subgroup_le(T01, symmetric(4))


def test_cosets():
    assert len(left_cosets(S3, T01)) == 3
    assert len(left_cosets(S3, S3)) == 1
    assert largest_in_coset(T01, identity(3)) == (1, 0, 2)
    with pytest.raises(NotASubgroup):
        left_cosets(T01, S3)


def test_subgroup_lattice_of_s4():
    subs = subgroups_two_generated(symmetric(4))
    assert len(subs) == 30  # all subgroups of S4 are 2-generated


groups = st.sampled_from([symmetric(3), symmetric(4), cyclic(6), group(4, [[1, 0, 3, 2], [2, 3, 0, 1]])])


@given(groups, st.data())
def test_lagrange_and_coset_partition(G, data):
    subs = subgroups_two_generated(G)
    H = data.draw(st.sampled_from(subs))
    assert G.order % H.order == 0
    reps = left_cosets(G, H)
    assert len(reps) * H.order == G.order
    seen = set()
    for r in reps:
        c = {mul(r, h) for h in H.elements()}
        assert not (c & seen)
        seen |= c
    assert seen == G.element_set


@given(groups, st.data())
def test_conjugate_roundtrip(G, data):
    H = data.draw(st.sampled_from(subgroups_two_generated(G)))
    g = data.draw(st.sampled_from(G.elements()))
    assert subgroup_equal(conjugate(conjugate(H, g), inverse(g)), H)


@given(groups, st.randoms(use_true_random=False))
def test_random_order_is_a_total_order(G, rng):
    key = random_order(G, random.Random(rng.random()))
    ranks = sorted(key(g) for g in G.elements())
    assert ranks == list(range(G.order))
