import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon.coxeter import (
    INF,
    affine_A,
    cd_building_formula,
    coxeter_matrix,
    cross_check,
    from_diagram,
    graph_product_to_coxeter,
    is_finite_type,
    nerve,
    right_angled_cycle,
    spherical_poset,
    vcd_link_formula,
)
from bredon.errors import InvalidCoxeterMatrix, InvalidOrder, UnknownGenerator
from corpus import coxeter_corpus
from oracles import positive_definite, subsets

CORPUS = coxeter_corpus()
DINF = from_diagram("I2(inf)")


def test_matrix_validation():
    with pytest.raises(InvalidCoxeterMatrix):
        coxeter_matrix(["a", "b"], [[1, 3], [2, 1]])
    with pytest.raises(InvalidCoxeterMatrix):
        coxeter_matrix(["a", "b"], [[1, 1], [1, 1]])
    with pytest.raises(InvalidCoxeterMatrix):
        coxeter_matrix(["a"], [[2]])
    assert coxeter_matrix(["a", "b"], [[1, 0], [0, 1]]).m[0][1] == INF


def test_is_finite_type_examples():
    A2 = from_diagram("A2")
    assert is_finite_type(A2, [])
    assert is_finite_type(A2)
    assert not is_finite_type(affine_A(3))
    assert not is_finite_type(DINF)
    with pytest.raises(UnknownGenerator):
        is_finite_type(A2, ["zz"])


@pytest.mark.parametrize("name", ["A1", "A4", "B3", "D4", "F4", "H3", "H4", "E6", "I2(7)"])
def test_catalogue_types_are_finite(name):
    assert is_finite_type(from_diagram(name))


@pytest.mark.parametrize("name", sorted(n for n, M in CORPUS.items() if len(M.generators) <= 6))
def test_classifier_matches_cosine_oracle(name):
    M = CORPUS[name]
    for J in subsets(M.generators):
        sub = M.restrict(J)
        assert is_finite_type(M, J) == positive_definite(sub.m), J


def test_spherical_poset_examples():
    assert set(spherical_poset(DINF).subsets.values()) == {(), ("s1",), ("s2",)}
    assert len(spherical_poset(right_angled_cycle(5)).subsets) == 11
    A3 = from_diagram("A3")
    assert len(spherical_poset(A3).subsets) == 8


def test_nerve_examples():
    assert nerve(DINF).complex.faces == {("s1",), ("s2",)}
    L = nerve(right_angled_cycle(5)).complex
    assert L.f_vector() == [5, 5]
    assert nerve(from_diagram("A3")).complex.f_vector() == [3, 3, 1]


@pytest.mark.parametrize("M,expected", [
    (from_diagram("A3"), 0), (from_diagram("H3"), 0), (DINF, 1),
    (right_angled_cycle(5), 2), (right_angled_cycle(6), 2), (affine_A(3), 2),
])
def test_formulas(M, expected):
    assert vcd_link_formula(M)[0] == expected
    assert cd_building_formula(M)[0] == expected


def test_graph_products():
    K3 = graph_product_to_coxeter([("a", 2), ("b", 2), ("c", 2)], [("a", "b"), ("b", "c"), ("a", "c")])
    assert cd_building_formula(K3)[0] == 0
    free = graph_product_to_coxeter([("a", 2), ("b", 3)], [])
    assert cd_building_formula(free)[0] == 1
    pent = graph_product_to_coxeter([(f"v{i}", 2) for i in range(5)], [(f"v{i}", f"v{(i + 1) % 5}") for i in range(5)])
    assert cd_building_formula(pent)[0] == 2
    with pytest.raises(InvalidOrder):
        graph_product_to_coxeter([("a", 1)], [])


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_cross_route_agreement_on_corpus(name):
    M = CORPUS[name]
    assert all(ok for _, ok in cross_check(M))
    assert vcd_link_formula(M)[0] == cd_building_formula(M)[0]


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_spherical_poset_downward_closed_and_nerve(name):
    M = CORPUS[name]
    Q = spherical_poset(M)
    sets = {frozenset(J) for J in Q.subsets.values()}
    assert frozenset() in sets
    assert all(J - {s} in sets for J in sets for s in J)
    assert {frozenset(f) for f in nerve(M, Q).complex.faces} == sets - {frozenset()}


@pytest.mark.parametrize("name", sorted(n for n, M in CORPUS.items() if len(M.generators) <= 6))
def test_deleting_a_generator_never_increases(name):
    M = CORPUS[name]
    full = cd_building_formula(M)[0]
    for s in M.generators:
        rest = [t for t in M.generators if t != s]
        if rest:
            sub = M.restrict(rest)
            assert cd_building_formula(sub)[0] <= full
            assert vcd_link_formula(sub)[0] <= full


@st.composite
def matrices(draw):
    n = draw(st.integers(1, 5))
    m = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = draw(st.sampled_from([2, 2, 2, 3, 3, 4, 5, 6, math.inf]))
    return coxeter_matrix([f"s{i}" for i in range(n)], m)


@given(matrices())
def test_random_matrices_classifier_vs_oracle(M):
    assert is_finite_type(M) == positive_definite(M.m)


@given(matrices())
def test_random_matrices_routes_agree(M):
    assert all(ok for _, ok in cross_check(M))
