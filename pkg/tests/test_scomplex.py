import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon.coxeter import nerve, right_angled_cycle
from bredon.errors import DuplicateVertex, NotAFace, NotASubcomplex, UnknownVertex
from bredon.scomplex import barycentric_subdivision, cone, from_maximal_faces, link, make_pair
from bredon.zcohomology import absolute_cohomology, reduced_cohomology_all, same_cohomology

TRIANGLE = from_maximal_faces([1, 2, 3], [(1, 2, 3)])
HOLLOW = from_maximal_faces([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
EMPTY = from_maximal_faces([], [])


def test_from_maximal_faces():
    assert TRIANGLE.f_vector() == [3, 3, 1]
    assert HOLLOW.f_vector() == [3, 3]
    assert EMPTY.is_empty() and EMPTY.dimension == -1
    with pytest.raises(UnknownVertex):
        from_maximal_faces([1], [(1, 2)])


def test_links():
    assert link(HOLLOW, (1,)).faces == {(2,), (3,)}
    assert link(TRIANGLE, (1,)).faces == {(2,), (3,), (2, 3)}
    with pytest.raises(NotAFace):
        link(HOLLOW, (1, 2, 3))


def test_nerve_link_in_pentagon():
    L = nerve(right_angled_cycle(5)).complex
    assert link(L, ("s1",)).faces == {("s2",), ("s5",)}


def test_cone():
    assert cone(EMPTY, "a").faces == {("a",)}
    S0 = from_maximal_faces([1, 2], [(1,), (2,)])
    assert cone(S0, 0).f_vector() == [3, 2]
    assert cone(HOLLOW, 0).f_vector() == [4, 6, 3]
    assert cone(HOLLOW, 0).vertex_order[0] == 0
    with pytest.raises(DuplicateVertex):
        cone(HOLLOW, 1)


def test_barycentric_subdivision_counts():
    edge = from_maximal_faces([1, 2], [(1, 2)])
    assert barycentric_subdivision(edge).f_vector() == [3, 2]
    assert barycentric_subdivision(HOLLOW).f_vector() == [6, 6]
    assert barycentric_subdivision(TRIANGLE).f_vector() == [7, 12, 6]


def test_make_pair():
    make_pair(TRIANGLE, HOLLOW)
    make_pair(TRIANGLE, TRIANGLE)
    make_pair(TRIANGLE, EMPTY)
    with pytest.raises(NotASubcomplex):
        make_pair(HOLLOW, TRIANGLE)


@st.composite
def complexes(draw):
    n = draw(st.integers(1, 6))
    tops = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=1, max_size=4, unique=True), min_size=1, max_size=6))
    return from_maximal_faces(range(n), tops)


@given(complexes())
def test_closed_under_faces(C):
    for f in C.faces:
        for i in range(len(f)):
            if len(f) > 1:
                assert f[:i] + f[i + 1:] in C.faces


@given(complexes(), st.data())
def test_link_dimension_bound(C, data):
    sigma = data.draw(st.sampled_from(sorted(C.faces)))
    assert link(C, sigma).dimension <= C.dimension - (len(sigma) - 1) - 1


@given(complexes())
def test_subdivision_preserves_cohomology(C):
    assert same_cohomology(absolute_cohomology(C), absolute_cohomology(barycentric_subdivision(C)))


@given(complexes())
def test_cones_are_acyclic(C):
    assert not any(reduced_cohomology_all(cone(C, "apex")).values())
