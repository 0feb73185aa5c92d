import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon.errors import CycleError, InputError, UnknownElement
from bredon.poset import build_poset, chains, order_complex, upper_set


def chain3():
    return build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])


def test_singleton():
    P = build_poset(["a"], [])
    assert P.elements == ("a",)
    assert P.strict_lt == frozenset()


def test_transitivity_forced():
    assert ("a", "c") in chain3().strict_lt


def test_antisymmetry_violation():
    with pytest.raises(CycleError):
        build_poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_reflexive_relation():
    with pytest.raises(CycleError):
        build_poset(["a"], [("a", "a")])


def test_dangling_reference():
    with pytest.raises(UnknownElement):
        build_poset(["a"], [("a", "z")])


def test_duplicate_identifiers():
    with pytest.raises(InputError):
        build_poset(["a", "a"], [])


def test_linear_extension_ties_follow_input():
    P = build_poset(["x", "y", "z"], [("z", "x")])
    assert P.elements == ("y", "z", "x")


def test_upper_sets_on_chain():
    P = chain3()
    assert upper_set(P, ["b"], strict=True) == {"c"}
    assert upper_set(P, ["b"]) == {"b", "c"}
    with pytest.raises(UnknownElement):
        upper_set(P, ["q"])


def ngon_poset(n):
    edges = [f"e{i}" for i in range(n)]
    verts = [f"v{i}" for i in range(n)]
    rel = [("F", e) for e in edges]
    for i, e in enumerate(edges):
        rel += [(e, verts[i]), (e, verts[(i + 1) % n])]
    return build_poset(["F"] + edges + verts, rel)


def test_ngon_strict_upper_set_is_boundary():
    P = ngon_poset(5)
    assert upper_set(P, ["F"], strict=True) == set(P.elements) - {"F"}


def test_order_complex_small():
    P = build_poset(["a", "b"], [("a", "b")])
    C = order_complex(P)
    assert C.f_vector() == [2, 1]
    A = order_complex(build_poset(["a", "b", "c"], []))
    assert A.f_vector() == [3]


def test_triangle_boundary_face_poset():
    # faces of a solid triangle under reverse inclusion, restricted to the boundary
    verts = ["1", "2", "3"]
    edges = ["12", "13", "23"]
    rel = [(e, v) for e in edges for v in verts if v in e]
    P = build_poset(edges + verts + ["123"], rel + [("123", e) for e in edges])
    C = order_complex(P, edges + verts)
    assert C.f_vector() == [6, 6]


def test_order_complex_unknown_carrier():
    with pytest.raises(UnknownElement):
        order_complex(chain3(), ["a", "nope"])


def test_chains_bottom_up():
    cs = chains(chain3())
    assert ("a", "b", "c") in cs and len(cs) == 7


@st.composite
def posets(draw):
    n = draw(st.integers(1, 7))
    names = [f"p{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(names))
    return build_poset(perm, [(names[i], names[j]) for i, j in chosen])


@given(posets())
def test_stored_order_is_linear_extension(P):
    pos = P.rank
    assert all(pos[a] < pos[b] for a, b in P.strict_lt)


@given(posets())
def test_closure_is_transitive_and_irreflexive(P):
    lt = P.strict_lt
    assert all((a, a) not in lt for a in P.elements)
    assert all((a, c) in lt for a, b in lt for b2, c in lt if b == b2)


@given(posets())
def test_dimension_is_longest_chain_minus_one(P):
    assert order_complex(P).dimension == P.longest_chain() - 1


@given(posets(), st.data())
def test_upper_set_relations(P, data):
    omega = data.draw(st.lists(st.sampled_from(P.elements), unique=True, min_size=1))
    strict = upper_set(P, omega, strict=True)
    full = upper_set(P, omega)
    assert full == set(omega) | strict
    assert order_complex(P, strict).faces <= order_complex(P, full).faces


@given(posets())
def test_minimum_gives_a_cone(P):
    bottom = "zz_bottom"
    Q = build_poset((bottom,) + P.elements, list(P.strict_lt) + [(bottom, x) for x in P.elements])
    C = order_complex(Q)
    assert all(bottom in f for f in C.maximal_faces())
