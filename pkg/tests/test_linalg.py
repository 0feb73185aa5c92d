import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon import kernels
from bredon.linalg import (
    IntMatrix,
    SmithForm,
    divisibility_chain,
    smith_normal_form,
    smith_normal_form_with_transforms,
)
from oracles import det_bareiss, matmul, rank_mod_p, rank_q


def dense(rows, cols, rng, density, lo=-9, hi=9):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def test_zero_matrix():
    assert smith_normal_form(IntMatrix.zero(3, 4)).invariant_factors == ()


def test_identity():
    I = IntMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert smith_normal_form(I).invariant_factors == (1, 1, 1)


def test_two_by_two():
    assert smith_normal_form(IntMatrix.from_dense([[2, 4], [6, 8]])).invariant_factors == (2, 4)


def test_zeros_are_not_stored():
    A = IntMatrix(2, 2, {(0, 0): 0, (1, 1): 3})
    assert A.entries == {(1, 1): 3}
    with pytest.raises(IndexError):
        IntMatrix(1, 1, {(2, 0): 1})


def test_smith_form_rejects_broken_chain():
    with pytest.raises(ValueError):
        SmithForm((2, 3))


def test_divisibility_chain():
    assert divisibility_chain([6, 4]) == (2, 12)
    assert divisibility_chain([0, -3, 1]) == (1, 3)


def test_large_entries_leave_int64():
    big = 3 ** 45
    A = IntMatrix.from_dense([[big, 1], [1, big]])
    assert smith_normal_form(A).invariant_factors == (1, big * big - 1)


@pytest.mark.parametrize("backend", kernels.available_backends())
def test_backends_agree_with_each_other(backend):
    rng = random.Random(7)
    for _ in range(150):
        A = IntMatrix.from_dense(dense(rng.randint(1, 25), rng.randint(1, 25), rng, rng.uniform(0.05, 0.6)))
        assert smith_normal_form(A, backend=backend) == smith_normal_form(A, backend="python")


def test_overflow_falls_back_to_python():
    if "compiled" not in kernels.available_backends():
        pytest.skip("compiled kernel not built")
    x = 2 ** 40
    A = IntMatrix.from_dense([[1, x, 0], [x, 1, x], [0, x, 1]])
    assert smith_normal_form(A, backend="compiled") == smith_normal_form(A, backend="python")


@given(st.integers(1, 8), st.integers(1, 8), st.randoms(use_true_random=False))
def test_transforms_property(m, n, rng):
    D0 = dense(m, n, rng, 0.5)
    A = IntMatrix.from_dense(D0)
    form, U, V, D = smith_normal_form_with_transforms(A)
    assert matmul(matmul(U, D0), V) == D
    assert abs(det_bareiss(U)) == 1 and abs(det_bareiss(V)) == 1
    diag = [D[i][i] for i in range(min(m, n)) if D[i][i]]
    assert tuple(diag) == form.invariant_factors == smith_normal_form(A).invariant_factors
    assert form.rank == rank_q(D0)


@given(st.integers(1, 10), st.integers(1, 10), st.randoms(use_true_random=False))
def test_p_torsion_counts_match_modular_ranks(m, n, rng):
    D0 = dense(m, n, rng, 0.6, -4, 4)
    form = smith_normal_form(IntMatrix.from_dense(D0))
    for p in (2, 3, 5):
        assert sum(1 for d in form.invariant_factors if d % p == 0) == rank_q(D0) - rank_mod_p(D0, p)
