"""Independent reference computations used only by the tests.

Nothing here shares code with the package's elimination kernels: ranks are
computed by fraction-free integer elimination and over GF(p),
determinants by fraction-free Bareiss elimination, and finite type by the
floating-point definiteness of the cosine matrix.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

ORACLE_TOL = 1e-9


def rank_q(dense) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on the integer rows."""
    rows = [list(r) for r in dense]
    rank, prev, ncols = 0, 1, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            rows[i] = [(p * a - f * b) // prev for a, b in zip(rows[i], rows[rank])]
        prev = p
        rank += 1
    return rank


def rank_mod_p(dense, p: int) -> int:
    rows = [[x % p for x in r] for r in dense]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def det_bareiss(dense) -> int:
    M = [list(r) for r in dense]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def matmul(A, B):
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col) if a and b) for col in Bt] for row in A]


def coboundary_dense(lower, upper, sub=frozenset()):
    """delta: duals of ``lower`` -> duals of ``upper``, faces in ``sub`` dropped."""
    lower = [f for f in lower if f not in sub]
    upper = [f for f in upper if f not in sub]
    idx = {f: i for i, f in enumerate(lower)}
    M = [[0] * len(lower) for _ in upper]
    for r, s in enumerate(upper):
        for i in range(len(s)):
            c = idx.get(s[:i] + s[i + 1:])
            if c is not None:
                M[r][c] += (-1) ** i
    return M


def betti_and_p_torsion(faces_by_dim, p: int, sub=frozenset()):
    """Betti numbers over Q and the number of p-primary torsion summands of H^n.

    Uses only ranks: betti_n = c_n - rk d_n - rk d_{n-1}; the number of
    invariant factors of d_{n-1} divisible by p is rk_Q - rk_p.
    """
    dims = len(faces_by_dim)
    cnt = [len([f for f in faces_by_dim[k] if f not in sub]) for k in range(dims)]
    rq, rp = [], []
    for k in range(dims - 1):
        M = coboundary_dense(faces_by_dim[k], faces_by_dim[k + 1], sub)
        rq.append(rank_q(M) if M and M[0] else 0)
        rp.append(rank_mod_p(M, p) if M and M[0] else 0)
    rq.append(0)
    rp.append(0)
    betti = [cnt[n] - rq[n] - (rq[n - 1] if n else 0) for n in range(dims)]
    tors = [(rq[n - 1] - rp[n - 1]) if n else 0 for n in range(dims)]
    return betti, tors


def cosine_matrix(m) -> np.ndarray:
    n = len(m)
    B = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            x = m[i][j]
            B[i, j] = 1.0 if i == j else (-1.0 if x == math.inf else -math.cos(math.pi / x))
    return B


def positive_definite(m, tol: float = ORACLE_TOL) -> bool:
    """Leading principal minors of the cosine matrix all exceed ``tol``."""
    B = cosine_matrix(m)
    return all(np.linalg.det(B[:k, :k]) > tol for k in range(1, len(m) + 1))


def subsets(items):
    for k in range(len(items) + 1):
        yield from combinations(items, k)
