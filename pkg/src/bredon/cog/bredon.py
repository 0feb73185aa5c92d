"""Bredon cochains of a finite development with coefficients Q_K.

By Yoneda, a cochain on the free module generated by an orbit of cells with
stabilizer H is a value in Q_K(G/H), which is the free abelian group on
(G/K)^H when H is conjugate to K and zero otherwise.  The orbit
representatives are the cells e.sigma for chains sigma of Q, whose
stabilizer is the local group of the bottom vertex of sigma.

Every face of e.sigma is again e.tau, so the transported boundary never
translates: a face contributes only when its stabilizer equals that of
sigma (a larger stabilizer is not conjugate to K, and Q_K vanishes there),
and it then maps the coset xK to itself.
"""

from __future__ import annotations

from ..linalg import IntMatrix
from ..pgroup import conjugate_set
from ..poset import chains
from ..zcohomology import CochainComplexZ
from .development import Development


def fixed_cosets(dev: Development, J: str) -> dict[frozenset, list[int]]:
    """For each local group H conjugate to K = P_J, the cosets xK with x^-1 H x = K.

    Cosets are given by their index in ``dev.coset_reps[J]``.
    """
    K = dev.local_set(J)
    reps = dev.coset_reps[J]
    out: dict[frozenset, list[int]] = {}
    for U in dev.Q.elements:
        H = dev.local_set(U)
        if len(H) != len(K) or H in out:
            continue
        hits = [i for i, x in enumerate(reps) if conjugate_set(H, x) == K]
        if hits:
            out[H] = hits
    return out


def bredon_basis(dev: Development, J: str) -> list[list[tuple[tuple, int]]]:
    """Per degree, the basis pairs (sigma, coset index of xK)."""
    table = fixed_cosets(dev, J)
    by_dim: dict[int, list] = {}
    for sigma in chains(dev.Q):
        hits = table.get(dev.local_set(sigma[0]))
        if hits:
            by_dim.setdefault(len(sigma) - 1, []).extend((sigma, x) for x in hits)
    top = max(by_dim, default=-1)
    return [by_dim.get(n, []) for n in range(top + 1)]


def bredon_cochain_complex(dev: Development, J: str, check: bool = True) -> CochainComplexZ:
    basis = bredon_basis(dev, J)
    if not basis:
        return CochainComplexZ(0, [0], [], check=check)
    index = [{b: i for i, b in enumerate(level)} for level in basis]
    deltas = []
    for n in range(len(basis) - 1):
        entries: dict[tuple[int, int], int] = {}
        for row, (sigma, x) in enumerate(basis[n + 1]):
            H = dev.local_set(sigma[0])
            for i in range(len(sigma)):
                tau = sigma[:i] + sigma[i + 1:]
                if dev.local_set(tau[0]) != H:
                    continue
                col = index[n].get((tau, x))
                if col is not None:
                    entries[(row, col)] = entries.get((row, col), 0) + (-1 if i % 2 else 1)
        deltas.append(IntMatrix(len(basis[n + 1]), len(basis[n]), entries))
    return CochainComplexZ(0, [len(b) for b in basis], deltas, check=check)
