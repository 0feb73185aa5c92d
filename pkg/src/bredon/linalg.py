"""Exact sparse integer matrices and Smith normal form.

Invariant factors come from a two-stage elimination.  The first stage is the
hot kernel in :mod:`bredon.kernels`: it removes every unit pivot, which for
boundary matrices is nearly all of them.  The small residual is finished here
with classical minimal-entry pivoting on Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

from . import kernels


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v:
                clean[(r, c)] = int(v)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        dense = [list(row) for row in dense]
        ncols = cols if cols is not None else (len(dense[0]) if dense else 0)
        entries = {(i, j): v for i, row in enumerate(dense) for j, v in enumerate(row) if v}
        return cls(len(dense), ncols, entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, {})

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        right = other.row_dicts()
        acc: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in right[k].items():
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return IntMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self.entries

    def csr(self):
        rows = self.row_dicts()
        indptr = [0]
        indices: list[int] = []
        data: list[int] = []
        for row in rows:
            for c in sorted(row):
                indices.append(c)
                data.append(row[c])
            indptr.append(len(indices))
        return indptr, indices, data


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        d = self.invariant_factors
        if any(x < 1 for x in d) or any(d[i + 1] % d[i] for i in range(len(d) - 1)):
            raise ValueError(f"not a divisibility chain: {d}")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def divisibility_chain(diagonal: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors of a diagonal matrix with the given nonzero entries."""
    d = sorted(abs(x) for x in diagonal if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a // g * b
                    changed = True
        d.sort()
    return tuple(d)


def _finish_residual(rows: list[dict[int, int]]) -> list[int]:
    """Diagonal of a residual matrix by minimal-|entry| pivoting.

    Ties are broken by row position, then column index.  Returns the
    diagonal entries found (not yet a divisibility chain).
    """
    rows = [dict(r) for r in rows if r]
    col_rows: dict[int, set[int]] = {}
    for i, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    diag: list[int] = []
    active = set(range(len(rows)))

    def set_entry(r, c, v):
        row = rows[r]
        if v:
            if c not in row:
                col_rows.setdefault(c, set()).add(r)
            row[c] = v
        elif c in row:
            del row[c]
            col_rows[c].discard(r)

    while True:
        best = None
        for r in sorted(active):
            for c, v in rows[r].items():
                key = (abs(v), r, c)
                if best is None or key < best:
                    best = key
        if best is None:
            return diag
        _, pr, pc = best
        p = rows[pr][pc]
        clean = True
        # rows: reduce column pc below/above the pivot
        for r in sorted(col_rows.get(pc, ())):
            if r == pr:
                continue
            q = rows[r][pc] // p
            for c, v in list(rows[pr].items()):
                set_entry(r, c, rows[r].get(c, 0) - q * v)
            if rows[r].get(pc):
                clean = False
        # columns: reduce row pr
        for c in sorted(rows[pr]):
            if c == pc:
                continue
            q = rows[pr][c] // p
            for r in list(col_rows.get(pc, ())):
                set_entry(r, c, rows[r].get(c, 0) - q * rows[r][pc])
            if rows[pr].get(c):
                clean = False
        if clean and len(rows[pr]) == 1 and col_rows.get(pc, set()) == {pr}:
            diag.append(abs(p))
            set_entry(pr, pc, 0)
            active.discard(pr)


def invariant_diagonal(A: IntMatrix, backend: str | None = None) -> list[int]:
    """Unsorted nonzero diagonal of some matrix equivalent to ``A``."""
    if A.is_zero():
        return []
    M = A if A.rows <= A.cols else A.transpose()
    indptr, indices, data = M.csr()
    units, residual = kernels.unit_eliminate(M.rows, M.cols, indptr, indices, data, backend=backend)
    return [1] * units + _finish_residual(residual)


def smith_normal_form(A: IntMatrix, backend: str | None = None) -> SmithForm:
    return SmithForm(divisibility_chain(invariant_diagonal(A, backend=backend)))


def smith_normal_form_with_transforms(A: IntMatrix):
    """Dense Smith form with tracked unimodular transforms.

    Returns ``(form, U, V, D)`` as dense lists with ``U @ A @ V == D`` and
    ``D`` diagonal carrying the invariant factors.  Minimal-|entry| pivot,
    ties by (row, col).  Intended for verification, not speed.
    """
    m, n = A.rows, A.cols
    D = A.to_dense()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(dst, src, q):  # row_dst -= q * row_src
        if q:
            D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def col_op(dst, src, q):  # col_dst -= q * col_src
        if q:
            for row in D:
                row[dst] -= q * row[src]
            for row in V:
                row[dst] -= q * row[src]

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or (abs(D[i][j]), i, j) < best):
                    best = (abs(D[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                row_op(i, t, D[i][t] // p)
            for j in range(t + 1, n):
                col_op(j, t, D[t][j] // p)
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, i, j = min(rest)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            row_op(t, bad[0], -1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    factors = tuple(D[i][i] for i in range(min(m, n)) if D[i][i])
    return SmithForm(factors), U, V, D

