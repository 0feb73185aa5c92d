"""Pure-Python elimination kernel.

Mirror of ``_elim_ext.pyx``; the two must return identical results.  Used
when the compiled extension is unavailable or disabled, and as the overflow
fallback since it works on unbounded Python integers.
"""

from __future__ import annotations


def unit_eliminate(nrows, ncols, indptr, indices, data):
    """Eliminate every pivot of absolute value 1 reachable by unimodular moves.

    Input is a CSR matrix.  Rows are swept in order; in each row the unit
    entry with the smallest column index is the pivot.  Sweeps repeat until a
    full pass finds no unit.  Returns ``(unit_pivots, residual)`` where
    ``residual`` is a list of ``{col: value}`` rows that still hold entries;
    the Smith invariants of the input are ``unit_pivots`` ones followed by
    the invariants of the residual.
    """
    rows: list[dict[int, int]] = []
    col_rows: list[set[int]] = [set() for _ in range(ncols)]
    for r in range(nrows):
        row = {}
        for k in range(indptr[r], indptr[r + 1]):
            v = int(data[k])
            if v:
                c = int(indices[k])
                row[c] = row.get(c, 0) + v
        row = {c: v for c, v in row.items() if v}
        for c in row:
            col_rows[c].add(r)
        rows.append(row)

    pivots = 0
    progress = True
    while progress:
        progress = False
        for r in range(nrows):
            row = rows[r]
            if not row:
                continue
            c = -1
            for cc, v in row.items():
                if (v == 1 or v == -1) and (c < 0 or cc < c):
                    c = cc
            if c < 0:
                continue
            pv = row[c]
            for r2 in list(col_rows[c]):
                if r2 == r:
                    continue
                row2 = rows[r2]
                f = row2[c] * pv
                for cc, v in row.items():
                    nv = row2.get(cc, 0) - f * v
                    if nv:
                        if cc not in row2:
                            col_rows[cc].add(r2)
                        row2[cc] = nv
                    else:
                        del row2[cc]
                        col_rows[cc].discard(r2)
            for cc in row:
                col_rows[cc].discard(r)
            rows[r] = {}
            pivots += 1
            progress = True
    return pivots, [row for row in rows if row]
