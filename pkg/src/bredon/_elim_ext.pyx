# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled elimination kernel, same contract as ``_elim_py.unit_eliminate``.

Entries live in int64.  Any multiply or subtract that would overflow raises
OverflowError; the caller then reruns the pure-Python kernel.
"""

from libcpp.vector cimport vector

cdef extern from *:
    """
    static inline int bredon_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int bredon_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint bredon_mul_ovf(long long a, long long b, long long *r) nogil
    bint bredon_sub_ovf(long long a, long long b, long long *r) nogil


cdef Py_ssize_t find_col(vector[int]& cols, int c) nogil:
    cdef Py_ssize_t lo = 0, hi = <Py_ssize_t>cols.size(), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if cols[mid] < c:
            lo = mid + 1
        else:
            hi = mid
    if lo < <Py_ssize_t>cols.size() and cols[lo] == c:
        return lo
    return -1


def unit_eliminate(int nrows, int ncols, indptr, indices, data):
    cdef vector[vector[int]] rcols
    cdef vector[vector[long long]] rvals
    cdef vector[vector[int]] col_rows
    cdef vector[int] seen
    cdef vector[int] tmp_c
    cdef vector[long long] tmp_v
    cdef Py_ssize_t r, r2, k, i, j, n1, n2, pos, idx
    cdef int c, cc, pivots = 0
    cdef long long pv, f, prod, nv, v
    cdef bint progress = True
    cdef int stamp = 0

    rcols.resize(nrows)
    rvals.resize(nrows)
    col_rows.resize(ncols)
    seen.assign(nrows, -1)

    # load CSR, combining duplicate columns
    for r in range(nrows):
        entries = {}
        for k in range(indptr[r], indptr[r + 1]):
            entries[int(indices[k])] = entries.get(int(indices[k]), 0) + int(data[k])
        for key in sorted(entries):
            val = entries[key]
            if val:
                if val > 9223372036854775807 or val < -9223372036854775807:
                    raise OverflowError("input entry exceeds int64")
                rcols[r].push_back(<int>key)
                rvals[r].push_back(<long long>val)
                col_rows[<int>key].push_back(<int>r)

    while progress:
        progress = False
        for r in range(nrows):
            if rcols[r].size() == 0:
                continue
            c = -1
            for k in range(<Py_ssize_t>rcols[r].size()):
                if rvals[r][k] == 1 or rvals[r][k] == -1:
                    c = rcols[r][k]
                    pv = rvals[r][k]
                    break
            if c < 0:
                continue
            stamp += 1
            seen[r] = stamp
            for idx in range(<Py_ssize_t>col_rows[c].size()):
                r2 = col_rows[c][idx]
                if seen[r2] == stamp:
                    continue
                seen[r2] = stamp
                pos = find_col(rcols[r2], c)
                if pos < 0:
                    continue
                if bredon_mul_ovf(rvals[r2][pos], pv, &f):
                    raise OverflowError("int64 overflow in elimination")
                # merge row2 - f * row
                tmp_c.clear()
                tmp_v.clear()
                n1 = rcols[r2].size()
                n2 = rcols[r].size()
                i = 0
                j = 0
                while i < n1 or j < n2:
                    if j >= n2 or (i < n1 and rcols[r2][i] < rcols[r][j]):
                        tmp_c.push_back(rcols[r2][i])
                        tmp_v.push_back(rvals[r2][i])
                        i += 1
                    else:
                        if bredon_mul_ovf(f, rvals[r][j], &prod):
                            raise OverflowError("int64 overflow in elimination")
                        if i < n1 and rcols[r2][i] == rcols[r][j]:
                            v = rvals[r2][i]
                            i += 1
                        else:
                            v = 0
                            col_rows[rcols[r][j]].push_back(<int>r2)
                        if bredon_sub_ovf(v, prod, &nv):
                            raise OverflowError("int64 overflow in elimination")
                        if nv != 0:
                            tmp_c.push_back(rcols[r][j])
                            tmp_v.push_back(nv)
                        j += 1
                rcols[r2].swap(tmp_c)
                rvals[r2].swap(tmp_v)
            rcols[r].clear()
            rvals[r].clear()
            col_rows[c].clear()
            pivots += 1
            progress = True

    residual = []
    for r in range(nrows):
        if rcols[r].size():
            residual.append({rcols[r][k]: rvals[r][k] for k in range(<Py_ssize_t>rcols[r].size())})
    return pivots, residual
