# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled edit-alignment kernel.

Semantics are pinned to ``_edit_align_py.align_counts``: same rolling-row
dynamic program, same substitution-first tie-breaking, identical
(S, D, I) output for identical input.
"""

from libc.stdlib cimport free, malloc


def align_counts(const int[:] ref, const int[:] hyp):
    """Substitution/deletion/insertion counts of a minimal unit-cost alignment."""
    cdef Py_ssize_t n = ref.shape[0]
    cdef Py_ssize_t m = hyp.shape[0]
    if n == 0:
        return (0, 0, m)
    if m == 0:
        return (0, n, 0)

    cdef Py_ssize_t width = m + 1
    cdef long *buf = <long *> malloc(8 * width * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef long *prev_cost = buf
    cdef long *prev_s = buf + width
    cdef long *prev_d = buf + 2 * width
    cdef long *prev_i = buf + 3 * width
    cdef long *cur_cost = buf + 4 * width
    cdef long *cur_s = buf + 5 * width
    cdef long *cur_d = buf + 6 * width
    cdef long *cur_i = buf + 7 * width

    cdef Py_ssize_t i, j
    cdef int ref_tok
    cdef long sub, diag_cost, del_cost, ins_cost
    cdef long *swap

    try:
        for j in range(width):
            prev_cost[j] = j
            prev_s[j] = 0
            prev_d[j] = 0
            prev_i[j] = j

        for i in range(1, n + 1):
            cur_cost[0] = i
            cur_s[0] = 0
            cur_d[0] = i
            cur_i[0] = 0
            ref_tok = ref[i - 1]
            for j in range(1, width):
                sub = 0 if ref_tok == hyp[j - 1] else 1
                diag_cost = prev_cost[j - 1] + sub
                del_cost = prev_cost[j] + 1
                ins_cost = cur_cost[j - 1] + 1
                if diag_cost <= del_cost and diag_cost <= ins_cost:
                    cur_cost[j] = diag_cost
                    cur_s[j] = prev_s[j - 1] + sub
                    cur_d[j] = prev_d[j - 1]
                    cur_i[j] = prev_i[j - 1]
                elif del_cost <= ins_cost:
                    cur_cost[j] = del_cost
                    cur_s[j] = prev_s[j]
                    cur_d[j] = prev_d[j] + 1
                    cur_i[j] = prev_i[j]
                else:
                    cur_cost[j] = ins_cost
                    cur_s[j] = cur_s[j - 1]
                    cur_d[j] = cur_d[j - 1]
                    cur_i[j] = cur_i[j - 1] + 1
            swap = prev_cost; prev_cost = cur_cost; cur_cost = swap
            swap = prev_s; prev_s = cur_s; cur_s = swap
            swap = prev_d; prev_d = cur_d; cur_d = swap
            swap = prev_i; prev_i = cur_i; cur_i = swap

        return (prev_s[m], prev_d[m], prev_i[m])
    finally:
        free(buf)
