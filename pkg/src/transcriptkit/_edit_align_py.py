"""Pure-Python fallback for the edit-alignment kernel.

Same contract and tie-breaking as the compiled ``_edit_align`` extension:
the two must return identical (S, D, I) triples for identical inputs.
"""

from __future__ import annotations


def align_counts(ref, hyp) -> tuple[int, int, int]:
    """Substitution/deletion/insertion counts of a minimal unit-cost alignment.

    ``ref`` and ``hyp`` are sequences of integer token ids. S + D + I equals
    the word-level Levenshtein distance; ties between equal-cost steps are
    broken substitution-first, then deletion, then insertion, so the
    decomposition is deterministic (the total never depends on it).
    """
    n, m = len(ref), len(hyp)
    if n == 0:
        return (0, 0, m)
    if m == 0:
        return (0, n, 0)

    # Rolling rows over hyp: cost plus the S/D/I decomposition per cell.
    prev_cost = list(range(m + 1))
    prev_s = [0] * (m + 1)
    prev_d = [0] * (m + 1)
    prev_i = list(range(m + 1))
    cur_cost = [0] * (m + 1)
    cur_s = [0] * (m + 1)
    cur_d = [0] * (m + 1)
    cur_i = [0] * (m + 1)

    for i in range(1, n + 1):
        cur_cost[0] = i
        cur_s[0] = 0
        cur_d[0] = i
        cur_i[0] = 0
        ref_tok = ref[i - 1]
        for j in range(1, m + 1):
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
        prev_cost, cur_cost = cur_cost, prev_cost
        prev_s, cur_s = cur_s, prev_s
        prev_d, cur_d = cur_d, prev_d
        prev_i, cur_i = cur_i, prev_i

    return (prev_s[m], prev_d[m], prev_i[m])
