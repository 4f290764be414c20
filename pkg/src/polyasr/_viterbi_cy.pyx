# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Viterbi forward pass.

Must stay bit-identical to the pure-numpy fallback in _viterbi_py.py: same
candidate expression, max reduction, lowest-arc-index ties, same pruning.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF NO_ARC = -1


def viterbi_forward(double[:, ::1] emis,
                    long long[::1] group_starts,
                    long long[::1] arc_src,
                    double[::1] arc_w,
                    double[::1] start_w,
                    double[::1] end_w,
                    double beam):
    """See polyasr._viterbi_py.viterbi_forward for the contract."""
    cdef Py_ssize_t T = emis.shape[0]
    cdef Py_ssize_t N = emis.shape[1]
    cdef Py_ssize_t t, n, a, lo, hi
    cdef double best, cand, frame_best, thr
    cdef double neg_inf = -np.inf
    cdef long long best_arc

    backptr_np = np.full((T, N), NO_ARC, dtype=np.int32)
    cdef int[:, ::1] backptr = backptr_np
    score_np = np.empty(N, dtype=np.float64)
    prev_np = np.empty(N, dtype=np.float64)
    cdef double[::1] score = score_np
    cdef double[::1] prev = prev_np
    cdef double[::1] tmp
    cdef bint do_prune = np.isfinite(beam)

    for n in range(N):
        score[n] = start_w[n] + emis[0, n]
    if do_prune:
        _prune(score, N, beam, neg_inf)

    for t in range(1, T):
        tmp = prev
        prev = score
        score = tmp
        for n in range(N):
            best = neg_inf
            best_arc = NO_ARC
            lo = group_starts[n]
            hi = group_starts[n + 1]
            for a in range(lo, hi):
                cand = prev[arc_src[a]] + arc_w[a]
                if cand > best:
                    best = cand
                    best_arc = a
            score[n] = best + emis[t, n]
            backptr[t, n] = <int> best_arc
        if do_prune:
            _prune(score, N, beam, neg_inf)

    final_np = np.empty(N, dtype=np.float64)
    cdef double[::1] final = final_np
    for n in range(N):
        final[n] = score[n] + end_w[n]
    return final_np, backptr_np


cdef void _prune(double[::1] score, Py_ssize_t N, double beam, double neg_inf) noexcept:
    cdef Py_ssize_t n
    cdef double frame_best = neg_inf
    for n in range(N):
        if score[n] > frame_best:
            frame_best = score[n]
    if frame_best == neg_inf:
        return
    cdef double thr = frame_best - beam
    for n in range(N):
        if score[n] < thr:
            score[n] = neg_inf
