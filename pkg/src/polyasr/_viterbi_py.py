"""Pure-numpy Viterbi forward pass (fallback for the compiled kernel).

Both implementations must produce bit-identical scores and backpointers:
candidates are computed as ``prev[arc_src] + arc_w`` and reduced with max
(order-independent for floats), ties resolve to the lowest arc index, and
node scores are ``group_max + emission`` in that exact order.
"""

from __future__ import annotations

import numpy as np

NO_ARC = -1


def viterbi_forward(emis, group_starts, arc_src, arc_w, start_w, end_w, beam):
    """Run the Viterbi DP over a frame-synchronous arc list.

    emis: (T, N) per-frame per-node emission log-scores.
    group_starts: (N+1,) CSR offsets of incoming arcs per destination node;
        every node must have at least one incoming arc (self-loop).
    arc_src, arc_w: (A,) incoming-arc sources and weights, grouped by dst.
    start_w, end_w: (N,) entry/exit log-weights (-inf where not allowed).
    beam: prune nodes scoring below frame-max minus beam (inf = exact).

    Returns (final_scores, backptr): final_scores (N,) includes end weights;
    backptr (T, N) holds the winning incoming arc index per frame (NO_ARC at
    frame 0 and for unreachable nodes).
    """
    T, N = emis.shape
    A = arc_src.shape[0]
    neg_inf = -np.inf
    backptr = np.full((T, N), NO_ARC, dtype=np.int32)

    gs = group_starts[:-1].astype(np.int64)
    arc_group = np.repeat(np.arange(N), np.diff(group_starts))
    arc_idx = np.arange(A, dtype=np.int64)

    score = start_w + emis[0]
    if np.isfinite(beam):
        score = _prune(score, beam)

    for t in range(1, T):
        cand = score[arc_src] + arc_w
        group_max = np.maximum.reduceat(cand, gs)
        first = np.minimum.reduceat(
            np.where(cand == group_max[arc_group], arc_idx, A), gs
        )
        dead = group_max == neg_inf
        first[dead] = NO_ARC
        score = group_max + emis[t]
        backptr[t] = first.astype(np.int32)
        if np.isfinite(beam):
            score = _prune(score, beam)

    return score + end_w, backptr


def _prune(score, beam):
    best = score.max()
    if best == -np.inf:
        return score
    return np.where(score < best - beam, -np.inf, score)
