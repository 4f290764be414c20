"""Viterbi kernel selection: compiled extension if available, numpy fallback.

Set POLYASR_PURE_PYTHON=1 to force the fallback (used by the benchmark and
for debugging); the two implementations are bit-identical by contract.
"""

from __future__ import annotations

import os

from . import _viterbi_py

if os.environ.get("POLYASR_PURE_PYTHON", "") not in ("", "0"):
    HAVE_COMPILED = False
    viterbi_forward = _viterbi_py.viterbi_forward
    KERNEL_NAME = "python (forced)"
else:
    try:
        from . import _viterbi_cy

        HAVE_COMPILED = True
        viterbi_forward = _viterbi_cy.viterbi_forward
        KERNEL_NAME = "compiled"
    except ImportError:
        HAVE_COMPILED = False
        viterbi_forward = _viterbi_py.viterbi_forward
        KERNEL_NAME = "python"

NO_ARC = _viterbi_py.NO_ARC
