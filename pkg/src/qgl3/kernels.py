"""Kernel selection: compiled extension when available, pure Python otherwise.

Set QGL3_PURE=1 to force the fallback (used by the benchmark).
"""

import os

if os.environ.get("QGL3_PURE"):
    from qgl3._kernels_py import convolve, ssyt_weight_counts

    BACKEND = "python"
else:
    try:
        from qgl3._kernels_c import convolve, ssyt_weight_counts

        BACKEND = "cython"
    except ImportError:
        from qgl3._kernels_py import convolve, ssyt_weight_counts

        BACKEND = "python"

__all__ = ["convolve", "ssyt_weight_counts", "BACKEND"]
