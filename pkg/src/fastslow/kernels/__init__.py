"""Gate-application kernels.

The compiled Cython extension is used when it was built; otherwise the
vectorized numpy implementation is selected at import time. Setting the
environment variable ``FASTSLOW_KERNEL=numpy`` forces the fallback (the
kernel benchmark uses this to compare both backends).
"""

import os

from fastslow.kernels import _gates_np

if os.environ.get("FASTSLOW_KERNEL", "").lower() == "numpy":
    _impl = _gates_np
    BACKEND = "numpy"
else:
    try:
        from fastslow.kernels import _gates_cy as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _gates_np
        BACKEND = "numpy"

apply_1q = _impl.apply_1q
apply_2q = _impl.apply_2q

__all__ = ["BACKEND", "apply_1q", "apply_2q"]
