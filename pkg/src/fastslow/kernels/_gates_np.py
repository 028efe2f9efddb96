"""Pure-numpy fallback gate kernels (same contract as the compiled ones)."""

from __future__ import annotations

import numpy as np


def apply_1q(amps: np.ndarray, pos: int, u: np.ndarray) -> None:
    """Apply a 2x2 unitary to the qubit at bit position ``pos``, in place."""
    step = 1 << pos
    view = amps.reshape(-1, 2, step)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = u[0, 0] * a0 + u[0, 1] * a1
    view[:, 1, :] = u[1, 0] * a0 + u[1, 1] * a1


def apply_2q(amps: np.ndarray, pos_hi: int, pos_lo: int, u: np.ndarray) -> None:
    """Apply a 4x4 unitary (sub-basis |b_hi b_lo>) in place."""
    n = amps.size
    mh = 1 << pos_hi
    ml = 1 << pos_lo
    idx = np.arange(n)
    base = idx[(idx & mh == 0) & (idx & ml == 0)]
    stacked = np.stack([amps[base], amps[base | ml], amps[base | mh], amps[base | mh | ml]])
    out = u @ stacked
    amps[base] = out[0]
    amps[base | ml] = out[1]
    amps[base | mh] = out[2]
    amps[base | mh | ml] = out[3]
