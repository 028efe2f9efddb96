# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled in-place gate application kernels.

Both kernels address qubits by *bit position* in the basis-state index
(position 0 = least significant bit) and mutate the amplitude buffer.
"""


def apply_1q(double complex[::1] amps, Py_ssize_t pos, double complex[:, ::1] u):
    """Apply a 2x2 unitary to the qubit at bit position ``pos``."""
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t step = 1 << pos
    cdef Py_ssize_t block = step << 1
    cdef Py_ssize_t base, k, i0, i1
    cdef double complex u00 = u[0, 0], u01 = u[0, 1]
    cdef double complex u10 = u[1, 0], u11 = u[1, 1]
    cdef double complex a0, a1
    for base in range(0, n, block):
        for k in range(step):
            i0 = base + k
            i1 = i0 + step
            a0 = amps[i0]
            a1 = amps[i1]
            amps[i0] = u00 * a0 + u01 * a1
            amps[i1] = u10 * a0 + u11 * a1


def apply_2q(double complex[::1] amps, Py_ssize_t pos_hi, Py_ssize_t pos_lo,
             double complex[:, ::1] u):
    """Apply a 4x4 unitary to the qubits at bit positions ``pos_hi``/``pos_lo``.

    ``u`` is indexed over the two-bit sub-basis |b_hi b_lo> in the order
    00, 01, 10, 11.
    """
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t mh = 1 << pos_hi
    cdef Py_ssize_t ml = 1 << pos_lo
    cdef Py_ssize_t i, i1, i2, i3
    cdef double complex a0, a1, a2, a3
    cdef double complex u00 = u[0, 0], u01 = u[0, 1], u02 = u[0, 2], u03 = u[0, 3]
    cdef double complex u10 = u[1, 0], u11 = u[1, 1], u12 = u[1, 2], u13 = u[1, 3]
    cdef double complex u20 = u[2, 0], u21 = u[2, 1], u22 = u[2, 2], u23 = u[2, 3]
    cdef double complex u30 = u[3, 0], u31 = u[3, 1], u32 = u[3, 2], u33 = u[3, 3]
    for i in range(n):
        if (i & mh) or (i & ml):
            continue
        i1 = i | ml
        i2 = i | mh
        i3 = i2 | ml
        a0 = amps[i]
        a1 = amps[i1]
        a2 = amps[i2]
        a3 = amps[i3]
        amps[i] = u00 * a0 + u01 * a1 + u02 * a2 + u03 * a3
        amps[i1] = u10 * a0 + u11 * a1 + u12 * a2 + u13 * a3
        amps[i2] = u20 * a0 + u21 * a1 + u22 * a2 + u23 * a3
        amps[i3] = u30 * a0 + u31 * a1 + u32 * a2 + u33 * a3
