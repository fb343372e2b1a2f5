# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython eigensolver kernels: cyclic Jacobi and power iteration.

Mirrors the contracts of `_kernels_py`; selected at import by `_backend`.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt, copysign, INFINITY

cnp.import_array()

BACKEND_NAME = "cython"


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) nogil:
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j] * a[i, j]
    return sqrt(s)


def jacobi_eigenvalues(a_in, double tol, int max_sweeps):
    """Cyclic Jacobi sweeps; returns (eigenvalues, sweeps, off_norm)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] arr = np.array(
        a_in, dtype=np.float64, order="C"
    )
    cdef double[:, ::1] a = arr
    cdef Py_ssize_t n = arr.shape[0]
    if n == 1:
        return arr.diagonal().copy(), 0, 0.0

    cdef double eps, off, apq, theta, t, c, s, rp, rq
    cdef Py_ssize_t p, q, k
    cdef int sweeps = 0

    with nogil:
        off = _off_norm(a, n)
        eps = tol * (off if off > 1.0 else 1.0)
        while off > eps and sweeps < max_sweeps:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if fabs(theta) > 1e150:  # theta^2 would overflow
                        t = 0.5 / theta
                    else:
                        t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        rp = a[p, k]
                        rq = a[q, k]
                        a[p, k] = c * rp - s * rq
                        a[q, k] = s * rp + c * rq
                    for k in range(n):
                        rp = a[k, p]
                        rq = a[k, q]
                        a[k, p] = c * rp - s * rq
                        a[k, q] = s * rp + c * rq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
            sweeps += 1
            off = _off_norm(a, n)
    return arr.diagonal().copy(), sweeps, off


def power_iteration(a_in, double tol, int max_iter):
    """Dominant eigenvalue from the all-ones start vector.

    Returns (eigenvalue, unit eigenvector, iterations, residual_2norm).
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=2] arr = np.array(
        a_in, dtype=np.float64, order="C"
    )
    cdef double[:, ::1] a = arr
    cdef Py_ssize_t n = arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xv = np.full(n, 1.0 / sqrt(<double>n))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] yv = np.empty(n)
    cdef double[::1] x = xv
    cdef double[::1] y = yv
    cdef double lam = 0.0, lam_prev = INFINITY, norm, acc, resid
    cdef Py_ssize_t i, j
    cdef int iterations = 0

    with nogil:
        while iterations < max_iter:
            lam = 0.0
            norm = 0.0
            for i in range(n):
                acc = 0.0
                for j in range(n):
                    acc += a[i, j] * x[j]
                y[i] = acc
                lam += x[i] * acc
                norm += acc * acc
            norm = sqrt(norm)
            if norm == 0.0:
                break
            for i in range(n):
                x[i] = y[i] / norm
            iterations += 1
            if fabs(lam - lam_prev) < tol:
                break
            lam_prev = lam
        # final Rayleigh quotient and residual for the returned vector
        lam = 0.0
        for i in range(n):
            acc = 0.0
            for j in range(n):
                acc += a[i, j] * x[j]
            y[i] = acc
            lam += x[i] * acc
        resid = 0.0
        for i in range(n):
            acc = y[i] - lam * x[i]
            resid += acc * acc
        resid = sqrt(resid)
    return lam, xv, iterations, resid
