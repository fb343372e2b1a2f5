"""Numpy fallback for the eigensolver kernels.

Same contracts as the Cython module `_kernels`: plain functions returning
raw results; higher-level validation and error mapping live in `spectra`.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic Jacobi sweeps; returns (eigenvalues, sweeps, off_norm).

    Converged when the off-diagonal Frobenius norm drops below
    tol * max(1, initial off-diagonal norm).  Eigenvalues unsorted.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy(), 0, 0.0

    mask = ~np.eye(n, dtype=bool)

    def off_norm(m):
        return math.sqrt((m[mask] ** 2).sum())

    eps = tol * max(1.0, off_norm(a))
    sweeps = 0
    off = off_norm(a)
    while off > eps and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = float(a[q, q] - a[p, p]) / (2.0 * float(apq))
                if abs(theta) > 1e150:  # theta^2 would overflow; t ~ 1/(2 theta)
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = off_norm(a)
    return a.diagonal().copy(), sweeps, off


def power_iteration(a: np.ndarray, tol: float, max_iter: int):
    """Dominant eigenvalue from the all-ones start vector.

    Returns (eigenvalue, unit eigenvector, iterations, residual_2norm).
    Converged when successive Rayleigh quotients differ by less than tol.
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    x = np.ones(n) / math.sqrt(n)
    lam_prev = math.inf
    iterations = 0
    lam = 0.0
    while iterations < max_iter:
        y = a @ x
        lam = float(x @ y)
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            break
        x = y / norm
        iterations += 1
        if abs(lam - lam_prev) < tol:
            break
        lam_prev = lam
    y = a @ x
    lam = float(x @ y)
    residual = float(np.linalg.norm(y - lam * x))
    return lam, x, iterations, residual
