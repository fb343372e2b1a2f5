"""Numerical core: eigendecomposition, quotient matrices, cubic roots.

The Jacobi solver is the oracle every bound is checked against; the
power-iteration routine provides the Perron radius and vector.  Quotient
matrices are formed in exact rational arithmetic and their eigenvalues
taken from closed-form characteristic polynomials (all quotients arising
here are at most 3x3).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._backend import BACKEND_NAME, jacobi_eigenvalues, power_iteration
from .errors import DomainError, NumericError

TOL_JACOBI = 1e-12
MAX_SWEEPS = 64
TOL_POWER = 1e-10
MAX_POWER_ITER = 100_000
TOL_CLUSTER = 1e-7
TOL_RADIUS_EQ = 1e-7
TOL_ROOT = 1e-10

Partition = list[list[int]]


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: tuple[float, ...]
    radius: float
    radius_multiplicity: int
    iterations: int
    residual: float
    perron_vector: tuple[float, ...] | None = field(default=None, repr=False)

    def to_json(self) -> str:
        return json.dumps(
            {
                "eigenvalues": list(self.eigenvalues),
                "radius": self.radius,
                "multiplicity": self.radius_multiplicity,
            }
        )


def _require_symmetric(m: np.ndarray) -> np.ndarray:
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise DomainError("matrix must be symmetric")
    return a


def symmetric_eigenvalues(m: np.ndarray) -> SpectrumResult:
    """All eigenvalues by cyclic Jacobi, sorted non-increasing."""
    a = _require_symmetric(m)
    eigs, sweeps, off = jacobi_eigenvalues(a, TOL_JACOBI, MAX_SWEEPS)
    off_sq = a * a
    np.fill_diagonal(off_sq, 0.0)
    scale = max(1.0, math.sqrt(off_sq.sum()))
    if off > TOL_JACOBI * scale:
        raise NumericError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
    eigs = sorted((float(x) for x in eigs), reverse=True)
    radius = eigs[0]
    mult = sum(1 for x in eigs if abs(x - radius) <= TOL_CLUSTER)
    return SpectrumResult(
        eigenvalues=tuple(eigs),
        radius=radius,
        radius_multiplicity=mult,
        iterations=sweeps,
        residual=float(off),
    )


def spectral_radius_power_iteration(m: np.ndarray) -> SpectrumResult:
    """Dominant eigenvalue of a non-negative irreducible matrix."""
    a = _require_symmetric(m)
    if np.any(a < 0):
        raise DomainError("matrix must be non-negative")
    if not a.any():
        raise DomainError("matrix must be non-zero")
    lam, vec, iters, resid = power_iteration(a, TOL_POWER, MAX_POWER_ITER)
    if iters >= MAX_POWER_ITER:
        raise NumericError("power iteration did not converge")
    return SpectrumResult(
        eigenvalues=(float(lam),),
        radius=float(lam),
        radius_multiplicity=1,
        iterations=iters,
        residual=float(resid),
        perron_vector=tuple(float(x) for x in vec),
    )


def validate_partition(dim: int, blocks: Partition) -> None:
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise DomainError("partition block is empty")
        for i in b:
            if not 0 <= i < dim:
                raise DomainError(f"vertex {i} out of range")
            if i in seen:
                raise DomainError(f"vertex {i} appears in two blocks")
            seen.add(i)
    if len(seen) != dim:
        raise DomainError("partition does not cover all vertices")


def quotient_matrix_exact(m: np.ndarray, blocks: Partition) -> list[list[Fraction]]:
    """Average block row sums, as exact rationals."""
    a = np.asarray(m)
    validate_partition(a.shape[0], blocks)
    k = len(blocks)
    out = []
    for bi in blocks:
        row = []
        for bj in blocks:
            total = int(a[np.ix_(bi, bj)].sum())
            row.append(Fraction(total, len(bi)))
        out.append(row)
    return out


def quotient_matrix(m: np.ndarray, blocks: Partition) -> np.ndarray:
    q = quotient_matrix_exact(m, blocks)
    return np.array([[float(x) for x in row] for row in q], dtype=np.float64)


def is_equitable(m: np.ndarray, blocks: Partition) -> bool:
    """True iff every block-to-block submatrix has constant row sums."""
    a = np.asarray(m)
    validate_partition(a.shape[0], blocks)
    for bi in blocks:
        for bj in blocks:
            sums = a[np.ix_(bi, bj)].sum(axis=1)
            if np.any(sums != sums[0]):
                return False
    return True


def quotient_eigenvalues(m: np.ndarray, blocks: Partition) -> list[float]:
    """All eigenvalues of the quotient matrix, sorted non-increasing.

    Up to 3x3 the characteristic polynomial is formed exactly and solved
    in closed form; larger quotients of symmetric parents are handled by
    the diagonal similarity D^(1/2) Q D^(-1/2) and the Jacobi solver.
    """
    q = quotient_matrix_exact(m, blocks)
    k = len(q)
    if k == 1:
        return [float(q[0][0])]
    if k == 2:
        tr = q[0][0] + q[1][1]
        det = q[0][0] * q[1][1] - q[0][1] * q[1][0]
        disc = max(0.0, float(tr * tr - 4 * det))
        s = math.sqrt(disc)
        return sorted([(float(tr) + s) / 2.0, (float(tr) - s) / 2.0], reverse=True)
    if k == 3:
        (a, b, c), (d, e, f), (g, h, i) = q
        c2 = -(a + e + i)
        c1 = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
        c0 = -(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
        return sorted(cubic_real_roots(float(c2), float(c1), float(c0)), reverse=True)
    sizes = np.array([len(b) for b in blocks], dtype=np.float64)
    qf = np.array([[float(x) for x in row] for row in q])
    s = np.sqrt(sizes)
    sym = qf * (s[:, None] / s[None, :])
    return list(symmetric_eigenvalues(sym).eigenvalues)


def interlacing_holds(eigs_big, eigs_small, tol: float = TOL_CLUSTER) -> bool:
    """Cauchy interlacing: lam_i >= mu_i >= lam_(n-m+i), with tolerance."""
    big = list(eigs_big)
    small = list(eigs_small)
    n, m = len(big), len(small)
    if m > n:
        raise DomainError("small spectrum longer than big spectrum")
    for i, mu in enumerate(small):
        if mu > big[i] + tol:
            return False
        if mu < big[n - m + i] - tol:
            return False
    return True


def equitable_radius_equality(m: np.ndarray, blocks: Partition) -> bool:
    """Radius of the matrix equals the radius of its equitable quotient."""
    if not is_equitable(m, blocks):
        raise DomainError("partition is not equitable")
    full = symmetric_eigenvalues(m).radius
    quot = quotient_eigenvalues(m, blocks)[0]
    return abs(full - quot) <= TOL_RADIUS_EQ


def cubic_real_roots(c2: float, c1: float, c0: float) -> list[float]:
    """All real roots of x^3 + c2 x^2 + c1 x + c0, Newton-polished."""
    # depressed cubic t^3 + p t + q with x = t - c2/3
    shift = c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = c0 - c1 * c2 / 3.0 + 2.0 * c2 ** 3 / 27.0
    disc = -4.0 * p ** 3 - 27.0 * q * q
    roots: list[float]
    if abs(p) < 1e-14 and abs(q) < 1e-14:
        roots = [-shift]
    elif disc >= 0.0:
        # three real roots, trigonometric form (p < 0 here)
        r = math.sqrt(-p / 3.0)
        arg = min(1.0, max(-1.0, 3.0 * q / (2.0 * p * r)))
        phi = math.acos(arg)
        roots = [
            2.0 * r * math.cos((phi - 2.0 * math.pi * k) / 3.0) - shift
            for k in range(3)
        ]
    else:
        # one real root, Cardano
        half_q = q / 2.0
        s = math.sqrt(half_q * half_q + p ** 3 / 27.0)
        roots = [math.copysign(abs(-half_q + s) ** (1 / 3), -half_q + s)
                 + math.copysign(abs(-half_q - s) ** (1 / 3), -half_q - s)
                 - shift]

    def polish(x: float) -> float:
        for _ in range(2):
            f = ((x + c2) * x + c1) * x + c0
            df = (3.0 * x + 2.0 * c2) * x + c1
            if df != 0.0:
                x -= f / df
        return x

    return [polish(x) for x in roots]


def largest_cubic_root(c2: float, c1: float, c0: float) -> float:
    """Greatest real root of x^3 + c2 x^2 + c1 x + c0."""
    root = max(cubic_real_roots(c2, c1, c0))
    value = ((root + c2) * root + c1) * root + c0
    if abs(value) > TOL_ROOT * max(1.0, abs(root) ** 3):
        raise NumericError(f"cubic root residual too large: {value}")
    return root


__all__ = [
    "BACKEND_NAME",
    "SpectrumResult",
    "symmetric_eigenvalues",
    "spectral_radius_power_iteration",
    "validate_partition",
    "quotient_matrix",
    "quotient_matrix_exact",
    "quotient_eigenvalues",
    "is_equitable",
    "interlacing_holds",
    "equitable_radius_equality",
    "cubic_real_roots",
    "largest_cubic_root",
]
