"""Spectral-radius bound formulas for power graphs, with verified reports.

Each report carries the bound values, the Jacobi-computed radius, the
prior bounds it is compared against, and tightness flags.  All vertex
statistics feeding the formulas are exact rationals; the square-root
formulas themselves are evaluated in double precision.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import graphs, groups, spectra
from .errors import DomainError
from .spectra import TOL_RADIUS_EQ


@dataclass(frozen=True)
class BoundInputs:
    """Vertex statistics feeding the bound formulas."""

    l: int  # |V1| = phi(n) + 1
    d_avg: Fraction | None = None  # V2 full-graph degree stats
    d_min: Fraction | None = None
    D_avg: Fraction | None = None  # average degree of the cyclic core
    Tr_avg: Fraction | None = None  # V2 transmission stats
    Tr_max: Fraction | None = None
    T_avg: Fraction | None = None  # cyclic-core transmission stats
    T_max: Fraction | None = None

    def __post_init__(self):
        if self.l < 2:
            raise DomainError("|V1| must be at least 2")
        for v in (self.d_avg, self.d_min, self.D_avg, self.Tr_avg,
                  self.Tr_max, self.T_avg, self.T_max):
            if v is not None and v < 0:
                raise DomainError("statistics must be non-negative")
        if self.d_avg is not None and self.d_min is not None:
            if self.d_min > self.d_avg:
                raise DomainError("d_min must not exceed d_avg")


@dataclass(frozen=True)
class BoundReport:
    family: str
    n: int
    kind: str  # "adjacency" | "distance"
    lower: float
    upper: float | None
    computed_radius: float
    lower_tight: bool
    upper_tight: bool
    prior_lower: float | None = None
    prior_upper: float | None = None
    prior_lower_strict: bool = True
    prior_upper_strict: bool = False
    degenerate: bool = False
    p: int | None = None
    q: int | None = None

    def sandwich_holds(self, tol: float = TOL_RADIUS_EQ) -> bool:
        if self.lower > self.computed_radius + tol:
            return False
        if self.upper is not None and self.computed_radius > self.upper + tol:
            return False
        return True

    def to_json_dict(self) -> dict:
        d = {
            "family": self.family,
            "n": self.n,
            "kind": self.kind,
            "lower": self.lower,
            "upper": self.upper,
            "radius": self.computed_radius,
            "lower_tight": self.lower_tight,
            "upper_tight": self.upper_tight,
            "prior_lower": self.prior_lower,
            "prior_upper": self.prior_upper,
            "degenerate": self.degenerate,
        }
        if self.p is not None:
            d["p"] = self.p
            d["q"] = self.q
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


@dataclass(frozen=True)
class ComparisonRecord:
    lower_delta: float | None  # new lower minus prior lower
    upper_delta: float | None  # prior upper minus new upper
    improved: bool


def compare(report: BoundReport,
            prior_lower: float | None = None,
            prior_upper: float | None = None) -> ComparisonRecord:
    """How much the report's interval improves on the prior one."""
    pl = report.prior_lower if prior_lower is None else prior_lower
    pu = report.prior_upper if prior_upper is None else prior_upper
    ld = None if pl is None else report.lower - pl
    ud = None
    if pu is not None and report.upper is not None:
        ud = pu - report.upper
    ok = all(d is None or d >= -TOL_RADIUS_EQ for d in (ld, ud))
    return ComparisonRecord(lower_delta=ld, upper_delta=ud, improved=ok)


def _radius(m: np.ndarray) -> float:
    return spectra.symmetric_eigenvalues(m).radius


def _tight(bound: float, radius: float) -> bool:
    return abs(bound - radius) <= TOL_RADIUS_EQ


# ---------------------------------------------------------------- cyclic


def _cyclic_v2(n: int) -> list[int]:
    l = groups.euler_phi(n) + 1
    return list(range(l, n))


def adjacency_lower_cyclic(n: int) -> BoundReport:
    """Lower bound on the adjacency radius of P(C_n) from V2 average degree."""
    if n < 3:
        raise DomainError("need n >= 3")
    adj = graphs.build_structural_cyclic(n)
    radius = _radius(adj)
    l = groups.euler_phi(n) + 1
    v2 = _cyclic_v2(n)
    if not v2:  # n prime: the graph is K_n
        return BoundReport(
            family="cyclic", n=n, kind="adjacency",
            lower=float(n - 1), upper=None, computed_radius=radius,
            lower_tight=True, upper_tight=False,
            prior_lower=float(n - 1), degenerate=True,
        )
    stats = graphs.subset_degree_stats(adj, v2)
    d_avg = float(stats.average)
    lower = 0.5 * ((d_avg - 1) + math.sqrt((d_avg + 1 - 2 * l) ** 2
                                           + 4 * l * (n - l)))
    return BoundReport(
        family="cyclic", n=n, kind="adjacency",
        lower=lower, upper=None, computed_radius=radius,
        lower_tight=_tight(lower, radius), upper_tight=False,
        prior_lower=prior_adjacency_lower_cyclic(n),
    )


def prior_adjacency_lower_cyclic(n: int) -> float:
    """Earlier lower bound using the V2 minimum degree instead of the average."""
    if n < 3:
        raise DomainError("need n >= 3")
    v2 = _cyclic_v2(n)
    if not v2:
        return float(n - 1)
    adj = graphs.build_structural_cyclic(n)
    l = groups.euler_phi(n) + 1
    d_min = float(graphs.subset_degree_stats(adj, v2).minimum)
    return 0.5 * ((d_min - 1) + math.sqrt((d_min + 1 - 2 * l) ** 2
                                          + 4 * l * (n - l)))


def distance_bounds_cyclic(n: int) -> BoundReport:
    """Distance-radius bounds for P(C_n) from V2 transmission stats."""
    if n < 2:
        raise DomainError("need n >= 2")
    adj = graphs.build_structural_cyclic(n)
    dist = graphs.distance_matrix(adj)
    radius = _radius(dist)
    l = groups.euler_phi(n) + 1
    v2 = _cyclic_v2(n)
    if not v2:  # n prime: K_n, both bounds collapse to n - 1
        val = float(n - 1)
        return BoundReport(
            family="cyclic", n=n, kind="distance",
            lower=val, upper=val, computed_radius=radius,
            lower_tight=True, upper_tight=True, degenerate=True,
        )
    stats = graphs.subset_transmission_stats(dist, v2)
    tr_avg, tr_max = float(stats.average), float(stats.maximum)

    def bound(tr: float) -> float:
        return 0.5 * ((tr - 1) + math.sqrt((tr - 2 * l + 1) ** 2
                                           + 4 * l * (n - l)))

    lower, upper = bound(tr_avg), bound(tr_max)
    return BoundReport(
        family="cyclic", n=n, kind="distance",
        lower=lower, upper=upper, computed_radius=radius,
        lower_tight=_tight(lower, radius), upper_tight=_tight(upper, radius),
    )


# ------------------------------------------------------ dihedral/dicyclic


def adjacency_bounds_dihedral(n: int) -> BoundReport:
    """Adjacency-radius bounds for P(D_2n) from the P(C_n) average degree."""
    if n < 3:
        raise DomainError("need n >= 3")
    core = graphs.build_structural_cyclic(n)
    d_avg = float(graphs.subset_degree_stats(core, range(n)).average)
    lower = 0.5 * (d_avg + math.sqrt(d_avg * d_avg + 4))
    upper = float(n)
    radius = _radius(graphs.build_structural_dihedral(n))
    core_radius = _radius(core)
    return BoundReport(
        family="dihedral", n=n, kind="adjacency",
        lower=lower, upper=upper, computed_radius=radius,
        lower_tight=_tight(lower, radius), upper_tight=_tight(upper, radius),
        prior_lower=core_radius, prior_upper=core_radius + math.sqrt(n),
    )


def adjacency_bounds_dicyclic(n: int) -> BoundReport:
    """Adjacency-radius bounds for P(Q_4n) from the P(C_2n) average degree."""
    if n < 2:
        raise DomainError("need n >= 2")
    core = graphs.build_structural_cyclic(2 * n)
    d_avg = float(graphs.subset_degree_stats(core, range(2 * n)).average)
    lower = 0.5 * ((d_avg + 1) + math.sqrt((d_avg - 1) ** 2 + 16))
    upper = float(2 * n + 1)
    radius = _radius(graphs.build_structural_dicyclic(n))
    core_radius = _radius(core)
    return BoundReport(
        family="dicyclic", n=n, kind="adjacency",
        lower=lower, upper=upper, computed_radius=radius,
        lower_tight=_tight(lower, radius), upper_tight=_tight(upper, radius),
        prior_lower=core_radius, prior_upper=core_radius + 2 * math.sqrt(n),
    )


def distance_bounds_dihedral(n: int) -> BoundReport:
    """Distance-radius bounds for P(D_2n) from P(C_n) transmission stats."""
    if n < 3:
        raise DomainError("need n >= 3")
    core_dist = graphs.distance_matrix(graphs.build_structural_cyclic(n))
    stats = graphs.subset_transmission_stats(core_dist, range(n))
    t_avg, t_max = float(stats.average), float(stats.maximum)
    lower = 0.5 * ((t_avg + 2 * n - 2)
                   + math.sqrt((t_avg - 2 * n + 2) ** 2 + 4 * (2 * n - 1) ** 2))
    upper = 0.5 * ((t_max + 2 * n - 2)
                   + math.sqrt((t_max - 2 * n + 2) ** 2 + 8 * n * (2 * n - 1)))
    dist = graphs.distance_matrix(graphs.build_structural_dihedral(n))
    radius = _radius(dist)
    return BoundReport(
        family="dihedral", n=n, kind="distance",
        lower=lower, upper=upper, computed_radius=radius,
        lower_tight=_tight(lower, radius), upper_tight=_tight(upper, radius),
    )


def distance_bounds_dicyclic(n: int) -> BoundReport:
    """Distance-radius bounds for P(Q_4n) from P(C_2n) transmission stats."""
    if n < 2:
        raise DomainError("need n >= 2")
    core_dist = graphs.distance_matrix(graphs.build_structural_cyclic(2 * n))
    stats = graphs.subset_transmission_stats(core_dist, range(2 * n))
    t_avg, t_max = float(stats.average), float(stats.maximum)
    lower = 0.5 * ((t_avg + 4 * n - 3)
                   + math.sqrt((t_avg - 4 * n + 3) ** 2 + 16 * (2 * n - 1) ** 2))
    upper = 0.5 * ((t_max + 4 * n - 3)
                   + math.sqrt((t_max - 4 * n + 3) ** 2 + 32 * n * (2 * n - 1)))
    dist = graphs.distance_matrix(graphs.build_structural_dicyclic(n))
    radius = _radius(dist)
    return BoundReport(
        family="dicyclic", n=n, kind="distance",
        lower=lower, upper=upper, computed_radius=radius,
        lower_tight=_tight(lower, radius), upper_tight=_tight(upper, radius),
    )


# ------------------------------------------------------------- semiprime


def adjacency_cubic_semiprime(p: int, q: int) -> tuple[tuple[float, float, float], float]:
    """Characteristic cubic of the adjacency quotient and its largest root."""
    groups.semiprime(p, q)  # validates
    c2 = -float(p * q - 3)
    c1 = -float(p * q + p + q - 4)
    c0 = float(p * p * q * q - 2 * p * p * q - 2 * p * q * q
               + p * p + 5 * p * q + q * q - 4 * p - 4 * q + 4)
    return (c2, c1, c0), spectra.largest_cubic_root(c2, c1, c0)


def distance_cubic_semiprime(p: int, q: int) -> tuple[tuple[float, float, float], float]:
    """Characteristic cubic of the distance quotient and its largest root."""
    groups.semiprime(p, q)  # validates
    c2 = -float(p * q - 3)
    c1 = -float(5 * p * q - 3 * p - 3 * q)
    c0 = float(p * p * q * q - 2 * p * p * q - 2 * p * q * q
               + p * p + p * q + q * q)
    return (c2, c1, c0), spectra.largest_cubic_root(c2, c1, c0)


def semiprime_report(p: int, q: int, kind: str) -> BoundReport:
    """Exact-radius report: the cubic root pins the radius on both sides."""
    if kind == "adjacency":
        _, root = adjacency_cubic_semiprime(p, q)
        m = graphs.build_structural_semiprime(p, q)
    elif kind == "distance":
        _, root = distance_cubic_semiprime(p, q)
        m = graphs.distance_matrix(graphs.build_structural_semiprime(p, q))
    else:
        raise DomainError(f"unknown kind {kind!r}")
    radius = _radius(m)
    return BoundReport(
        family="semiprime", n=p * q, kind=kind,
        lower=root, upper=root, computed_radius=radius,
        lower_tight=True, upper_tight=True, p=p, q=q,
    )


def bound_report(family: str, n: int, kind: str,
                 p: int | None = None, q: int | None = None) -> BoundReport:
    """Dispatch helper used by the CLI."""
    if family == "semiprime":
        if p is None or q is None:
            raise DomainError("semiprime needs p and q")
        return semiprime_report(p, q, kind)
    table = {
        ("cyclic", "adjacency"): adjacency_lower_cyclic,
        ("cyclic", "distance"): distance_bounds_cyclic,
        ("dihedral", "adjacency"): adjacency_bounds_dihedral,
        ("dihedral", "distance"): distance_bounds_dihedral,
        ("dicyclic", "adjacency"): adjacency_bounds_dicyclic,
        ("dicyclic", "distance"): distance_bounds_dicyclic,
    }
    try:
        fn = table[(family, kind)]
    except KeyError:
        raise DomainError(f"unknown family/kind {family}/{kind}") from None
    return fn(n)
