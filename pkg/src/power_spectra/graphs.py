"""Power-graph adjacency and distance matrices.

Matrices are dense integer numpy arrays indexed by the canonical vertex
ordering of each family.  Each family has a definitional builder (two
elements adjacent iff one generates the other) and a structural builder
assembling the known block form; the two must agree entrywise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import groups
from .errors import DegenerateSubsetError, DomainError, StructureError
from .groups import Family, GroupSpec

DEFAULT_MAX_ORDER = 4096


def max_order() -> int:
    env = os.environ.get("POWER_SPECTRA_MAX_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


def _guard(order: int) -> None:
    limit = max_order()
    if order > limit:
        raise DomainError(
            f"group order {order} exceeds the dense-matrix limit {limit} "
            "(set POWER_SPECTRA_MAX_ORDER to override)"
        )


def canonical_ordering(g: GroupSpec) -> list[int]:
    """Vertex order fixed by the block-form theorems."""
    if g.family is Family.CYCLIC:
        gens = sorted(groups.cyclic_generators(g.n))
        rest = sorted(set(range(g.n)) - set(gens) - {0})
        return [0] + gens + rest
    if g.family is Family.DIHEDRAL:
        return list(range(2 * g.n))  # e, a, ..., a^(n-1), b, ab, ...
    if g.family is Family.DICYCLIC:
        n = g.n
        rot = [0, n] + [i for i in range(1, 2 * n) if i != n]
        return rot + list(range(2 * n, 4 * n))
    p, q = g.p, g.q
    pq = p * q
    gens = sorted(groups.cyclic_generators(pq))
    v2 = [i * p for i in range(1, q)]
    v3 = [i * q for i in range(1, p)]
    return [0] + gens + v2 + v3


def partition_blocks(g: GroupSpec) -> list[list[int]]:
    """Canonical-order index blocks {V1, V2[, V3]} used by the theorems."""
    if g.family is Family.CYCLIC:
        l = groups.euler_phi(g.n) + 1
        blocks = [list(range(l)), list(range(l, g.n))]
        return [b for b in blocks if b]
    if g.family is Family.DIHEDRAL:
        return [list(range(g.n)), list(range(g.n, 2 * g.n))]
    if g.family is Family.DICYCLIC:
        return [list(range(2 * g.n)), list(range(2 * g.n, 4 * g.n))]
    p, q = g.p, g.q
    l = groups.euler_phi(p * q) + 1
    return [
        list(range(l)),
        list(range(l, l + q - 1)),
        list(range(l + q - 1, l + q - 1 + p - 1)),
    ]


def _generates(g: GroupSpec, u: int, v: int) -> bool:
    """True iff v is a positive power of u."""
    x = u
    while True:
        if x == v:
            return True
        x = groups.multiply(g, x, u)
        if x == u:
            return False


def build_definitional(g: GroupSpec) -> np.ndarray:
    """Adjacency by the definition: u ~ v iff u in <v> or v in <u>."""
    _guard(g.order)
    order = canonical_ordering(g)
    m = g.order
    # cyclic subgroup membership per element
    member = []
    for u in range(m):
        s = set()
        x = u
        while x not in s:
            s.add(x)
            x = groups.multiply(g, x, u)
        member.append(s)
    a = np.zeros((m, m), dtype=np.int64)
    for i, u in enumerate(order):
        for j, v in enumerate(order):
            if u != v and (v in member[u] or u in member[v]):
                a[i, j] = 1
    return a


def _cyclic_adjacency(n: int, order: list[int]) -> np.ndarray:
    """Adjacency of P(C_n) under an explicit vertex order."""
    g = groups.cyclic(n)
    member = []
    for u in range(n):
        s = set()
        x = u
        while x not in s:
            s.add(x)
            x = (x + u) % n
        member.append(s)
    a = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(order):
        for j, v in enumerate(order):
            if u != v and (v in member[u] or u in member[v]):
                a[i, j] = 1
    return a


def build_structural_cyclic(n: int) -> np.ndarray:
    """Block form [[J-I, J], [J, A(V2)]] with l = phi(n)+1."""
    if n < 2:
        raise DomainError("need n >= 2")
    _guard(n)
    l = groups.euler_phi(n) + 1
    a = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(a, 0)
    if l < n:
        v2 = canonical_ordering(groups.cyclic(n))[l:]
        a[l:, l:] = _cyclic_adjacency(n, list(range(n)))[np.ix_(v2, v2)]
    return a


def build_structural_dihedral(n: int) -> np.ndarray:
    """Block form [[A(P(C_n)), E], [E^T, O]]; E has the identity row all ones."""
    if n < 3:
        raise DomainError("need n >= 3")
    _guard(2 * n)
    a = np.zeros((2 * n, 2 * n), dtype=np.int64)
    a[:n, :n] = _cyclic_adjacency(n, list(range(n)))
    a[0, n:] = 1
    a[n:, 0] = 1
    return a


def build_structural_dicyclic(n: int) -> np.ndarray:
    """Block form [[A(P(C_2n)), F], [F^T, P]] with P = [[O, I], [I, O]]."""
    if n < 2:
        raise DomainError("need n >= 2")
    _guard(4 * n)
    rot_order = [0, n] + [i for i in range(1, 2 * n) if i != n]
    a = np.zeros((4 * n, 4 * n), dtype=np.int64)
    a[: 2 * n, : 2 * n] = _cyclic_adjacency(2 * n, rot_order)
    a[0:2, 2 * n :] = 1  # e and a^n adjacent to every a^i b
    a[2 * n :, 0:2] = 1
    for i in range(n):  # a^(i)b pairs with a^(n+i)b inside one K_4
        a[2 * n + i, 3 * n + i] = 1
        a[3 * n + i, 2 * n + i] = 1
    return a


def build_structural_semiprime(p: int, q: int) -> np.ndarray:
    """3x3 block form with the V2/V3 off-block zero."""
    g = groups.semiprime(p, q)
    _guard(g.order)
    pq = p * q
    l = groups.euler_phi(pq) + 1
    a = np.ones((pq, pq), dtype=np.int64)
    np.fill_diagonal(a, 0)
    a[l : l + q - 1, l + q - 1 :] = 0
    a[l + q - 1 :, l : l + q - 1] = 0
    return a


def build_structural(g: GroupSpec) -> np.ndarray:
    if g.family is Family.CYCLIC:
        return build_structural_cyclic(g.n)
    if g.family is Family.DIHEDRAL:
        return build_structural_dihedral(g.n)
    if g.family is Family.DICYCLIC:
        return build_structural_dicyclic(g.n)
    return build_structural_semiprime(g.p, g.q)


def distance_matrix(adj: np.ndarray) -> np.ndarray:
    """D = 2(J - I) - A, valid exactly because diameter <= 2 is verified."""
    a = np.asarray(adj)
    m = a.shape[0]
    if a.shape != (m, m) or not np.array_equal(a, a.T):
        raise StructureError("adjacency matrix must be square and symmetric")
    reach = a + a @ a
    np.fill_diagonal(reach, 1)
    if np.any(reach == 0):
        raise StructureError("graph is disconnected or has diameter > 2")
    d = 2 * (np.ones((m, m), dtype=np.int64) - np.eye(m, dtype=np.int64)) - a
    return d


@dataclass(frozen=True)
class SubsetStats:
    """Exact min/max/average of full-graph row sums over a vertex subset."""

    minimum: Fraction
    maximum: Fraction
    average: Fraction
    subset: tuple[int, ...]


def _subset_stats(m: np.ndarray, subset) -> SubsetStats:
    idx = list(subset)
    if not idx:
        raise DegenerateSubsetError("subset must be non-empty")
    dim = m.shape[0]
    if any(not 0 <= i < dim for i in idx):
        raise DomainError("subset index out of range")
    sums = [int(m[i].sum()) for i in idx]
    return SubsetStats(
        minimum=Fraction(min(sums)),
        maximum=Fraction(max(sums)),
        average=Fraction(sum(sums), len(sums)),
        subset=tuple(idx),
    )


def subset_degree_stats(adj: np.ndarray, subset) -> SubsetStats:
    return _subset_stats(adj, subset)


def subset_transmission_stats(dist: np.ndarray, subset) -> SubsetStats:
    return _subset_stats(dist, subset)


def to_text(m: np.ndarray) -> str:
    """First line the dimension, then one whitespace-separated row per line."""
    lines = [str(m.shape[0])]
    lines.extend(" ".join(str(int(x)) for x in row) for row in m)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> np.ndarray:
    tokens = text.split()
    if not tokens:
        raise DomainError("empty matrix text")
    dim = int(tokens[0])
    if len(tokens) != 1 + dim * dim:
        raise DomainError(f"expected {dim * dim} entries, got {len(tokens) - 1}")
    vals = np.array([int(t) for t in tokens[1:]], dtype=np.int64)
    return vals.reshape(dim, dim)
