"""Exact arithmetic for the four group families.

Elements are plain integer indices.  Cyclic and semiprime-cyclic groups
use residues mod the order.  Dihedral groups of order 2n encode a^i as i
and a^i*b as n+i.  Dicyclic groups of order 4n encode a^i (i mod 2n) as i
and a^i*b as 2n+i.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidElementError


class Family(enum.Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dicyclic"
    SEMIPRIME = "semiprime"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class GroupSpec:
    """One instance of a group family; immutable and validated on creation."""

    family: Family
    n: int = 0
    p: int = 0
    q: int = 0

    def __post_init__(self):
        fam = self.family
        if fam is Family.CYCLIC:
            if self.n < 2:
                raise DomainError("cyclic group needs n >= 2")
        elif fam is Family.DIHEDRAL:
            if self.n < 3:
                raise DomainError("dihedral group needs n >= 3")
        elif fam is Family.DICYCLIC:
            if self.n < 2:
                raise DomainError("dicyclic group needs n >= 2")
        elif fam is Family.SEMIPRIME:
            if not (is_prime(self.p) and is_prime(self.q)):
                raise DomainError("semiprime parameters must be prime")
            if self.p == self.q:
                raise DomainError("semiprime parameters must be distinct")
        else:  # pragma: no cover
            raise DomainError(f"unknown family {fam}")

    @property
    def order(self) -> int:
        if self.family is Family.CYCLIC:
            return self.n
        if self.family is Family.DIHEDRAL:
            return 2 * self.n
        if self.family is Family.DICYCLIC:
            return 4 * self.n
        return self.p * self.q

    @property
    def rotation_order(self) -> int:
        """Order of the <a> subgroup for dihedral/dicyclic groups."""
        if self.family is Family.DIHEDRAL:
            return self.n
        if self.family is Family.DICYCLIC:
            return 2 * self.n
        return self.order


def cyclic(n: int) -> GroupSpec:
    return GroupSpec(Family.CYCLIC, n=n)


def dihedral(n: int) -> GroupSpec:
    return GroupSpec(Family.DIHEDRAL, n=n)


def dicyclic(n: int) -> GroupSpec:
    return GroupSpec(Family.DICYCLIC, n=n)


def semiprime(p: int, q: int) -> GroupSpec:
    return GroupSpec(Family.SEMIPRIME, p=p, q=q)


def _check(g: GroupSpec, a: int) -> None:
    if not 0 <= a < g.order:
        raise InvalidElementError(f"element {a} out of range for order {g.order}")


def multiply(g: GroupSpec, a: int, b: int) -> int:
    """Group product under the family's presentation."""
    _check(g, a)
    _check(g, b)
    if g.family in (Family.CYCLIC, Family.SEMIPRIME):
        return (a + b) % g.order

    r = g.rotation_order  # n for dihedral, 2n for dicyclic
    ai, afl = a % r, a >= r
    bi, bfl = b % r, b >= r
    if not afl and not bfl:
        return (ai + bi) % r
    if not afl and bfl:
        return r + (ai + bi) % r
    if afl and not bfl:
        # (a^i b) a^j = a^(i-j) b, from b a = a^(-1) b
        return r + (ai - bi) % r
    # (a^i b)(a^j b) = a^(i-j) b^2
    i = (ai - bi) % r
    if g.family is Family.DIHEDRAL:
        return i  # b^2 = e
    return (i + g.n) % r  # b^2 = a^n


def power(g: GroupSpec, a: int, k: int) -> int:
    """k-th power by square-and-multiply; k = 0 gives the identity."""
    _check(g, a)
    if k < 0:
        raise DomainError("exponent must be non-negative")
    result = 0  # identity in every encoding
    base = a
    while k:
        if k & 1:
            result = multiply(g, result, base)
        base = multiply(g, base, base)
        k >>= 1
    return result


def elem_order(g: GroupSpec, a: int) -> int:
    """Least k >= 1 with a^k = identity."""
    _check(g, a)
    x = a
    k = 1
    while x != 0:
        x = multiply(g, x, a)
        k += 1
    return k


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n, by trial division."""
    if n < 1:
        raise DomainError("euler_phi needs n >= 1")
    result = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            result -= result // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        result -= result // m
    return result


def cyclic_generators(n: int) -> set[int]:
    """Generators of C_n: residues coprime to n."""
    if n < 2:
        raise DomainError("cyclic_generators needs n >= 2")
    return {k for k in range(1, n) if math.gcd(k, n) == 1}


def prime_power_decompose(n: int) -> tuple[int, int] | None:
    """Return (p, m) with n = p^m if n is a prime power, else None."""
    if n < 2:
        raise DomainError("prime_power_decompose needs n >= 2")
    p = 2
    while p * p <= n:
        if n % p == 0:
            m = 0
            x = n
            while x % p == 0:
                x //= p
                m += 1
            return (p, m) if x == 1 else None
        p += 1
    return (n, 1)  # n itself is prime
