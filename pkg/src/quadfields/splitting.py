"""Classification of rational primes in Z[i] and Z[w].

A rational prime either splits into two conjugate primes, stays inert, or
ramifies (2 in the Gaussian ring, 3 in the Eisenstein ring).  The full
bookkeeping (e, f, g) with e*f*g = 2 is produced together with the primes
above p, primary-normalized for determinism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .rings import (
    DomainError,
    QuadraticInteger,
    Ring,
    _is_prime_int,
    canonical_associate,
    eisenstein,
    from_int,
    gaussian,
    ramified_prime_element,
)


class PrimeClass(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class SplittingData:
    ring: Ring
    p: int
    prime_class: PrimeClass
    primes_above: tuple[tuple[QuadraticInteger, int], ...]
    unit: QuadraticInteger  # unit * prod(pi^mult) = p exactly
    e: int
    f: int
    g: int


def is_prime(p: int) -> bool:
    """Deterministic trial division; exact at desk scale."""
    return _is_prime_int(p)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def classify_prime(ring: Ring, p: int) -> PrimeClass:
    _require_prime(p)
    if ring is Ring.GAUSSIAN:
        if p == 2:
            return PrimeClass.RAMIFIED
        return PrimeClass.SPLIT if p % 4 == 1 else PrimeClass.INERT
    if p == 3:
        return PrimeClass.RAMIFIED
    return PrimeClass.SPLIT if p % 3 == 1 else PrimeClass.INERT


def _split_prime_gaussian(p: int) -> QuadraticInteger:
    # two-squares representation p = a^2 + b^2, first hit wins
    for a in range(1, math.isqrt(p) + 1):
        b2 = p - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            return gaussian(a, b)
    raise AssertionError(f"no two-squares representation of split prime {p}")


def _split_prime_eisenstein(p: int) -> QuadraticInteger:
    # a^2 - a*b + b^2 = p  <=>  (2b - a)^2 = 4p - 3a^2
    for a in range(1, math.isqrt(4 * p // 3) + 1):
        t2 = 4 * p - 3 * a * a
        t = math.isqrt(t2)
        if t * t == t2:
            b = (a + t) // 2  # a and t always have equal parity
            z = eisenstein(a, b)
            if z.norm() == p:
                return z
    raise AssertionError(f"no norm-form representation of split prime {p}")


def prime_above(ring: Ring, p: int) -> QuadraticInteger:
    """A distinguished prime element over p: primary for split p, p itself
    for inert p, and 1+i resp. 1-w for the ramified prime."""
    cls = classify_prime(ring, p)
    if cls is PrimeClass.INERT:
        return from_int(ring, p)
    if cls is PrimeClass.RAMIFIED:
        return ramified_prime_element(ring)
    z = _split_prime_gaussian(p) if ring is Ring.GAUSSIAN else _split_prime_eisenstein(p)
    pi = canonical_associate(z)[1]
    # both conjugate primes over p are primary; fix the one with b > 0
    return pi.conj() if pi.b < 0 else pi


def splitting_data(ring: Ring, p: int) -> SplittingData:
    cls = classify_prime(ring, p)
    pi = prime_above(ring, p)
    if cls is PrimeClass.SPLIT:
        primes = ((pi, 1), (pi.conj(), 1))
        e, f, g = 1, 1, 2
    elif cls is PrimeClass.INERT:
        primes = ((pi, 1),)
        e, f, g = 1, 2, 1
    else:
        primes = ((pi, 2),)
        e, f, g = 2, 1, 1
    product = from_int(ring, 1)
    for q, mult in primes:
        product = product * q ** mult
    unit, rem = divmod(from_int(ring, p), product)
    if not rem.is_zero() or not unit.is_unit():
        raise AssertionError(f"inconsistent factorization of {p} in {ring.value}")
    return SplittingData(ring, p, cls, primes, unit, e, f, g)
