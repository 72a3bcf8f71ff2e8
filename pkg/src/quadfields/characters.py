"""Multiplicative residue characters mod p with exact unit values.

A character of order m in {2, 3, 4, 6} sends a to the unique m-th root of
unity congruent to a^((p-1)/m) modulo a fixed primary prime pi over p.  The
values of the quadratic character are plain integers; orders 4 and 3/6 take
values among the units of Z[i] and Z[w] respectively.  Jacobi sums are
computed exactly in the value ring, where |J|^2 = p becomes an integer
identity instead of a floating-point estimate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice_field import make_field, unit_residue_lookup
from .rings import DomainError, QuadraticInteger, Ring, zero
from .splitting import is_prime, prime_above

CharacterValue = QuadraticInteger | int

_VALUE_RING = {3: Ring.EISENSTEIN, 4: Ring.GAUSSIAN, 6: Ring.EISENSTEIN}


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} by the Euler criterion."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


@dataclass(frozen=True)
class MultiplicativeCharacter:
    """Order-m character mod p, with its full value table built eagerly."""

    p: int
    m: int
    pi: QuadraticInteger | None  # primary prime fixing the normalization; None for m=2
    value_ring: Ring | None  # None means integer-valued (m=2)
    values: tuple[CharacterValue, ...]  # indexed by residue, values[0] = 0

    def __call__(self, a: int) -> CharacterValue:
        return self.values[a % self.p]

    def table(self) -> list[tuple[int, CharacterValue]]:
        return list(enumerate(self.values))

    def conjugate(self) -> MultiplicativeCharacter:
        """The conjugate (inverse) character, attached to conj(pi)."""
        if self.value_ring is None:
            return self
        vals = tuple(v.conj() if isinstance(v, QuadraticInteger) else v for v in self.values)
        return MultiplicativeCharacter(self.p, self.m, self.pi.conj(), self.value_ring, vals)

    def __str__(self) -> str:
        return f"chi_{self.m} mod {self.p}"


def make_character(p: int, m: int) -> MultiplicativeCharacter:
    """The m-th power residue character mod p, normalized at the primary
    prime above p in the value ring."""
    if m not in (2, 3, 4, 6):
        raise DomainError(f"order {m} not supported; use 2, 3, 4 or 6")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if (p - 1) % m != 0:
        raise DomainError(f"character does not exist: {m} does not divide {p}-1")

    if m == 2:
        values = tuple([0] + [legendre(a, p) for a in range(1, p)])
        return MultiplicativeCharacter(p, 2, None, None, values)

    ring = _VALUE_RING[m]
    pi = prime_above(ring, p)
    field = make_field(ring, pi)
    exponent = (p - 1) // m
    vals: list[CharacterValue] = [zero(ring)]
    for a in range(1, p):
        residue = field.from_int(pow(a, exponent, p))
        vals.append(unit_residue_lookup(field, residue, m))
    return MultiplicativeCharacter(p, m, pi, ring, tuple(vals))


@dataclass(frozen=True)
class JacobiSumValue:
    value: QuadraticInteger
    chi_orders: tuple[int, int]
    p: int

    @property
    def norm(self) -> int:
        return self.value.norm()

    def __str__(self) -> str:
        return f"{self.value} (norm {self.norm})"


def jacobi_sum(chi: MultiplicativeCharacter, psi: MultiplicativeCharacter) -> JacobiSumValue:
    """J(chi, psi) = sum over t in F_p of chi(t) * psi(1-t), exactly.

    Both characters must take values in one common ring, so the admissible
    order pairs are {2,4} and {4,4} in Z[i], and {2,3}, {2,6}, {3,3},
    {3,6}, {6,6} in Z[w].
    """
    if chi.p != psi.p:
        raise DomainError("characters have different moduli")
    rings = {c.value_ring for c in (chi, psi)} - {None}
    if len(rings) > 1:
        raise DomainError(
            f"incompatible value rings: order-{chi.m} and order-{psi.m} characters "
            "do not share a ring of values"
        )
    if not rings:
        raise DomainError("a pair of quadratic characters has no distinguished value ring")
    ring = rings.pop()
    p = chi.p
    total = zero(ring)
    for t in range(p):
        total = total + chi(t) * psi(1 - t)
    return JacobiSumValue(total, (chi.m, psi.m), p)
