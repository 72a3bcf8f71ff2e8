"""Finite fields realized as quotients Z[xi]/(pi) of a quadratic integer ring.

For a split prime element pi (norm p) the quotient is F_p and the canonical
representatives are the plain integers 0..p-1, which makes the F_p
identification explicit.  For an inert rational prime p the quotient is
F_{p^2} with representatives a + b*xi, 0 <= a, b < p.  Ramified moduli are
rejected: their quotients are not fields of the advertised shape.

A raw (possibly non-field) quotient by a rational integer is available
separately so that zero divisors such as those of Z[i]/(5) can be exhibited
by the axiom checker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rings import (
    DomainError,
    QuadraticInteger,
    Ring,
    ResourceError,
    is_prime_element,
    ramified_prime_element,
    units,
    xgcd,
)
from .rings import from_int as ring_int
from .rings import _is_prime_int

DEFAULT_ENUMERATION_BOUND = 10 ** 6
DEFAULT_AXIOM_BOUND = 100


@dataclass(frozen=True)
class LatticeField:
    """F_q presented as Z[xi]/(modulus); q = norm(modulus) = p^f."""

    ring: Ring
    modulus: QuadraticInteger
    p: int
    f: int
    q: int
    xi_residue: int | None  # f=1 only: the integer s with xi = s (mod modulus)

    def reduce(self, z: QuadraticInteger) -> LatticeFieldElement:
        """Canonical representative of z mod the modulus."""
        if z.ring is not self.ring:
            raise DomainError("element belongs to a different ring")
        if self.f == 1:
            r = (z.a + z.b * self.xi_residue) % self.p
            return LatticeFieldElement(self, QuadraticInteger(self.ring, r, 0))
        return LatticeFieldElement(self, QuadraticInteger(self.ring, z.a % self.p, z.b % self.p))

    def from_int(self, n: int) -> LatticeFieldElement:
        return self.reduce(ring_int(self.ring, n))

    @property
    def zero(self) -> LatticeFieldElement:
        return self.from_int(0)

    @property
    def one(self) -> LatticeFieldElement:
        return self.from_int(1)

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[LatticeFieldElement]:
        """All q canonical representatives, ordered lexicographically by (a, b)."""
        if self.q > bound:
            raise ResourceError(f"field has {self.q} elements, enumeration bound is {bound}")
        if self.f == 1:
            return [LatticeFieldElement(self, QuadraticInteger(self.ring, r, 0)) for r in range(self.p)]
        return [
            LatticeFieldElement(self, QuadraticInteger(self.ring, a, b))
            for a in range(self.p)
            for b in range(self.p)
        ]

    def frobenius(self, x: LatticeFieldElement) -> LatticeFieldElement:
        return x ** self.p

    def multiplicative_generator(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> LatticeFieldElement:
        """Lexicographically smallest element of multiplicative order q - 1."""
        n = self.q - 1
        prime_factors = _prime_factors(n)
        for x in self.elements(bound):
            if x.is_zero():
                continue
            if all(x ** (n // ell) != self.one for ell in prime_factors):
                return x
        raise AssertionError("F_q^x is cyclic; a generator always exists")

    def __str__(self) -> str:
        sym = "i" if self.ring is Ring.GAUSSIAN else "w"
        return f"Z[{sym}]/({self.modulus})"


@dataclass(frozen=True)
class LatticeFieldElement:
    field: LatticeField
    rep: QuadraticInteger

    def _check(self, other: LatticeFieldElement) -> None:
        if not isinstance(other, LatticeFieldElement) or other.field != self.field:
            raise DomainError("elements belong to different fields")

    def __add__(self, other: LatticeFieldElement) -> LatticeFieldElement:
        self._check(other)
        return self.field.reduce(self.rep + other.rep)

    def __sub__(self, other: LatticeFieldElement) -> LatticeFieldElement:
        self._check(other)
        return self.field.reduce(self.rep - other.rep)

    def __neg__(self) -> LatticeFieldElement:
        return self.field.reduce(-self.rep)

    def __mul__(self, other: LatticeFieldElement) -> LatticeFieldElement:
        self._check(other)
        return self.field.reduce(self.rep * other.rep)

    def __pow__(self, n: int) -> LatticeFieldElement:
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: LatticeFieldElement) -> LatticeFieldElement:
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> LatticeFieldElement:
        """Multiplicative inverse via the extended Euclidean algorithm in Z[xi]."""
        if self.is_zero():
            raise DomainError("zero has no inverse")
        g, u, _ = xgcd(self.rep, self.field.modulus)
        if not g.is_unit():
            # reachable only in raw quotients, where zero divisors exist
            raise DomainError(f"{self.rep} is not invertible modulo {self.field.modulus}")
        # g is a unit of norm 1, so g^-1 = conj(g)
        return self.field.reduce(u * g.conj())

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def sort_key(self) -> tuple[int, int]:
        return (self.rep.a, self.rep.b)

    def __str__(self) -> str:
        return f"{self.rep} mod ({self.field.modulus})"

    def __repr__(self) -> str:
        return f"<{self.rep} in {self.field}>"


def make_field(ring: Ring, modulus: QuadraticInteger) -> LatticeField:
    if modulus.ring is not ring:
        raise DomainError("modulus belongs to a different ring")
    if not is_prime_element(modulus):
        raise DomainError(f"modulus not prime: {modulus}")
    ramified_norm = ramified_prime_element(ring).norm()
    n = modulus.norm()
    if n == ramified_norm:
        raise DomainError(f"ramified modulus unsupported: {modulus}")
    if _is_prime_int(n):
        p, f = n, 1
        xi_res = _xi_residue(modulus, p)
    else:
        p, f = math.isqrt(n), 2
        xi_res = None
    return LatticeField(ring, modulus, p, f, n, xi_res)


def _xi_residue(modulus: QuadraticInteger, p: int) -> int:
    # modulus = c + d*xi = 0 (mod modulus) forces xi = -c/d;  d is a unit
    # mod p whenever norm(modulus) = p
    c, d = modulus.a, modulus.b
    return (-c * pow(d, -1, p)) % p


def unit_residue_lookup(field: LatticeField, e: LatticeFieldElement, m: int) -> QuadraticInteger:
    """The m-th root of unity in the ambient ring whose residue is e.

    This inverts the quotient map on roots of unity, which is what gives
    residue characters their exact unit values.
    """
    if m not in (2, 3, 4, 6):
        raise DomainError(f"order {m} not supported; use 2, 3, 4 or 6")
    if field.f != 1:
        raise DomainError("unit residue lookup is defined for prime residue fields only")
    if e.field != field:
        raise DomainError("element belongs to a different field")
    for u in _roots_of_unity(field.ring, m):
        if field.reduce(u) == e:
            return u
    raise DomainError(f"not a root-of-unity residue: {e.rep}")


def _roots_of_unity(ring: Ring, m: int) -> tuple[QuadraticInteger, ...]:
    roots = tuple(u for u in units(ring) if (u ** m) == 1)
    if len(roots) != m:
        raise DomainError(f"the {ring.value} ring has no {m}-th roots of unity")
    return roots


def _prime_factors(n: int) -> list[int]:
    factors = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            factors.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


# --- raw quotients and the field-axiom checker -------------------------------

@dataclass(frozen=True)
class RawQuotient:
    """Z[xi]/(n) for a rational integer n >= 2, not necessarily a field.

    Useful as a teaching counterexample: Z[i]/(5) contains zero divisors
    because 5 splits, and make_field rightly refuses to construct it.
    """

    ring: Ring
    n: int

    @property
    def p(self) -> int:
        return self.n

    @property
    def q(self) -> int:
        return self.n * self.n

    def reduce(self, z: QuadraticInteger) -> LatticeFieldElement:
        if z.ring is not self.ring:
            raise DomainError("element belongs to a different ring")
        return LatticeFieldElement(self, QuadraticInteger(self.ring, z.a % self.n, z.b % self.n))

    def from_int(self, k: int) -> LatticeFieldElement:
        return self.reduce(ring_int(self.ring, k))

    @property
    def zero(self) -> LatticeFieldElement:
        return self.from_int(0)

    @property
    def one(self) -> LatticeFieldElement:
        return self.from_int(1)

    @property
    def modulus(self) -> QuadraticInteger:
        return ring_int(self.ring, self.n)

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[LatticeFieldElement]:
        if self.q > bound:
            raise ResourceError(f"quotient has {self.q} elements, enumeration bound is {bound}")
        return [
            LatticeFieldElement(self, QuadraticInteger(self.ring, a, b))
            for a in range(self.n)
            for b in range(self.n)
        ]


def make_raw_quotient(ring: Ring, n: int) -> RawQuotient:
    if n < 2:
        raise DomainError("raw quotient modulus must be at least 2")
    return RawQuotient(ring, n)


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    checks: int
    failures: tuple[str, ...]

    def __str__(self) -> str:
        status = "pass" if self.passed else "fail"
        detail = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"{status} ({self.checks} checks{detail})"


def verify_field_axioms(field, bound: int = DEFAULT_AXIOM_BOUND) -> AxiomReport:
    """Exhaustively check the field axioms on a small quotient.

    Associativity, commutativity, distributivity and identities are checked
    on all element triples; inverses on all (nonzero) elements.  Stops after
    recording the first counterexample per axiom.
    """
    elems = field.elements()
    if len(elems) > bound:
        raise ResourceError(f"{len(elems)} elements exceed the exhaustive bound {bound}")
    zero_, one_ = field.zero, field.one
    failures: list[str] = []
    checks = 0

    for x in elems:
        checks += 4
        if x + zero_ != x:
            failures.append(f"additive identity fails at {x.rep}")
            break
        if x * one_ != x:
            failures.append(f"multiplicative identity fails at {x.rep}")
            break
        if x + (-x) != zero_:
            failures.append(f"additive inverse fails at {x.rep}")
            break
        if not x.is_zero():
            try:
                inv = x.inverse()
            except (DomainError, AssertionError):
                failures.append(f"no multiplicative inverse for {x.rep}")
                break
            if x * inv != one_:
                failures.append(f"inverse check fails at {x.rep}")
                break

    if not failures:
        for x in elems:
            for y in elems:
                checks += 2
                if x + y != y + x:
                    failures.append(f"addition not commutative at ({x.rep}, {y.rep})")
                    break
                if x * y != y * x:
                    failures.append(f"multiplication not commutative at ({x.rep}, {y.rep})")
                    break
            if failures:
                break

    if not failures:
        for x in elems:
            for y in elems:
                for z in elems:
                    checks += 3
                    if (x + y) + z != x + (y + z):
                        failures.append(f"addition not associative at ({x.rep}, {y.rep}, {z.rep})")
                        break
                    if (x * y) * z != x * (y * z):
                        failures.append(f"multiplication not associative at ({x.rep}, {y.rep}, {z.rep})")
                        break
                    if x * (y + z) != x * y + x * z:
                        failures.append(f"distributivity fails at ({x.rep}, {y.rep}, {z.rep})")
                        break
                if failures:
                    break
            if failures:
                break

    return AxiomReport(not failures, checks, tuple(failures))


def lattice_coordinates(field: LatticeField, x: LatticeFieldElement) -> tuple[Fraction, Fraction]:
    """Express a representative as a*pi + b*conj(pi) with exact rational a, b.

    Read-only alternate rendering of a split-modulus residue in the
    fundamental cell of the sublattice spanned by the prime and its
    conjugate.
    """
    if field.f != 1:
        raise DomainError("lattice coordinates are defined for split moduli only")
    pi = field.modulus
    pc = pi.conj()
    z = x.rep
    # solve the 2x2 linear system over Q in basis coordinates
    det = pi.a * pc.b - pc.a * pi.b
    if det == 0:
        raise DomainError("modulus and its conjugate are linearly dependent")
    a = Fraction(z.a * pc.b - pc.a * z.b, det)
    b = Fraction(pi.a * z.b - z.a * pi.b, det)
    return a, b
