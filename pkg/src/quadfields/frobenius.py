"""Frobenius elements of quadratic and cyclotomic Galois groups.

For an unramified prime p the Frobenius element of a quadratic extension is
the unique ring automorphism inducing x -> x^p on the residue field: the
identity when p splits and conjugation when p is inert.  Its matrix in the
basis {1, xi} and the characteristic polynomial det(I - T*Frob) mirror the
numerator of the congruence zeta function, and the Artin map packages the
elements across p.  verify_lift checks the induced-map property exhaustively
on the residue representatives, which is the module's ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import legendre
from .lattice_field import LatticeField
from .rings import DomainError, QuadraticInteger, Ring
from .splitting import is_prime

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

_IDENTITY: Matrix2 = ((1, 0), (0, 1))


@dataclass(frozen=True)
class QuadraticField:
    """Q(sqrt(d)) for squarefree d, presented in the basis {1, sqrt(d)}."""

    d: int

    def __post_init__(self):
        if self.d in (0, 1):
            raise DomainError("d must be a squarefree integer other than 0 and 1")
        if not _is_squarefree(self.d):
            raise DomainError(f"{self.d} is not squarefree")

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


@dataclass(frozen=True)
class Cyclotomic:
    """Q(zeta_n); the ramified primes are exactly the divisors of n."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise DomainError("cyclotomic context needs n >= 3")

    def __str__(self) -> str:
        return f"Q(zeta_{self.n})"


GaloisContext = QuadraticField | Cyclotomic


@dataclass(frozen=True)
class FrobeniusData:
    context: GaloisContext
    p: int
    symbol: int  # +-1 in quadratic contexts, p mod n in cyclotomic ones
    matrix: Matrix2 | None
    char_poly_T: tuple[int, int, int] | None  # det(I - T M), lowest degree first
    char_poly_u: tuple[int, int, int] | None  # det(u I - M), lowest degree first


def _is_squarefree(d: int) -> bool:
    d = abs(d)
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def _quadratic_data(context: GaloisContext, p: int, symbol: int, matrix: Matrix2) -> FrobeniusData:
    tr = matrix[0][0] + matrix[1][1]
    det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    return FrobeniusData(
        context,
        p,
        symbol,
        matrix,
        (1, -tr, det),   # det(I - T M) = 1 - tr(M) T + det(M) T^2
        (det, -tr, 1),   # det(u I - M) = u^2 - tr(M) u + det(M)
    )


def frobenius_quadratic(d: int, p: int) -> FrobeniusData:
    """Frobenius of Q(sqrt(d)) at an odd unramified prime: the Legendre
    symbol (d/p), as the identity or the conjugation matrix."""
    context = QuadraticField(d)
    if not is_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    symbol = legendre(d, p)
    if symbol == 0:
        raise DomainError(f"p={p} ramifies in {context}: inertia is nontrivial")
    matrix: Matrix2 = _IDENTITY if symbol == 1 else ((1, 0), (0, -1))
    return _quadratic_data(context, p, symbol, matrix)


def _check_unramified(ring: Ring, p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    ramified = 2 if ring is Ring.GAUSSIAN else 3
    if p == ramified:
        raise DomainError(f"p={p} ramifies in the {ring.value} ring")


def frobenius_lift_apply(ring: Ring, p: int, z: QuadraticInteger) -> QuadraticInteger:
    """The Frobenius element applied to a ring element.

    Gaussian: a+bi -> a + (-1/p) b i, since (a+ib)^p = a + b i^p mod p.
    Eisenstein: w -> w^(p mod 3), i.e. the identity for split p and
    conjugation for inert p.
    """
    _check_unramified(ring, p)
    if z.ring is not ring:
        raise DomainError("element belongs to a different ring")
    if ring is Ring.GAUSSIAN:
        return QuadraticInteger(ring, z.a, legendre(-1, p) * z.b)
    return z if p % 3 == 1 else z.conj()


def verify_lift(ring: Ring, p: int, field: LatticeField) -> bool:
    """Check reduce(Frob(z)) = reduce(z)^p on every canonical representative."""
    if field.ring is not ring or field.p != p:
        raise DomainError("field does not lie over the given prime in this ring")
    for x in field.elements():
        if field.reduce(frobenius_lift_apply(ring, p, x.rep)) != field.frobenius(x):
            return False
    return True


def artin_map(n: int, p: int) -> int:
    """p -> Frob_p = p mod n for the cyclotomic context Q(zeta_n)."""
    Cyclotomic(n)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n % p == 0:
        raise DomainError(f"p={p} divides n={n}: ramified")
    return p % n


def frobenius_matrix_and_charpoly(ring: Ring, p: int) -> FrobeniusData:
    """Matrix of the Frobenius element in the basis {1, xi} together with
    both characteristic polynomial forms."""
    _check_unramified(ring, p)
    if ring is Ring.GAUSSIAN:
        context: GaloisContext = QuadraticField(-1)
        split = p % 4 == 1
        conjugation: Matrix2 = ((1, 0), (0, -1))
    else:
        context = QuadraticField(-3)
        split = p % 3 == 1
        # w -> w^2 = -1-w sends the basis vector w to (-1, -1)
        conjugation = ((1, -1), (0, -1))
    symbol = 1 if split else -1
    matrix = _IDENTITY if split else conjugation
    return _quadratic_data(context, p, symbol, matrix)
