"""Exact arithmetic in the quadratic integer rings Z[i] and Z[w].

Elements are stored in the basis {1, xi} with xi = i (xi^2 = -1) for the
Gaussian ring and xi = w (w^2 = -1 - w, a primitive cube root of unity) for
the Eisenstein ring.  Both rings are Euclidean with respect to the norm
forms a^2 + b^2 and a^2 - a*b + b^2, which is what every higher layer of
this package relies on.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum


class DomainError(ValueError):
    """Invalid input for an operation (wrong ring, non-prime modulus, ...)."""


class ResourceError(RuntimeError):
    """A desk-scale enumeration bound was exceeded."""


class Ring(Enum):
    GAUSSIAN = "gaussian"
    EISENSTEIN = "eisenstein"

    @property
    def symbol(self) -> str:
        return "i" if self is Ring.GAUSSIAN else "w"

    @property
    def unicode_symbol(self) -> str:
        return "i" if self is Ring.GAUSSIAN else "ω"


@dataclass(frozen=True, slots=True, eq=False)
class QuadraticInteger:
    """a + b*xi with integer coordinates, immutable."""

    ring: Ring
    a: int
    b: int

    def _coerce(self, other: QuadraticInteger | int) -> QuadraticInteger:
        if isinstance(other, int):
            return QuadraticInteger(self.ring, other, 0)
        if not isinstance(other, QuadraticInteger):
            raise TypeError(f"cannot mix QuadraticInteger with {type(other).__name__}")
        if other.ring is not self.ring:
            raise DomainError(f"ring mismatch: {self.ring.value} vs {other.ring.value}")
        return other

    def __add__(self, other: QuadraticInteger | int) -> QuadraticInteger:
        other = self._coerce(other)
        return QuadraticInteger(self.ring, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: QuadraticInteger | int) -> QuadraticInteger:
        other = self._coerce(other)
        return QuadraticInteger(self.ring, self.a - other.a, self.b - other.b)

    def __rsub__(self, other: QuadraticInteger | int) -> QuadraticInteger:
        return self._coerce(other) - self

    def __neg__(self) -> QuadraticInteger:
        return QuadraticInteger(self.ring, -self.a, -self.b)

    def __mul__(self, other: QuadraticInteger | int) -> QuadraticInteger:
        other = self._coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        if self.ring is Ring.GAUSSIAN:
            # (a+bi)(c+di), i^2 = -1
            return QuadraticInteger(self.ring, a * c - b * d, a * d + b * c)
        # (a+bw)(c+dw), w^2 = -1-w
        return QuadraticInteger(self.ring, a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadraticInteger:
        if n < 0:
            raise DomainError("negative powers are not defined in the ring")
        result = QuadraticInteger(self.ring, 1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: QuadraticInteger | int) -> tuple[QuadraticInteger, QuadraticInteger]:
        """Rounded division: q with norm(self - q*other) < norm(other).

        The exact rational quotient is taken in basis coordinates and each
        coordinate rounded to the nearest integer, exact halves toward +inf,
        so results are bit-for-bit reproducible.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise DomainError("division by zero")
        num = self * other.conj()
        den = other.norm()
        q = QuadraticInteger(self.ring, _round_half_up(num.a, den), _round_half_up(num.b, den))
        return q, self - q * other

    def __floordiv__(self, other: QuadraticInteger | int) -> QuadraticInteger:
        return divmod(self, other)[0]

    def __mod__(self, other: QuadraticInteger | int) -> QuadraticInteger:
        return divmod(self, other)[1]

    def conj(self) -> QuadraticInteger:
        if self.ring is Ring.GAUSSIAN:
            return QuadraticInteger(self.ring, self.a, -self.b)
        # conj(a+bw) = a + b*w^2 = (a-b) - b*w
        return QuadraticInteger(self.ring, self.a - self.b, -self.b)

    def norm(self) -> int:
        a, b = self.a, self.b
        if self.ring is Ring.GAUSSIAN:
            return a * a + b * b
        return a * a - a * b + b * b

    def trace(self) -> int:
        """z + conj(z) as a plain integer (exact twice-real-part)."""
        if self.ring is Ring.GAUSSIAN:
            return 2 * self.a
        return 2 * self.a - self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticInteger):
            return self.ring is other.ring and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.a, self.b))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"QuadraticInteger({self.ring.value}, {self.a}, {self.b})"


def gaussian(a: int, b: int = 0) -> QuadraticInteger:
    return QuadraticInteger(Ring.GAUSSIAN, a, b)


def eisenstein(a: int, b: int = 0) -> QuadraticInteger:
    return QuadraticInteger(Ring.EISENSTEIN, a, b)


def from_int(ring: Ring, n: int) -> QuadraticInteger:
    return QuadraticInteger(ring, n, 0)


def one(ring: Ring) -> QuadraticInteger:
    return QuadraticInteger(ring, 1, 0)


def zero(ring: Ring) -> QuadraticInteger:
    return QuadraticInteger(ring, 0, 0)


def xi(ring: Ring) -> QuadraticInteger:
    """The ring generator: i for Gaussian, w for Eisenstein."""
    return QuadraticInteger(ring, 0, 1)


# Unit groups, listed as consecutive powers of a generating root of unity
# (i for Gaussian, -w^2 = 1+w for Eisenstein).
_GAUSSIAN_UNITS = (gaussian(1, 0), gaussian(0, 1), gaussian(-1, 0), gaussian(0, -1))
_EISENSTEIN_UNITS = (
    eisenstein(1, 0),
    eisenstein(1, 1),    # -w^2
    eisenstein(0, 1),    # w
    eisenstein(-1, 0),
    eisenstein(-1, -1),  # w^2
    eisenstein(0, -1),   # -w
)


def units(ring: Ring) -> tuple[QuadraticInteger, ...]:
    return _GAUSSIAN_UNITS if ring is Ring.GAUSSIAN else _EISENSTEIN_UNITS


def ramified_prime_element(ring: Ring) -> QuadraticInteger:
    """The prime whose square divides the ramified rational prime (2 or 3)."""
    return gaussian(1, 1) if ring is Ring.GAUSSIAN else eisenstein(1, -1)


def _round_half_up(n: int, d: int) -> int:
    # nearest integer to n/d for d > 0, exact halves toward +inf
    return (2 * n + d) // (2 * d)


def divides(d: QuadraticInteger, z: QuadraticInteger) -> bool:
    if d.is_zero():
        return z.is_zero()
    return (z % d).is_zero()


def xgcd(x: QuadraticInteger, y: QuadraticInteger) -> tuple[QuadraticInteger, QuadraticInteger, QuadraticInteger]:
    """Extended Euclidean algorithm: returns (g, u, v) with u*x + v*y = g.

    g is a greatest common divisor as produced by the remainder chain, with
    no unit normalization applied.
    """
    if x.ring is not y.ring:
        raise DomainError("ring mismatch in xgcd")
    ring = x.ring
    r0, r1 = x, y
    u0, u1 = one(ring), zero(ring)
    v0, v1 = zero(ring), one(ring)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return r0, u0, v0


def is_primary(z: QuadraticInteger) -> bool:
    """Primary means z = 2 (mod 3) in Z[w], z = 1 (mod (1+i)^3) in Z[i]."""
    if z.ring is Ring.EISENSTEIN:
        return z.a % 3 == 2 and z.b % 3 == 0
    return divides(gaussian(-2, 2), z - 1)  # (1+i)^3 = -2+2i


def canonical_associate(z: QuadraticInteger) -> tuple[QuadraticInteger, QuadraticInteger]:
    """Return (u, u*z) where u*z is the unique primary associate of z.

    Defined only for z coprime to the ramified prime (odd norm in Z[i],
    norm coprime to 3 in Z[w]); otherwise a DomainError is raised.
    """
    if z.is_zero():
        raise DomainError("zero has no primary associate")
    n = z.norm()
    if z.ring is Ring.GAUSSIAN and n % 2 == 0:
        raise DomainError("no primary associate: element is divisible by 1+i")
    if z.ring is Ring.EISENSTEIN and n % 3 == 0:
        raise DomainError("no primary associate: element is divisible by 1-w")
    for u in units(z.ring):
        w = u * z
        if is_primary(w):
            return u, w
    raise AssertionError(f"no primary associate found for {z!r}")  # unreachable


def _lex_associate(z: QuadraticInteger) -> QuadraticInteger:
    # deterministic fallback when no primary associate exists:
    # smallest (a, b) among associates with a > 0, else with a = 0 and b > 0
    candidates = [u * z for u in units(z.ring)]
    positive = [c for c in candidates if c.a > 0]
    if positive:
        return min(positive, key=lambda c: (c.a, c.b))
    axis = [c for c in candidates if c.a == 0 and c.b > 0]
    if axis:
        return min(axis, key=lambda c: (c.a, c.b))
    return z  # only z = 0 reaches this


def normalize_associate(z: QuadraticInteger) -> QuadraticInteger:
    """Canonical representative of the associate class of z."""
    if z.is_zero():
        return z
    n = z.norm()
    ramified = 2 if z.ring is Ring.GAUSSIAN else 3
    if n % ramified != 0:
        return canonical_associate(z)[1]
    return _lex_associate(z)


def gcd(x: QuadraticInteger, y: QuadraticInteger) -> QuadraticInteger:
    """Greatest common divisor in canonical (primary where possible) form."""
    if x.ring is not y.ring:
        raise DomainError("ring mismatch in gcd")
    if x.is_zero() and y.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not y.is_zero():
        x, y = y, x % y
    return normalize_associate(x)


def _is_prime_int(n: int) -> bool:
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


def is_prime_element(z: QuadraticInteger) -> bool:
    """True iff z generates a prime ideal of its ring.

    Either norm(z) is a rational prime (z lies over a split or ramified p),
    or z is an associate of an inert rational prime (norm p^2).
    """
    n = z.norm()
    if n <= 1:
        return False
    if _is_prime_int(n):
        return True
    p = math.isqrt(n)
    if p * p != n or not _is_prime_int(p):
        return False
    if z.ring is Ring.GAUSSIAN:
        inert = p % 4 == 3
    else:
        inert = p != 3 and p % 3 == 2
    if not inert:
        return False
    if z.a % p or z.b % p:
        return False
    return QuadraticInteger(z.ring, z.a // p, z.b // p).is_unit()


# --- textual rendering and parsing ------------------------------------------

def render(z: QuadraticInteger, unicode: bool = False) -> str:
    """Render as "a+bi" / "a+bw" with normalized signs, e.g. "-1+3w", "2-i"."""
    sym = z.ring.unicode_symbol if unicode else z.ring.symbol
    a, b = z.a, z.b
    if b == 0:
        return str(a)
    coef = "" if abs(b) == 1 else str(abs(b))
    term = f"{coef}{sym}"
    if a == 0:
        return term if b > 0 else f"-{term}"
    sign = "+" if b > 0 else "-"
    return f"{a}{sign}{term}"


_TERM_RE = re.compile(r"([+-]?)(\d*)(i|w|ω)?")


def parse_element(ring: Ring, text: str) -> QuadraticInteger:
    """Parse "a+bi" / "a+bw" (either term order, optional whitespace)."""
    s = text.replace(" ", "").replace("ω", "w").replace("−", "-")
    if not s:
        raise DomainError("empty element string")
    a = b = 0
    seen_rational = seen_xi = False
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise DomainError(f"cannot parse element {text!r}")
        sign, digits, sym = m.groups()
        value = int(digits) if digits else 1
        if not digits and sym is None:
            raise DomainError(f"cannot parse element {text!r}")
        if sign == "-":
            value = -value
        if sym is None:
            if seen_rational:
                raise DomainError(f"repeated rational term in {text!r}")
            a, seen_rational = value, True
        else:
            expected = "i" if ring is Ring.GAUSSIAN else "w"
            if sym != expected:
                raise DomainError(f"symbol {sym!r} does not belong to the {ring.value} ring")
            if seen_xi:
                raise DomainError(f"repeated {sym!r} term in {text!r}")
            b, seen_xi = value, True
        pos = m.end()
    return QuadraticInteger(ring, a, b)
