"""Finite fields the textbook way: F_p[x] arithmetic, irreducibility by
exhaustive trial division, quotient fields F_p[x]/(f), and the explicit
isomorphism between a lattice quotient and a polynomial quotient of the
same size.

Also provides the plain prime field F_p with the same element interface, so
generic consumers (root finding, point counting, the axiom checker) can
treat all three constructions uniformly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .lattice_field import DEFAULT_ENUMERATION_BOUND, LatticeField, LatticeFieldElement
from .rings import DomainError, ResourceError, Ring

IRREDUCIBILITY_DEGREE_BOUND = 4


@dataclass(frozen=True)
class PolyOverFp:
    """Polynomial over F_p; coefficients lowest degree first, no trailing zeros."""

    p: int
    coeffs: tuple[int, ...]

    @staticmethod
    def make(p: int, coeffs) -> PolyOverFp:
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return PolyOverFp(p, tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: PolyOverFp) -> None:
        if self.p != other.p:
            raise DomainError(f"characteristic mismatch: {self.p} vs {other.p}")

    def __add__(self, other: PolyOverFp) -> PolyOverFp:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyOverFp.make(self.p, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: PolyOverFp) -> PolyOverFp:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyOverFp.make(self.p, [x - y for x, y in zip(a, b)])

    def __neg__(self) -> PolyOverFp:
        return PolyOverFp.make(self.p, [-c for c in self.coeffs])

    def __mul__(self, other: PolyOverFp) -> PolyOverFp:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PolyOverFp(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return PolyOverFp.make(self.p, out)

    def __divmod__(self, other: PolyOverFp) -> tuple[PolyOverFp, PolyOverFp]:
        self._check(other)
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        lead_inv = pow(other.coeffs[-1], -1, p)
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            factor = rem[k + len(other.coeffs) - 1] * lead_inv % p
            quo[k] = factor
            if factor:
                for j, cj in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - factor * cj) % p
        return PolyOverFp.make(p, quo), PolyOverFp.make(p, rem)

    def __mod__(self, other: PolyOverFp) -> PolyOverFp:
        return divmod(self, other)[1]

    def __floordiv__(self, other: PolyOverFp) -> PolyOverFp:
        return divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        """Horner evaluation at a plain integer, reduced mod p."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"PolyOverFp({self.p}, {self.coeffs})"


def poly(p: int, *coeffs: int) -> PolyOverFp:
    """Build a polynomial from lowest-first coefficients."""
    return PolyOverFp.make(p, coeffs)


def _monic_polys(p: int, degree: int):
    for lower in itertools.product(range(p), repeat=degree):
        yield PolyOverFp.make(p, list(lower) + [1])


def is_irreducible(f: PolyOverFp) -> bool:
    """Trial division by all monic polynomials of degree <= deg f / 2.

    Exhaustive by design; degrees are capped at desk scale to keep the
    check auditable.
    """
    d = f.degree
    if d < 1:
        raise DomainError("irreducibility is defined for degree >= 1")
    if d > IRREDUCIBILITY_DEGREE_BOUND:
        raise ResourceError(f"degree {d} exceeds the exhaustive bound {IRREDUCIBILITY_DEGREE_BOUND}")
    for k in range(1, d // 2 + 1):
        for g in _monic_polys(f.p, k):
            if (f % g).is_zero():
                return False
    return True


@dataclass(frozen=True)
class PolyField:
    """F_q = F_p[x]/(modulus) with monic irreducible modulus of degree d >= 2."""

    p: int
    modulus: PolyOverFp
    d: int
    q: int

    def reduce(self, f: PolyOverFp) -> PolyFieldElement:
        if f.p != self.p:
            raise DomainError("characteristic mismatch")
        return PolyFieldElement(self, f % self.modulus)

    def from_int(self, n: int) -> PolyFieldElement:
        return PolyFieldElement(self, PolyOverFp.make(self.p, [n]))

    @property
    def zero(self) -> PolyFieldElement:
        return self.from_int(0)

    @property
    def one(self) -> PolyFieldElement:
        return self.from_int(1)

    @property
    def generator(self) -> PolyFieldElement:
        """The residue class of x (the adjoined root theta)."""
        return PolyFieldElement(self, PolyOverFp.make(self.p, [0, 1]))

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[PolyFieldElement]:
        """All q reduced representatives, ordered by coefficient tuples read
        from the highest degree down (0, 1, ..., theta, theta+1, ...)."""
        if self.q > bound:
            raise ResourceError(f"field has {self.q} elements, enumeration bound is {bound}")
        out = []
        for high_first in itertools.product(range(self.p), repeat=self.d):
            out.append(PolyFieldElement(self, PolyOverFp.make(self.p, list(reversed(high_first)))))
        return out

    def frobenius(self, x: PolyFieldElement) -> PolyFieldElement:
        return x ** self.p

    def __str__(self) -> str:
        return f"F_{self.p}[x]/({render_poly(self.modulus)})"


@dataclass(frozen=True)
class PolyFieldElement:
    field: PolyField
    rep: PolyOverFp

    def _check(self, other: PolyFieldElement) -> None:
        if not isinstance(other, PolyFieldElement) or other.field != self.field:
            raise DomainError("elements belong to different fields")

    def __add__(self, other: PolyFieldElement) -> PolyFieldElement:
        self._check(other)
        return self.field.reduce(self.rep + other.rep)

    def __sub__(self, other: PolyFieldElement) -> PolyFieldElement:
        self._check(other)
        return self.field.reduce(self.rep - other.rep)

    def __neg__(self) -> PolyFieldElement:
        return self.field.reduce(-self.rep)

    def __mul__(self, other: PolyFieldElement) -> PolyFieldElement:
        self._check(other)
        return self.field.reduce(self.rep * other.rep)

    def __pow__(self, n: int) -> PolyFieldElement:
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

    def __truediv__(self, other: PolyFieldElement) -> PolyFieldElement:
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> PolyFieldElement:
        if self.is_zero():
            raise DomainError("zero has no inverse")
        g, u, _ = _poly_xgcd(self.rep, self.field.modulus)
        if g.degree != 0:
            raise DomainError(f"{self.rep} is not invertible")
        scale = pow(g.coeffs[0], -1, self.field.p)
        return self.field.reduce(u * PolyOverFp.make(self.field.p, [scale]))

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def sort_key(self) -> tuple[int, ...]:
        padded = self.rep.coeffs + (0,) * (self.field.d - len(self.rep.coeffs))
        return tuple(reversed(padded))

    def __str__(self) -> str:
        return render_poly(self.rep, symbol="θ")

    def __repr__(self) -> str:
        return f"<{self} in {self.field}>"


def _poly_xgcd(a: PolyOverFp, b: PolyOverFp):
    p = a.p
    r0, r1 = a, b
    u0, u1 = PolyOverFp.make(p, [1]), PolyOverFp.make(p, [])
    v0, v1 = PolyOverFp.make(p, []), PolyOverFp.make(p, [1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return r0, u0, v0


def make_poly_field(f: PolyOverFp) -> PolyField:
    if f.degree < 2:
        raise DomainError("modulus must have degree at least 2 (degree 1 is just F_p)")
    if not f.is_monic():
        raise DomainError("modulus must be monic")
    if not is_irreducible(f):
        raise DomainError(f"modulus {render_poly(f)} is reducible over F_{f.p}")
    return PolyField(f.p, f, f.degree, f.p ** f.degree)


# --- the prime field, with the same element interface ------------------------

@dataclass(frozen=True)
class PrimeField:
    """F_p with plain integer representatives 0..p-1."""

    p: int

    @property
    def q(self) -> int:
        return self.p

    @property
    def f(self) -> int:
        return 1

    def from_int(self, n: int) -> PrimeFieldElement:
        return PrimeFieldElement(self, n % self.p)

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(self, 0)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(self, 1 % self.p)

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[PrimeFieldElement]:
        if self.p > bound:
            raise ResourceError(f"field has {self.p} elements, enumeration bound is {bound}")
        return [PrimeFieldElement(self, v) for v in range(self.p)]

    def frobenius(self, x: PrimeFieldElement) -> PrimeFieldElement:
        return x ** self.p

    def __str__(self) -> str:
        return f"F_{self.p}"


@dataclass(frozen=True)
class PrimeFieldElement:
    field: PrimeField
    value: int

    def _check(self, other: PrimeFieldElement) -> None:
        if not isinstance(other, PrimeFieldElement) or other.field != self.field:
            raise DomainError("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        return PrimeFieldElement(self.field, (self.value + other.value) % self.field.p)

    def __sub__(self, other):
        self._check(other)
        return PrimeFieldElement(self.field, (self.value - other.value) % self.field.p)

    def __neg__(self):
        return PrimeFieldElement(self.field, -self.value % self.field.p)

    def __mul__(self, other):
        self._check(other)
        return PrimeFieldElement(self.field, self.value * other.value % self.field.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(self.field, pow(self.value, n, self.field.p))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def inverse(self):
        if self.value == 0:
            raise DomainError("zero has no inverse")
        return PrimeFieldElement(self.field, pow(self.value, -1, self.field.p))

    def is_zero(self) -> bool:
        return self.value == 0

    def sort_key(self) -> tuple[int]:
        return (self.value,)

    def __str__(self) -> str:
        return str(self.value)


# --- roots and the lattice/polynomial isomorphism ----------------------------

def evaluate(f: PolyOverFp, x):
    """Evaluate f at an element of any field of the same characteristic."""
    field = x.field
    if field.p != f.p:
        raise DomainError("characteristic mismatch between polynomial and field")
    acc = field.from_int(0)
    for c in reversed(f.coeffs):
        acc = acc * x + field.from_int(c)
    return acc


def find_roots(f: PolyOverFp, field, bound: int = DEFAULT_ENUMERATION_BOUND) -> list:
    """All roots of f in the given field, by exhaustive evaluation,
    in canonical element order."""
    return [x for x in field.elements(bound) if evaluate(f, x).is_zero()]


@dataclass(frozen=True)
class Isomorphism:
    """A verified field isomorphism from a lattice quotient to a polynomial
    quotient, determined by where the lattice generator xi goes."""

    source: LatticeField
    target: PolyField
    root: PolyFieldElement  # image of xi
    mapping: dict[LatticeFieldElement, PolyFieldElement]
    count: int  # how many isomorphisms of this shape exist (always 2)

    def __call__(self, x: LatticeFieldElement) -> PolyFieldElement:
        return self.mapping[x]


def defining_polynomial(ring: Ring, p: int) -> PolyOverFp:
    """Minimal polynomial of the ring generator, reduced mod p."""
    if ring is Ring.GAUSSIAN:
        return PolyOverFp.make(p, [1, 0, 1])  # x^2 + 1
    return PolyOverFp.make(p, [1, 1, 1])  # x^2 + x + 1


def find_isomorphism(A: LatticeField, B: PolyField, bound: int = DEFAULT_ENUMERATION_BOUND) -> Isomorphism:
    """Close the square: map Z[xi]/(pi) onto F_p[x]/(f) by sending xi to a
    root of its defining polynomial, then verify the map on all pairs.

    The root with the smallest canonical representative is chosen, so the
    result is deterministic; the conjugate root gives the only other
    isomorphism.
    """
    if A.q != B.q:
        raise DomainError(f"size mismatch: {A.q} vs {B.q}")
    if A.f != 2:
        raise DomainError("the prime-field case is the identity on integer representatives")
    roots = find_roots(defining_polynomial(A.ring, A.p), B, bound)
    if not roots:
        raise DomainError("defining polynomial has no root in the target field")

    a_elems = A.elements(bound)
    verified: list[tuple[PolyFieldElement, dict]] = []
    for r in roots:
        mapping = {e: B.from_int(e.rep.a) + B.from_int(e.rep.b) * r for e in a_elems}
        if _is_isomorphism(mapping, a_elems, B):
            verified.append((r, mapping))
    if not verified:
        raise DomainError("no root induces an isomorphism")
    root, mapping = min(verified, key=lambda rm: rm[0].sort_key())
    return Isomorphism(A, B, root, mapping, len(verified))


def _is_isomorphism(mapping: dict, a_elems: list, B: PolyField) -> bool:
    if len(set(mapping.values())) != len(a_elems):
        return False
    if mapping[a_elems[0].field.one] != B.one:
        return False
    for x in a_elems:
        for y in a_elems:
            if mapping[x + y] != mapping[x] + mapping[y]:
                return False
            if mapping[x * y] != mapping[x] * mapping[y]:
                return False
    return True


# --- rendering and parsing ----------------------------------------------------

def render_poly(f: PolyOverFp, symbol: str = "x") -> str:
    """Compact rendering, highest power first: "x^2+x+2", "2x+1", "0"."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            term = str(c)
        else:
            coef = "" if c == 1 else str(c)
            term = f"{coef}{symbol}" if k == 1 else f"{coef}{symbol}^{k}"
        parts.append(term)
    return "+".join(parts)


_POLY_TERM_RE = re.compile(r"([+-]?)(\d*)\*?(x(?:\^(\d+))?)?")


def parse_poly(p: int, text: str) -> PolyOverFp:
    """Parse "x^2+x+2", "2x+1" or the explicit form "2 + 1*x + 1*x^2"."""
    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty polynomial string")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _POLY_TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise DomainError(f"cannot parse polynomial {text!r}")
        sign, digits, xpart, exp = m.groups()
        if not digits and xpart is None:
            raise DomainError(f"cannot parse polynomial {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        k = 0 if xpart is None else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return PolyOverFp.make(p, out)
