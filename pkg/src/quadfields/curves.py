"""Point counting for the hyperelliptic families y^2 = f(x).

Three routes are provided and cross-checked against each other:

* brute force over any enumerable field (the oracle),
* the quadratic-character sum N = p + sum chi_2(f(x)) over F_p,
* closed forms for the two genus-1 families, where the affine count is
  p - a_p and the trace defect a_p comes from a sextic (cubic twists
  y^2 = x^3 + D) or quartic (y^2 = x^3 + x) residue character at the
  primary prime over p.

The closed-form sign conventions are pinned by the brute-force oracle; the
test suite sweeps them across all applicable primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .characters import legendre, make_character
from .rings import DomainError, QuadraticInteger, Ring, ResourceError
from .splitting import is_prime, prime_above

METHOD_BRUTE_FORCE = "brute-force"
METHOD_CHARACTER_SUM = "character-sum"
METHOD_CLOSED_FORM = "closed-form"

POINT_LIST_BOUND = 200


@dataclass(frozen=True)
class CubicTwist:
    """y^2 = x^3 + D, genus 1; supersingular for p = 2 (mod 3)."""

    D: int

    genus = 1
    projective_closure = True

    def rhs_coeffs(self) -> tuple[int, ...]:
        return (self.D, 0, 0, 1)

    def __str__(self) -> str:
        return f"y^2 = x^3{self.D:+d}" if self.D else "y^2 = x^3"


@dataclass(frozen=True)
class QuarticTwist:
    """y^2 = x(x^2 + 1), genus 1; the right-hand side splits in Z[i]."""

    genus = 1
    projective_closure = True

    def rhs_coeffs(self) -> tuple[int, ...]:
        return (0, 1, 0, 1)

    def __str__(self) -> str:
        return "y^2 = x(x^2+1)"


@dataclass(frozen=True)
class SuperellipticProbe:
    """y^2 = x^d + D for exploratory counting; no closed form is offered."""

    d: int
    D: int

    projective_closure = False

    @property
    def genus(self) -> int:
        return (self.d - 1) // 2

    def rhs_coeffs(self) -> tuple[int, ...]:
        return (self.D,) + (0,) * (self.d - 1) + (1,)

    def __str__(self) -> str:
        return f"y^2 = x^{self.d}{self.D:+d}" if self.D else f"y^2 = x^{self.d}"


Curve = CubicTwist | QuarticTwist | SuperellipticProbe


@dataclass(frozen=True)
class CountResult:
    q: int
    n_affine: int
    n_projective: int | None  # affine + 1 for the genus-1 families
    method: str
    points: tuple | None = None

    def __str__(self) -> str:
        proj = "-" if self.n_projective is None else str(self.n_projective)
        return f"q={self.q}: affine {self.n_affine}, projective {proj} [{self.method}]"


def _result(curve: Curve, q: int, n_affine: int, method: str, points=None) -> CountResult:
    n_proj = n_affine + 1 if curve.projective_closure else None
    return CountResult(q, n_affine, n_proj, method, points)


def count_points_bruteforce(curve: Curve, field, bound: int = 10 ** 6) -> CountResult:
    """Exhaustive count of (x, y) with y^2 = f(x); the oracle every other
    method is checked against.  Returns the sorted point list for small
    fields (q <= 200)."""
    if field.p == 2:
        raise DomainError("characteristic 2 is not supported")
    if field.q > bound:
        raise ResourceError(f"field has {field.q} elements, bound is {bound}")
    elements = field.elements(bound)
    squares: dict = {}
    for y in elements:
        squares.setdefault(y * y, []).append(y)
    coeffs = curve.rhs_coeffs()
    count = 0
    points = [] if field.q <= POINT_LIST_BOUND else None
    for x in elements:
        rhs = field.from_int(0)
        for c in reversed(coeffs):
            rhs = rhs * x + field.from_int(c)
        ys = squares.get(rhs)
        if ys:
            count += len(ys)
            if points is not None:
                points.extend((x, y) for y in ys)
    if points is not None:
        points.sort(key=lambda xy: (xy[0].sort_key(), xy[1].sort_key()))
        points = tuple(points)
    return _result(curve, field.q, count, METHOD_BRUTE_FORCE, points)


def count_points_character_sum(curve: Curve, p: int) -> CountResult:
    """N_affine = p + sum over x of chi_2(f(x)): each x contributes
    1 + chi_2(f(x)) solutions y."""
    _check_good_prime(curve, p)
    coeffs = curve.rhs_coeffs()
    total = 0
    for x in range(p):
        rhs = 0
        for c in reversed(coeffs):
            rhs = (rhs * x + c) % p
        total += legendre(rhs, p)
    return _result(curve, p, p + total, METHOD_CHARACTER_SUM)


def _check_good_prime(curve: Curve, p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        raise DomainError("characteristic 2 is not supported")
    if isinstance(curve, CubicTwist) and (6 * curve.D) % p == 0:
        raise DomainError(f"p={p} divides 6D: bad reduction is excluded")


def _check_closed_form(curve: Curve, p: int) -> None:
    _check_good_prime(curve, p)
    if isinstance(curve, SuperellipticProbe):
        raise DomainError("no closed form for the probe family; use brute force")


def defect(curve: Curve, p: int) -> int:
    """The trace defect a_p, so that the affine count is p - a_p.

    Cubic twists: a_p = -2 Re(conj(chi_6(4D)) * pi) at the primary
    Eisenstein prime pi over p (zero in the supersingular case p = 2 mod 3).
    Quartic: a_p = 2 Re(chi_4(-1) * pi) at the primary Gaussian prime
    (zero for p = 3 mod 4).  Both Re's are exact half-traces.
    """
    _check_closed_form(curve, p)
    if isinstance(curve, CubicTwist):
        if p % 3 == 2:
            return 0
        chi6 = make_character(p, 6)
        pi = prime_above(Ring.EISENSTEIN, p)
        return -(chi6(4 * curve.D).conj() * pi).trace()
    if p % 4 == 3:
        return 0
    chi4 = make_character(p, 4)
    pi = prime_above(Ring.GAUSSIAN, p)
    return (chi4(-1) * pi).trace()


def count_points_closed_form(curve: Curve, p: int) -> CountResult:
    a_p = defect(curve, p)
    return _result(curve, p, p - a_p, METHOD_CLOSED_FORM)


def _norm_equation_solutions(ring: Ring, p: int) -> list[QuadraticInteger]:
    out = []
    limit = math.isqrt(p) if ring is Ring.GAUSSIAN else math.isqrt(4 * p // 3) + 1
    for a in range(-limit, limit + 1):
        for b in range(-limit, limit + 1):
            z = QuadraticInteger(ring, a, b)
            if z.norm() == p:
                out.append(z)
    return out


def weil_zero(curve: Curve, p: int) -> QuadraticInteger | None:
    """The lattice Weil zero w with w + conj(w) = a_p and w*conj(w) = p.

    Found by bounded search over lattice points of norm p; of the conjugate
    pair, the associate of the primary prime over p is returned.  In the
    inert (supersingular) case there is no lattice solution and None marks
    the purely imaginary pair with a_p = 0.
    """
    _check_closed_form(curve, p)
    ring = Ring.EISENSTEIN if isinstance(curve, CubicTwist) else Ring.GAUSSIAN
    split = p % 3 == 1 if isinstance(curve, CubicTwist) else p % 4 == 1
    if not split:
        return None
    a_p = defect(curve, p)
    pi = prime_above(ring, p)
    candidates = [z for z in _norm_equation_solutions(ring, p) if z.trace() == a_p]
    matches = [z for z in candidates if (z % pi).is_zero()]
    if len(matches) != 1:
        raise AssertionError(f"expected one Weil zero over pi, found {matches}")
    w = matches[0]
    if w * w.conj() != p or w.trace() != a_p:
        raise AssertionError("Weil zero fails its defining equations")
    return w
