"""Congruence zeta data for the genus-1 families.

Everything reduces to the trace defect a_p: the numerator polynomial is
P(T) = 1 - a_p*T + p*T^2, its value at 1 is the projective count, and the
power sums s_n of its reciprocal roots obey the integer recurrence
s_n = a_p*s_{n-1} - p*s_{n-2}, which gives the affine counts
N_n = p^n - s_n over every extension F_{p^n}.  The defining series identity
exp(sum N_n^proj T^n / n) = P(T)/((1-T)(1-pT)) is checked with exact
rational arithmetic, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import DomainError, QuadraticInteger
from .splitting import is_prime


@dataclass(frozen=True)
class ExtensionCount:
    n: int
    power_sum: int  # s_n = w^n + conj(w)^n
    n_affine: int
    n_projective: int


@dataclass(frozen=True)
class ZetaData:
    p: int
    a_p: int
    betti_coeffs: tuple[int, int, int]  # (1, -a_p, p)
    weil_pair: tuple[QuadraticInteger, QuadraticInteger] | None
    genus: int = 1

    def poly_at(self, t: Fraction) -> Fraction:
        c0, c1, c2 = self.betti_coeffs
        return c0 + c1 * t + c2 * t * t


def betti_polynomial(a_p: int, p: int, weil_zero: QuadraticInteger | None = None) -> ZetaData:
    """P(T) = 1 - a_p T + p T^2, with the Hasse bound enforced up front."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if a_p * a_p > 4 * p:
        raise DomainError(f"defect outside Weil bound: {a_p}^2 > 4*{p}")
    pair = None
    if weil_zero is not None:
        if weil_zero * weil_zero.conj() != p or weil_zero.trace() != a_p:
            raise DomainError("weil zero does not match (a_p, p)")
        pair = (weil_zero, weil_zero.conj())
    return ZetaData(p, a_p, (1, -a_p, p), pair)


def projective_count_from_P(zd: ZetaData) -> int:
    """P(1) = 1 - a_p + p, the projective count over F_p."""
    return 1 - zd.a_p + zd.p


def extension_counts(zd: ZetaData, n_max: int) -> list[ExtensionCount]:
    """Counts over F_{p^n} for n = 1..n_max via the power-sum recurrence."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    out = []
    s_prev, s_cur = 2, zd.a_p  # s_0, s_1
    pn = zd.p
    for n in range(1, n_max + 1):
        out.append(ExtensionCount(n, s_cur, pn - s_cur, pn + 1 - s_cur))
        s_prev, s_cur = s_cur, zd.a_p * s_cur - zd.p * s_prev
        pn *= zd.p
    return out


def hasse_check(zd: ZetaData) -> tuple[bool, tuple[int, int]]:
    """Exact Weil-bound check, returned as the integer pair (a_p^2, 4p)."""
    return zd.a_p * zd.a_p <= 4 * zd.p, (zd.a_p * zd.a_p, 4 * zd.p)


def _series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def _series_exp(a: list[Fraction], order: int) -> list[Fraction]:
    # E' = A' E  =>  n E_n = sum_{k=1..n} k A_k E_{n-k}
    e = [Fraction(1)] + [Fraction(0)] * order
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += k * a[k] * e[n - k]
        e[n] = acc / n
    return e


def zeta_series_check(zd: ZetaData, order: int) -> bool:
    """Verify exp(sum N_n^proj T^n/n) = P(T)/((1-T)(1-pT)) through T^order."""
    if order > 12:
        raise DomainError("series order capped at 12")
    counts = extension_counts(zd, order)
    log_series = [Fraction(0)] + [Fraction(c.n_projective, c.n) for c in counts]
    lhs = _series_exp(log_series, order)

    geom1 = [Fraction(1)] * (order + 1)  # 1/(1-T)
    geomp = [Fraction(zd.p) ** n for n in range(order + 1)]  # 1/(1-pT)
    poly_series = [Fraction(c) for c in zd.betti_coeffs] + [Fraction(0)] * max(0, order - 2)
    rhs = _series_mul(_series_mul(poly_series, geom1, order), geomp, order)
    return lhs == rhs
