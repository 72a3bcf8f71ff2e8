"""Command-line front end.

Every command prints deterministic text, or a JSON envelope
{"command", "format_version": 1, "inputs", "result"} under --json.
Ring elements serialize as {"ring", "a", "b"} and polynomials as
coefficient arrays, lowest degree first.  Exit codes: 0 success,
2 domain/validation error, 3 resource-bound error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from . import curves as curves_mod
from .characters import jacobi_sum, legendre, make_character
from .curves import (
    CubicTwist,
    QuarticTwist,
    SuperellipticProbe,
    count_points_bruteforce,
    count_points_character_sum,
    count_points_closed_form,
    defect,
    weil_zero,
)
from .frobenius import (
    artin_map,
    frobenius_lift_apply,
    frobenius_matrix_and_charpoly,
    frobenius_quadratic,
    verify_lift,
)
from .lattice_field import (
    lattice_coordinates,
    make_field,
    make_raw_quotient,
    verify_field_axioms,
)
from .poly_field import PrimeField, find_isomorphism, is_irreducible, make_poly_field, poly
from .rings import (
    DomainError,
    QuadraticInteger,
    Ring,
    ResourceError,
    canonical_associate,
    gaussian,
    eisenstein,
    parse_element,
    render,
    units,
)
from .splitting import PrimeClass, is_prime, prime_above, splitting_data
from .zeta import betti_polynomial, extension_counts, projective_count_from_P, zeta_series_check

FORMAT_VERSION = 1


def _ring_arg(name: str) -> Ring:
    try:
        return Ring(name)
    except ValueError:
        raise DomainError(f"unknown ring {name!r}; use gaussian or eisenstein")


def element_json(z: QuadraticInteger) -> dict:
    return {"ring": z.ring.value, "a": z.a, "b": z.b}


def unit_symbol(u: QuadraticInteger, unicode: bool = False) -> str:
    """Symbolic name of a unit: 1, -1, i, -i, w, -w, w^2, -w^2."""
    sym = u.ring.unicode_symbol if unicode else u.ring.symbol
    table = {
        (1, 0): "1",
        (-1, 0): "-1",
        (0, 1): sym,
        (0, -1): f"-{sym}",
    }
    if u.ring is Ring.EISENSTEIN:
        table[(-1, -1)] = f"{sym}^2"
        table[(1, 1)] = f"-{sym}^2"
    try:
        return table[(u.a, u.b)]
    except KeyError:
        raise DomainError(f"{u} is not a unit")


def poly_text(coeffs, var: str) -> str:
    """Ascending rendering of integer coefficients: (1, -2, 13) -> 1-2T+13T^2."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 and k > 0 else str(abs(c))
        power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        term = f"{mag}{power}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+" if c > 0 else "-") + term)
    return "".join(parts) or "0"


# --- command handlers ---------------------------------------------------------
# each returns (text lines, json payload, echoed inputs); verify returns a
# fourth element carrying the exit code

def cmd_factor(args):
    ring = _ring_arg(args.ring)
    data = splitting_data(ring, args.p)
    uni = args.unicode

    factors = []
    for pi, mult in data.primes_above:
        s = f"({render(pi, uni)})"
        factors.append(s if mult == 1 else s + f"^{mult}")
    unit_prefix = "" if data.unit == 1 else f"{unit_symbol(data.unit, uni)} * "
    eq = f"{args.p} = {unit_prefix}" + "".join(factors)
    if data.prime_class is PrimeClass.INERT:
        eq = f"{args.p} stays prime (norm {args.p}^2)"
    lines = [
        f"{eq}  [{data.prime_class.value}; e={data.e} f={data.f} g={data.g}]",
    ]
    payload = {
        "p": args.p,
        "ring": ring.value,
        "class": data.prime_class.value,
        "e": data.e,
        "f": data.f,
        "g": data.g,
        "unit": element_json(data.unit),
        "primes_above": [
            {"prime": element_json(pi), "multiplicity": m} for pi, m in data.primes_above
        ],
    }
    return lines, payload, {"ring": ring.value, "p": args.p}


def cmd_field(args):
    ring = _ring_arg(args.ring)
    modulus = parse_element(ring, args.modulus)
    field = make_field(ring, modulus)
    elems = field.elements(args.bound)
    uni = args.unicode

    lines = [f"{field}: q={field.q}=p^f with p={field.p}, f={field.f}"]
    lines.append("elements: " + ", ".join(render(e.rep, uni) for e in elems))
    if args.lattice:
        if field.f != 1:
            raise DomainError("--lattice applies to split moduli only")
        for e in elems:
            a, b = lattice_coordinates(field, e)
            lines.append(f"  {render(e.rep, uni)} = ({a})*pi + ({b})*conj(pi)")
    if args.table:
        op = (lambda x, y: x + y) if args.table == "add" else (lambda x, y: x * y)
        width = max(len(render(e.rep, uni)) for e in elems)
        header = " " * (width + 2) + "| " + " ".join(render(e.rep, uni).rjust(width) for e in elems)
        lines.append(f"{args.table} table:")
        lines.append(header)
        lines.append("-" * len(header))
        for x in elems:
            row = " ".join(render(op(x, y).rep, uni).rjust(width) for y in elems)
            lines.append(f"{render(x.rep, uni).rjust(width + 2)}| {row}")

    payload = {
        "ring": ring.value,
        "modulus": element_json(modulus),
        "p": field.p,
        "f": field.f,
        "q": field.q,
        "elements": [element_json(e.rep) for e in elems],
    }
    return lines, payload, {"ring": ring.value, "modulus": args.modulus}


def _build_curve(args):
    if args.family == "cubic":
        return CubicTwist(args.D)
    if args.family == "quartic":
        return QuarticTwist()
    if args.d is None:
        raise DomainError("the probe family needs a degree -d")
    return SuperellipticProbe(args.d, args.D)


def _find_irreducible(p: int, degree: int):
    for high in itertools.product(range(p), repeat=degree):
        f = poly(p, *(list(reversed(high)) + [1]))
        if f.degree == degree and is_irreducible(f):
            return f
    raise DomainError(f"no irreducible polynomial of degree {degree} over F_{p}")


def cmd_count(args):
    curve = _build_curve(args)
    p = args.p
    methods = {}
    if args.method in ("brute", "all"):
        methods["brute-force"] = count_points_bruteforce(curve, PrimeField(p), args.bound)
    if args.method in ("char", "all") and not isinstance(curve, SuperellipticProbe):
        methods["character-sum"] = count_points_character_sum(curve, p)
    closed_ok = not isinstance(curve, SuperellipticProbe)
    if args.method in ("closed", "all") and closed_ok:
        methods["closed-form"] = count_points_closed_form(curve, p)
    if args.method == "char" and isinstance(curve, SuperellipticProbe):
        methods["character-sum"] = count_points_character_sum(curve, p)
    if not methods:
        raise DomainError(f"method {args.method!r} does not apply to this family")

    affines = {r.n_affine for r in methods.values()}
    if len(affines) != 1:
        raise AssertionError(f"methods disagree: { {k: v.n_affine for k, v in methods.items()} }")
    result = next(iter(methods.values()))

    lines = [f"{curve} over F_{p}: affine {result.n_affine}"
             + ("" if result.n_projective is None else f", projective {result.n_projective}")
             + f"  [methods: {', '.join(sorted(methods))}]"]
    payload = {
        "curve": str(curve),
        "q": p,
        "n_affine": result.n_affine,
        "n_projective": result.n_projective,
        "methods": sorted(methods),
    }
    if closed_ok:
        a_p = defect(curve, p)
        payload["a_p"] = a_p
        lines.append(f"defect a_p = {a_p}")

    brute = methods.get("brute-force")
    if args.points and brute is not None and brute.points is not None:
        pts = " ".join(f"({x},{y})" for x, y in brute.points)
        lines.append(f"points: {pts}")
        payload["points"] = [[_field_elt_json(x), _field_elt_json(y)] for x, y in brute.points]

    if args.ext:
        if not closed_ok:
            raise DomainError("extension counts need the closed form; not available for the probe")
        n = args.ext
        zd = betti_polynomial(defect(curve, p), p)
        row = extension_counts(zd, n)[n - 1]
        ext_payload = {"n": n, "affine": row.n_affine, "projective": row.n_projective,
                       "method": "recurrence"}
        lines.append(f"N_{n} (recurrence): affine {row.n_affine}, projective {row.n_projective}")
        if n >= 2 and n <= 4 and p ** n <= args.bound:
            ext_field = make_poly_field(_find_irreducible(p, n))
            brute_ext = count_points_bruteforce(curve, ext_field, args.bound)
            agree = brute_ext.n_affine == row.n_affine
            ext_payload["brute_force_affine"] = brute_ext.n_affine
            ext_payload["agree"] = agree
            lines.append(
                f"N_{n} (brute force over {ext_field}): affine {brute_ext.n_affine}"
                f"  [{'equal' if agree else 'MISMATCH'}]"
            )
        payload["extension"] = ext_payload

    inputs = {"family": args.family, "p": p, "method": args.method}
    if args.family in ("cubic", "super"):
        inputs["D"] = args.D
    if args.family == "super":
        inputs["d"] = args.d
    if args.ext:
        inputs["ext"] = args.ext
    return lines, payload, inputs


def _field_elt_json(e):
    if hasattr(e, "value"):
        return e.value
    if hasattr(e, "rep") and isinstance(e.rep, QuadraticInteger):
        return element_json(e.rep)
    return list(e.rep.coeffs)


def cmd_zeta(args):
    curve = _build_curve(args)
    if isinstance(curve, SuperellipticProbe):
        raise DomainError("zeta data is computed for the genus-1 families only")
    p = args.p
    a_p = defect(curve, p)
    w = weil_zero(curve, p)
    zd = betti_polynomial(a_p, p, w)
    counts = extension_counts(zd, args.terms)
    uni = args.unicode

    lines = [f"{curve} over F_{p}:"]
    lines.append(f"P(T) = {poly_text(zd.betti_coeffs, 'T')}; P(1) = {projective_count_from_P(zd)}; a_p = {a_p}")
    if w is None:
        lines.append("weil zeros: purely imaginary pair (supersingular, a_p = 0)")
    else:
        lines.append(f"weil zeros: {render(w, uni)} and conjugate {render(w.conj(), uni)}")
    for row in counts:
        lines.append(f"N_{row.n}: affine {row.n_affine}, projective {row.n_projective}")

    payload = {
        "curve": str(curve),
        "p": p,
        "a_p": a_p,
        "P": list(zd.betti_coeffs),
        "P_at_1": projective_count_from_P(zd),
        "weil_zeros": None if w is None else [element_json(w), element_json(w.conj())],
        "counts": [
            {"n": row.n, "affine": row.n_affine, "projective": row.n_projective} for row in counts
        ],
    }
    inputs = {"family": args.family, "p": p}
    if args.family == "cubic":
        inputs["D"] = args.D
    return lines, payload, inputs


def cmd_frobenius(args):
    uni = args.unicode
    if args.kind == "quadratic":
        data = frobenius_quadratic(args.d, args.p)
        inputs = {"kind": "quadratic", "d": args.d, "p": args.p}
    elif args.kind == "lattice":
        data = frobenius_matrix_and_charpoly(_ring_arg(args.ring), args.p)
        inputs = {"kind": "lattice", "ring": args.ring, "p": args.p}
    else:
        residue = artin_map(args.n, args.p)
        lines = [f"Artin map for Q(zeta_{args.n}): Frob_{args.p} = {args.p} mod {args.n} = {residue}"]
        payload = {"n": args.n, "p": args.p, "frobenius_residue": residue}
        return lines, payload, {"kind": "cyclotomic", "n": args.n, "p": args.p}

    lines = [f"Frob_{args.p} in {data.context}: symbol {data.symbol:+d}"]
    lines.append(f"matrix: {list(map(list, data.matrix))}")
    lines.append(f"char poly: {poly_text(data.char_poly_T, 'T')}; u-form {_u_form_text(data.char_poly_u)}")
    payload = {
        "context": str(data.context),
        "p": args.p,
        "symbol": data.symbol,
        "matrix": [list(r) for r in data.matrix],
        "char_poly_T": list(data.char_poly_T),
        "char_poly_u": list(data.char_poly_u),
    }
    return lines, payload, inputs


def _u_form_text(coeffs) -> str:
    # descending rendering of (c0, c1, 1): u^2 + c1 u + c0
    c0, c1, _ = coeffs
    s = "u^2"
    if c1:
        s += f"{c1:+d}u" if abs(c1) != 1 else ("+u" if c1 > 0 else "-u")
    if c0:
        s += f"{c0:+d}"
    return s


def _character_value_text(v, unicode: bool) -> str:
    if isinstance(v, int):
        return str(v)
    if v.is_zero():
        return "0"
    return unit_symbol(v, unicode)


def _character_value_json(v):
    return v if isinstance(v, int) else element_json(v)


def cmd_character(args):
    chi = make_character(args.p, args.m)
    uni = args.unicode
    header = f"chi_{args.m} mod {args.p}"
    if chi.pi is not None:
        header += f" (primary pi = {render(chi.pi, uni)})"
    if args.at is not None:
        value = chi(args.at)
        lines = [f"{header}: chi({args.at}) = {_character_value_text(value, uni)}"]
        payload = {"p": args.p, "m": args.m, "at": args.at, "value": _character_value_json(value)}
    else:
        lines = [header]
        for a, v in chi.table():
            lines.append(f"  chi({a}) = {_character_value_text(v, uni)}")
        payload = {
            "p": args.p,
            "m": args.m,
            "values": [_character_value_json(v) for v in chi.values],
        }
    if chi.pi is not None:
        payload["pi"] = element_json(chi.pi)
    inputs = {"p": args.p, "m": args.m}
    if args.at is not None:
        inputs["at"] = args.at
    return lines, payload, inputs


def cmd_jacobi(args):
    chi = make_character(args.p, args.m1)
    psi = make_character(args.p, args.m2)
    J = jacobi_sum(chi, psi)
    lines = [f"J(chi_{args.m1}, chi_{args.m2}) mod {args.p} = {render(J.value, args.unicode)} (norm {J.norm})"]
    payload = {
        "p": args.p,
        "orders": [args.m1, args.m2],
        "value": element_json(J.value),
        "norm": J.norm,
    }
    return lines, payload, {"p": args.p, "m1": args.m1, "m2": args.m2}


# --- the verify command -------------------------------------------------------

def _verify_rings(rng, lines):
    ok = True
    for ring in Ring:
        for _ in range(1000):
            x = QuadraticInteger(ring, rng.randint(-300, 300), rng.randint(-300, 300))
            y = QuadraticInteger(ring, rng.randint(-300, 300), rng.randint(-300, 300))
            if (x * y).norm() != x.norm() * y.norm():
                ok = False
            if not y.is_zero():
                q, r = divmod(x, y)
                if q * y + r != x or r.norm() >= y.norm():
                    ok = False
    lines.append(f"rings: norm multiplicativity and Euclidean bound on 1000 random pairs per ring: {'ok' if ok else 'FAIL'}")
    return ok


def _verify_splitting(bound, lines):
    ok = True
    top = min(bound, 1000)
    for ring in Ring:
        for p in range(2, top + 1):
            if not is_prime(p):
                continue
            data = splitting_data(ring, p)
            product = QuadraticInteger(ring, 1, 0)
            for q, mult in data.primes_above:
                product = product * q ** mult
            if data.unit * product != p or data.e * data.f * data.g != 2:
                ok = False
    lines.append(f"splitting: factorization and (e,f,g) for p <= {top}, both rings: {'ok' if ok else 'FAIL'}")
    return ok


def _verify_fields(lines):
    ok = True
    for field in (
        make_field(Ring.GAUSSIAN, gaussian(2, 1)),
        make_field(Ring.GAUSSIAN, gaussian(3, 0)),
        make_field(Ring.EISENSTEIN, eisenstein(-1, 3)),
        make_field(Ring.EISENSTEIN, eisenstein(2, 0)),
    ):
        if not verify_field_axioms(field).passed:
            ok = False
    raw = make_raw_quotient(Ring.GAUSSIAN, 5)
    if verify_field_axioms(raw).passed:
        ok = False  # Z[i]/(5) has zero divisors and must fail
    lines.append(f"fields: axioms pass on sample fields, raw Z[i]/(5) fails as expected: {'ok' if ok else 'FAIL'}")
    return ok


def _verify_characters(bound, lines):
    ok = True
    top = min(bound, 100)
    for p in range(3, top + 1):
        if not is_prime(p):
            continue
        for m in (2, 3, 4, 6):
            if (p - 1) % m:
                continue
            chi = make_character(p, m)
            for x in range(1, p):
                for y in range(1, p):
                    if chi(x * y % p) != chi(x) * chi(y):
                        ok = False
    for p in range(5, top + 1):
        if not is_prime(p):
            continue
        for m1, m2 in ((2, 4), (2, 3), (2, 6), (3, 3)):
            if (p - 1) % m1 or (p - 1) % m2:
                continue
            if jacobi_sum(make_character(p, m1), make_character(p, m2)).norm != p:
                ok = False
    lines.append(f"characters: multiplicativity and |J|^2 = p for p <= {top}: {'ok' if ok else 'FAIL'}")
    return ok


def _verify_curves(bound, lines):
    ok = True
    top = min(bound, 200)
    for curve in (CubicTwist(1), CubicTwist(5), QuarticTwist()):
        for p in range(5, top + 1):
            if not is_prime(p):
                continue
            if isinstance(curve, CubicTwist) and (6 * curve.D) % p == 0:
                continue
            brute = count_points_bruteforce(curve, PrimeField(p)).n_affine
            if count_points_character_sum(curve, p).n_affine != brute:
                ok = False
            a_p = defect(curve, p)
            if brute != p - a_p or a_p * a_p > 4 * p:
                ok = False
            w = weil_zero(curve, p)
            if w is not None and (w * w.conj() != p or w.trace() != a_p):
                ok = False
    lines.append(f"curves: three counting methods agree, Hasse and Weil-zero contracts for p <= {top}: {'ok' if ok else 'FAIL'}")
    return ok


def _verify_frobenius(lines):
    ok = True
    for ring in Ring:
        ramified = 2 if ring is Ring.GAUSSIAN else 3
        for p in range(2, 51):
            if not is_prime(p) or p == ramified:
                continue
            for pi, _ in splitting_data(ring, p).primes_above:
                if not verify_lift(ring, p, make_field(ring, pi)):
                    ok = False
        for p in range(2, 201):
            if not is_prime(p) or p == ramified:
                continue
            data = frobenius_matrix_and_charpoly(ring, p)
            split = classify = splitting_data(ring, p).prime_class is PrimeClass.SPLIT
            if data.char_poly_T != ((1, -2, 1) if split else (1, 0, -1)):
                ok = False
    lines.append(f"frobenius: verify_lift for p <= 50 and char-poly types for p <= 200: {'ok' if ok else 'FAIL'}")
    return ok


def _verify_zeta(lines):
    ok = True
    for p, a_p in ((13, 2), (19, -7), (5, 2), (7, 0)):
        if not zeta_series_check(betti_polynomial(a_p, p), 6):
            ok = False
    lines.append(f"zeta: series identity to order 6 on the worked cases: {'ok' if ok else 'FAIL'}")
    return ok


def cmd_verify(args):
    rng = random.Random(args.seed)
    bound = args.bound if args.bound else 200
    lines: list[str] = []
    suites = {
        "rings": lambda: _verify_rings(rng, lines),
        "splitting": lambda: _verify_splitting(bound, lines),
        "fields": lambda: _verify_fields(lines),
        "characters": lambda: _verify_characters(bound, lines),
        "curves": lambda: _verify_curves(bound, lines),
        "frobenius": lambda: _verify_frobenius(lines),
        "zeta": lambda: _verify_zeta(lines),
    }
    selected = suites if args.suite == "all" else {args.suite: suites[args.suite]}
    results = {name: run() for name, run in selected.items()}
    all_ok = all(results.values())
    lines.append(f"verify: {'all suites ok' if all_ok else 'FAILURES detected'}")
    payload = {"suites": results, "ok": all_ok}
    return lines, payload, {"suite": args.suite, "seed": args.seed, "bound": bound}, (0 if all_ok else 1)


# --- parser and dispatch ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")
    common.add_argument("--unicode", action="store_true", help="render the Eisenstein generator as a Greek omega")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized property subsets")
    common.add_argument("--bound", type=int, default=10 ** 6, help="enumeration cap")

    parser = argparse.ArgumentParser(
        prog="quadfields",
        description="Exact arithmetic in Z[i] and Z[w]: prime splitting, lattice residue fields, "
        "residue characters, Jacobi sums, point counts and zeta data.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_factor = sub.add_parser("factor", parents=[common], help="factor a rational prime in a quadratic ring")
    p_factor.add_argument("--ring", required=True, choices=["gaussian", "eisenstein"])
    p_factor.add_argument("p", type=int)
    p_factor.set_defaults(handler=cmd_factor)

    p_field = sub.add_parser("field", parents=[common], help="build and display a lattice residue field")
    p_field.add_argument("ring", choices=["gaussian", "eisenstein"])
    p_field.add_argument("modulus", help='prime element, e.g. "2+i", "-1+3w", "3"')
    p_field.add_argument("--table", choices=["add", "mul"], help="print the full operation table")
    p_field.add_argument("--lattice", action="store_true", help="also show pi/conj(pi) coordinates")
    p_field.set_defaults(handler=cmd_field)

    for name, handler in (("count", cmd_count), ("zeta", cmd_zeta)):
        sp = sub.add_parser(name, parents=[common], help=f"{name} for the curve families")
        sp.add_argument("family", choices=["cubic", "quartic", "super"])
        sp.add_argument("-D", type=int, default=1, help="constant term (cubic/super)")
        sp.add_argument("-d", type=int, help="degree of the probe family")
        sp.add_argument("-p", type=int, required=True)
        if name == "count":
            sp.add_argument("--method", choices=["brute", "char", "closed", "all"], default="all")
            sp.add_argument("--ext", type=int, help="also count over F_{p^n}")
            sp.add_argument("--points", action="store_true", help="list the affine points")
        else:
            sp.add_argument("--terms", type=int, default=3, help="extension counts to print")
        sp.set_defaults(handler=handler)

    p_frob = sub.add_parser("frobenius", parents=[common], help="Frobenius elements and the Artin map")
    frob_sub = p_frob.add_subparsers(dest="kind", required=True)
    fq = frob_sub.add_parser("quadratic", parents=[common])
    fq.add_argument("-d", type=int, required=True, help="squarefree d of Q(sqrt(d))")
    fq.add_argument("-p", type=int, required=True)
    fc = frob_sub.add_parser("cyclotomic", parents=[common])
    fc.add_argument("-n", type=int, required=True)
    fc.add_argument("-p", type=int, required=True)
    fl = frob_sub.add_parser("lattice", parents=[common])
    fl.add_argument("ring", choices=["gaussian", "eisenstein"])
    fl.add_argument("-p", type=int, required=True)
    for x in (fq, fc, fl):
        x.set_defaults(handler=cmd_frobenius)

    p_char = sub.add_parser("character", parents=[common], help="residue character values")
    p_char.add_argument("-p", type=int, required=True)
    p_char.add_argument("-m", type=int, required=True, choices=[2, 3, 4, 6])
    p_char.add_argument("--at", type=int, help="evaluate at a single residue")
    p_char.set_defaults(handler=cmd_character)

    p_jac = sub.add_parser("jacobi", parents=[common], help="exact Jacobi sum")
    p_jac.add_argument("-p", type=int, required=True)
    p_jac.add_argument("-m1", type=int, required=True, choices=[2, 3, 4, 6])
    p_jac.add_argument("-m2", type=int, required=True, choices=[2, 3, 4, 6])
    p_jac.set_defaults(handler=cmd_jacobi)

    p_verify = sub.add_parser("verify", parents=[common], help="run the property suites")
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=["all", "rings", "splitting", "fields", "characters", "curves", "frobenius", "zeta"],
    )
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3

    if len(outcome) == 4:
        lines, payload, inputs, code = outcome
    else:
        lines, payload, inputs = outcome
        code = 0
    if args.json:
        envelope = {
            "command": args.command,
            "format_version": FORMAT_VERSION,
            "inputs": inputs,
            "result": payload,
        }
        print(json.dumps(envelope, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
