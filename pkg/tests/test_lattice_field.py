import random
from fractions import Fraction

import pytest

from quadfields.lattice_field import (
    lattice_coordinates,
    make_field,
    make_raw_quotient,
    unit_residue_lookup,
    verify_field_axioms,
)
from quadfields.rings import DomainError, Ring, ResourceError, eisenstein, gaussian


@pytest.fixture
def f5():
    return make_field(Ring.GAUSSIAN, gaussian(2, 1))


@pytest.fixture
def f9():
    return make_field(Ring.GAUSSIAN, gaussian(3, 0))


@pytest.fixture
def f13():
    return make_field(Ring.EISENSTEIN, eisenstein(-1, 3))


class TestConstruction:
    def test_split_modulus(self, f5):
        assert (f5.p, f5.f, f5.q) == (5, 1, 5)

    def test_inert_modulus(self, f9):
        assert (f9.p, f9.f, f9.q) == (3, 2, 9)

    def test_non_prime_rejected(self):
        with pytest.raises(DomainError, match="not prime"):
            make_field(Ring.GAUSSIAN, gaussian(4, 0))
        with pytest.raises(DomainError, match="not prime"):
            make_field(Ring.GAUSSIAN, gaussian(5, 0))

    def test_ramified_rejected(self):
        with pytest.raises(DomainError, match="ramified"):
            make_field(Ring.GAUSSIAN, gaussian(1, 1))
        with pytest.raises(DomainError, match="ramified"):
            make_field(Ring.EISENSTEIN, eisenstein(1, -1))


class TestReduce:
    def test_i_mod_2_plus_i(self, f5):
        assert f5.reduce(gaussian(0, 1)) == f5.from_int(3)

    def test_coordinatewise_inert(self, f9):
        assert f9.reduce(gaussian(0, -1)).rep == gaussian(0, 2)

    def test_omega_mod_13(self, f13):
        assert f13.reduce(eisenstein(0, 1)) == f13.from_int(9)

    def test_prime_field_bijection(self, f5):
        images = {f5.from_int(r) for r in range(5)}
        assert len(images) == 5

    def test_reduce_is_homomorphism(self, f13):
        rng = random.Random(99)
        for _ in range(200):
            x = eisenstein(rng.randint(-100, 100), rng.randint(-100, 100))
            y = eisenstein(rng.randint(-100, 100), rng.randint(-100, 100))
            assert f13.reduce(x + y) == f13.reduce(x) + f13.reduce(y)
            assert f13.reduce(x * y) == f13.reduce(x) * f13.reduce(y)


class TestArithmetic:
    def test_square_in_f9(self, f9):
        x = f9.reduce(gaussian(1, 1))
        assert (x * x).rep == gaussian(0, 2)

    def test_inverse_in_f5(self, f5):
        assert f5.from_int(2).inverse() == f5.from_int(3)

    def test_pow_in_f9(self, f9):
        i = f9.reduce(gaussian(0, 1))
        assert i ** 4 == f9.one

    def test_zero_inverse_rejected(self, f5):
        with pytest.raises(DomainError, match="zero has no inverse"):
            f5.zero.inverse()

    def test_all_inverses(self, f9):
        for x in f9.elements():
            if not x.is_zero():
                assert x * x.inverse() == f9.one


class TestEnumeration:
    def test_f5_is_the_integers_mod_5(self, f5):
        assert [e.rep.a for e in f5.elements()] == [0, 1, 2, 3, 4]
        assert all(e.rep.b == 0 for e in f5.elements())

    def test_f9_grid(self, f9):
        elems = f9.elements()
        assert len(elems) == 9
        assert {(e.rep.a, e.rep.b) for e in elems} == {(a, b) for a in range(3) for b in range(3)}

    def test_f25(self):
        field = make_field(Ring.EISENSTEIN, eisenstein(5, 0))
        assert len(field.elements()) == 25

    def test_bound(self, f9):
        with pytest.raises(ResourceError):
            f9.elements(bound=5)


class TestFrobenius:
    def test_conjugation_on_f9(self, f9):
        i = f9.reduce(gaussian(0, 1))
        assert f9.frobenius(i).rep == gaussian(0, 2)

    def test_prime_subfield_fixed(self, f9):
        assert f9.frobenius(f9.from_int(2)) == f9.from_int(2)

    def test_identity_on_prime_field(self, f5):
        for x in f5.elements():
            assert f5.frobenius(x) == x

    def test_is_automorphism_of_order_f(self, f9):
        elems = f9.elements()
        for x in elems:
            for y in elems:
                assert f9.frobenius(x + y) == f9.frobenius(x) + f9.frobenius(y)
                assert f9.frobenius(x * y) == f9.frobenius(x) * f9.frobenius(y)
        twice = [f9.frobenius(f9.frobenius(x)) for x in elems]
        assert twice == elems
        fixed = [x for x in elems if f9.frobenius(x) == x]
        assert len(fixed) == f9.p


class TestGenerator:
    def test_f5_generator(self, f5):
        assert f5.multiplicative_generator() == f5.from_int(2)

    def test_f9_generator(self, f9):
        g = f9.multiplicative_generator()
        assert g.rep == gaussian(1, 1)
        powers = {g ** k for k in range(1, 9)}
        assert len(powers) == 8

    def test_defining_property(self, f13):
        g = f13.multiplicative_generator()
        n = f13.q - 1
        assert g ** n == f13.one
        for ell in (2, 3):
            assert g ** (n // ell) != f13.one


class TestUnitResidueLookup:
    def test_sextic_residue(self, f13):
        # 4^((13-1)/6) = 16 = 3, and w^2 = 3 (mod -1+3w)
        assert unit_residue_lookup(f13, f13.from_int(3), 6) == eisenstein(-1, -1)

    def test_quartic_residue(self):
        field = make_field(Ring.GAUSSIAN, gaussian(-1, 2))
        assert unit_residue_lookup(field, field.from_int(2), 4) == gaussian(0, -1)

    def test_identity(self, f13):
        assert unit_residue_lookup(f13, f13.one, 6) == eisenstein(1, 0)

    def test_non_residue_rejected(self, f13):
        with pytest.raises(DomainError, match="not a root-of-unity residue"):
            unit_residue_lookup(f13, f13.from_int(2), 6)

    def test_wrong_ring_order(self, f5):
        field = make_field(Ring.GAUSSIAN, gaussian(2, 1))
        with pytest.raises(DomainError):
            unit_residue_lookup(field, field.one, 3)


class TestAxioms:
    def test_f5_passes(self, f5):
        report = verify_field_axioms(f5)
        assert report.passed

    def test_f9_passes(self, f9):
        report = verify_field_axioms(f9)
        assert report.passed

    def test_raw_z5_quotient_fails(self):
        raw = make_raw_quotient(Ring.GAUSSIAN, 5)
        assert len(raw.elements()) == 25
        # 5 = (2+i)(2-i) gives zero divisors
        zd = raw.reduce(gaussian(2, 1)) * raw.reduce(gaussian(2, -1))
        assert zd == raw.zero
        report = verify_field_axioms(raw)
        assert not report.passed
        assert "inverse" in report.failures[0]

    def test_bound_enforced(self):
        field = make_field(Ring.GAUSSIAN, gaussian(11, 0))
        with pytest.raises(ResourceError):
            verify_field_axioms(field, bound=100)


class TestLatticeCoordinates:
    def test_exact_combination(self, f5):
        pi = f5.modulus
        for x in f5.elements():
            a, b = lattice_coordinates(f5, x)
            za = a * pi.a + b * pi.conj().a
            zb = a * pi.b + b * pi.conj().b
            assert za == Fraction(x.rep.a) and zb == Fraction(x.rep.b)

    def test_inert_rejected(self, f9):
        with pytest.raises(DomainError):
            lattice_coordinates(f9, f9.one)
