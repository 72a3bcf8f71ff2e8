import random

import pytest

from quadfields.frobenius import (
    Cyclotomic,
    QuadraticField,
    artin_map,
    frobenius_lift_apply,
    frobenius_matrix_and_charpoly,
    frobenius_quadratic,
    verify_lift,
)
from quadfields.lattice_field import make_field
from quadfields.rings import DomainError, QuadraticInteger, Ring, eisenstein, gaussian
from quadfields.splitting import PrimeClass, classify_prime, is_prime, prime_above, splitting_data


class TestQuadraticFrobenius:
    def test_split_case(self):
        data = frobenius_quadratic(-1, 13)
        assert data.symbol == 1
        assert data.matrix == ((1, 0), (0, 1))
        assert data.char_poly_T == (1, -2, 1)  # (1-T)^2
        assert data.char_poly_u == (1, -2, 1)  # u^2 - 2u + 1

    def test_inert_case(self):
        data = frobenius_quadratic(-1, 7)
        assert data.symbol == -1
        assert data.matrix == ((1, 0), (0, -1))
        assert data.char_poly_T == (1, 0, -1)  # 1 - T^2
        assert data.char_poly_u == (-1, 0, 1)  # u^2 - 1

    def test_eisenstein_cross_check(self):
        # 7 = 1 (mod 3) splits in Z[w], matching (d=-3/p=7) = +1
        data = frobenius_quadratic(-3, 7)
        assert data.symbol == 1
        assert classify_prime(Ring.EISENSTEIN, 7) == PrimeClass.SPLIT

    def test_ramified_rejected(self):
        with pytest.raises(DomainError, match="ramifies"):
            frobenius_quadratic(-5, 5)

    def test_non_squarefree_rejected(self):
        with pytest.raises(DomainError, match="squarefree"):
            QuadraticField(12)
        with pytest.raises(DomainError):
            QuadraticField(1)


class TestLift:
    def test_gaussian_split_identity(self):
        z = gaussian(2, 3)
        assert frobenius_lift_apply(Ring.GAUSSIAN, 13, z) == z

    def test_gaussian_inert_conjugation(self):
        assert frobenius_lift_apply(Ring.GAUSSIAN, 7, gaussian(2, 3)) == gaussian(2, -3)

    def test_eisenstein_inert_conjugation(self):
        assert frobenius_lift_apply(Ring.EISENSTEIN, 5, eisenstein(1, 1)) == eisenstein(0, -1)

    def test_ramified_rejected(self):
        with pytest.raises(DomainError):
            frobenius_lift_apply(Ring.GAUSSIAN, 2, gaussian(1, 0))
        with pytest.raises(DomainError):
            frobenius_lift_apply(Ring.EISENSTEIN, 3, eisenstein(1, 0))

    @pytest.mark.parametrize("ring,p", [(Ring.GAUSSIAN, 13), (Ring.GAUSSIAN, 7), (Ring.EISENSTEIN, 7), (Ring.EISENSTEIN, 5)])
    def test_is_ring_automorphism(self, ring, p):
        rng = random.Random(4)
        frob = lambda z: frobenius_lift_apply(ring, p, z)
        for _ in range(500):
            x = QuadraticInteger(ring, rng.randint(-99, 99), rng.randint(-99, 99))
            y = QuadraticInteger(ring, rng.randint(-99, 99), rng.randint(-99, 99))
            assert frob(x + y) == frob(x) + frob(y)
            assert frob(x * y) == frob(x) * frob(y)

    @pytest.mark.parametrize("ring,p,split", [(Ring.GAUSSIAN, 13, True), (Ring.GAUSSIAN, 7, False), (Ring.EISENSTEIN, 5, False)])
    def test_involution_or_identity(self, ring, p, split):
        z = QuadraticInteger(ring, 4, -9)
        once = frobenius_lift_apply(ring, p, z)
        twice = frobenius_lift_apply(ring, p, once)
        if split:
            assert once == z
        else:
            assert once != z and twice == z


class TestVerifyLift:
    def test_f9(self):
        field = make_field(Ring.GAUSSIAN, gaussian(3, 0))
        assert verify_lift(Ring.GAUSSIAN, 3, field)

    def test_f13_gaussian(self):
        field = make_field(Ring.GAUSSIAN, gaussian(3, 2))
        assert verify_lift(Ring.GAUSSIAN, 13, field)

    def test_f25_eisenstein(self):
        field = make_field(Ring.EISENSTEIN, eisenstein(5, 0))
        assert verify_lift(Ring.EISENSTEIN, 5, field)

    def test_mismatched_field(self):
        field = make_field(Ring.GAUSSIAN, gaussian(3, 0))
        with pytest.raises(DomainError):
            verify_lift(Ring.GAUSSIAN, 7, field)

    def test_exhaustive_small_sweep(self):
        # every prime p <= 50, every prime above p, both rings
        for ring in Ring:
            ramified = 2 if ring is Ring.GAUSSIAN else 3
            for p in range(2, 51):
                if not is_prime(p) or p == ramified:
                    continue
                data = splitting_data(ring, p)
                for pi, _ in data.primes_above:
                    assert verify_lift(ring, p, make_field(ring, pi)), (ring, p, pi)


class TestArtin:
    @pytest.mark.parametrize("n,p,expected", [(4, 7, 3), (4, 13, 1), (12, 7, 7), (3, 5, 2)])
    def test_values(self, n, p, expected):
        assert artin_map(n, p) == expected

    def test_ramified_rejected(self):
        with pytest.raises(DomainError, match="ramified"):
            artin_map(4, 2)

    def test_multiplicative_across_primes(self):
        for n in (4, 5, 12):
            primes = [p for p in range(2, 60) if is_prime(p) and n % p != 0]
            for p in primes:
                for q in primes:
                    assert artin_map(n, p) * artin_map(n, q) % n == (p * q) % n


class TestMatrixAndCharpoly:
    def test_gaussian_split(self):
        data = frobenius_matrix_and_charpoly(Ring.GAUSSIAN, 13)
        assert data.matrix == ((1, 0), (0, 1))
        assert data.char_poly_T == (1, -2, 1)

    def test_gaussian_inert(self):
        data = frobenius_matrix_and_charpoly(Ring.GAUSSIAN, 7)
        assert data.matrix == ((1, 0), (0, -1))
        assert data.char_poly_T == (1, 0, -1)

    def test_eisenstein_inert(self):
        data = frobenius_matrix_and_charpoly(Ring.EISENSTEIN, 5)
        assert data.matrix == ((1, -1), (0, -1))
        assert data.char_poly_T == (1, 0, -1)  # trace 0, det -1

    def test_matrix_squares_to_identity(self):
        for ring in Ring:
            for p in (5, 7, 11, 13):
                if (ring, p) in ((Ring.EISENSTEIN, 3),):
                    continue
                m = frobenius_matrix_and_charpoly(ring, p).matrix
                sq = _matmul(m, m)
                assert sq == ((1, 0), (0, 1))

    def test_matrix_realizes_the_lift(self):
        rng = random.Random(8)
        for ring in Ring:
            ramified = 2 if ring is Ring.GAUSSIAN else 3
            for p in (5, 7, 11, 13, 19):
                if p == ramified:
                    continue
                m = frobenius_matrix_and_charpoly(ring, p).matrix
                for _ in range(50):
                    z = QuadraticInteger(ring, rng.randint(-20, 20), rng.randint(-20, 20))
                    image = frobenius_lift_apply(ring, p, z)
                    assert image.a == m[0][0] * z.a + m[0][1] * z.b
                    assert image.b == m[1][0] * z.a + m[1][1] * z.b

    def test_factorization_type_matches_splitting_sweep(self):
        for ring in Ring:
            ramified = 2 if ring is Ring.GAUSSIAN else 3
            for p in range(2, 201):
                if not is_prime(p) or p == ramified:
                    continue
                data = frobenius_matrix_and_charpoly(ring, p)
                split = classify_prime(ring, p) == PrimeClass.SPLIT
                # (1-T)(1 - symbol*T): (1-T)^2 for split, 1-T^2 for inert
                assert data.char_poly_T == ((1, -2, 1) if split else (1, 0, -1))
                assert data.symbol == (1 if split else -1)

    def test_cyclotomic_context_validation(self):
        with pytest.raises(DomainError):
            Cyclotomic(2)


def _matmul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )
