import pytest

from quadfields.rings import DomainError, Ring, eisenstein, from_int, gaussian, is_primary
from quadfields.splitting import (
    PrimeClass,
    classify_prime,
    is_prime,
    prime_above,
    splitting_data,
)


def primes_up_to(n):
    return [p for p in range(2, n + 1) if is_prime(p)]


class TestClassification:
    @pytest.mark.parametrize(
        "ring,p,expected",
        [
            (Ring.GAUSSIAN, 5, PrimeClass.SPLIT),
            (Ring.GAUSSIAN, 3, PrimeClass.INERT),
            (Ring.GAUSSIAN, 2, PrimeClass.RAMIFIED),
            (Ring.GAUSSIAN, 13, PrimeClass.SPLIT),
            (Ring.GAUSSIAN, 7, PrimeClass.INERT),
            (Ring.EISENSTEIN, 13, PrimeClass.SPLIT),
            (Ring.EISENSTEIN, 19, PrimeClass.SPLIT),
            (Ring.EISENSTEIN, 5, PrimeClass.INERT),
            (Ring.EISENSTEIN, 2, PrimeClass.INERT),
            (Ring.EISENSTEIN, 3, PrimeClass.RAMIFIED),
        ],
    )
    def test_examples(self, ring, p, expected):
        assert classify_prime(ring, p) == expected

    def test_composite_rejected(self):
        with pytest.raises(DomainError):
            classify_prime(Ring.GAUSSIAN, 4)
        with pytest.raises(DomainError):
            classify_prime(Ring.EISENSTEIN, 1)


class TestPrimeAbove:
    def test_worked_values(self):
        assert prime_above(Ring.EISENSTEIN, 13) == eisenstein(-1, 3)
        assert prime_above(Ring.EISENSTEIN, 19) == eisenstein(5, 3)
        assert prime_above(Ring.GAUSSIAN, 5) == gaussian(-1, 2)

    def test_inert_and_ramified(self):
        assert prime_above(Ring.GAUSSIAN, 7) == 7
        assert prime_above(Ring.GAUSSIAN, 2) == gaussian(1, 1)
        assert prime_above(Ring.EISENSTEIN, 3) == eisenstein(1, -1)

    def test_split_results_are_primary(self):
        for ring in Ring:
            residue = 4 if ring is Ring.GAUSSIAN else 3
            for p in primes_up_to(500):
                if p % residue == 1:
                    pi = prime_above(ring, p)
                    assert is_primary(pi)
                    assert pi.norm() == p


class TestSplittingData:
    def test_gaussian_ramified(self):
        data = splitting_data(Ring.GAUSSIAN, 2)
        assert data.prime_class == PrimeClass.RAMIFIED
        assert data.primes_above == ((gaussian(1, 1), 2),)
        assert (data.e, data.f, data.g) == (2, 1, 1)
        assert data.unit == gaussian(0, -1)  # 2 = -i * (1+i)^2

    def test_gaussian_inert(self):
        data = splitting_data(Ring.GAUSSIAN, 7)
        assert data.prime_class == PrimeClass.INERT
        assert data.primes_above == ((gaussian(7, 0), 1),)
        assert data.f == 2

    def test_eisenstein_split(self):
        data = splitting_data(Ring.EISENSTEIN, 19)
        assert data.primes_above == ((eisenstein(5, 3), 1), (eisenstein(2, -3), 1))
        # conj(5+3w) = 2-3w equals 5+3w^2
        w = eisenstein(0, 1)
        assert eisenstein(5, 0) + 3 * w * w == eisenstein(2, -3)

    @pytest.mark.parametrize("ring", list(Ring))
    def test_sweep_invariants(self, ring):
        for p in primes_up_to(1000):
            data = splitting_data(ring, p)
            assert data.e * data.f * data.g == 2
            product = from_int(ring, 1)
            for q, mult in data.primes_above:
                product = product * q ** mult
            assert data.unit * product == p
            assert prime_above(ring, p).norm() == p ** data.f
