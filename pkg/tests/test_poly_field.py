import pytest

from quadfields.lattice_field import make_field, verify_field_axioms
from quadfields.poly_field import (
    PrimeField,
    defining_polynomial,
    evaluate,
    find_isomorphism,
    find_roots,
    is_irreducible,
    make_poly_field,
    parse_poly,
    poly,
    render_poly,
)
from quadfields.rings import DomainError, Ring, gaussian
from quadfields.splitting import PrimeClass, classify_prime, is_prime


@pytest.fixture
def L9():
    # F_3[x]/(x^2+x+2), the textbook presentation of F_9
    return make_poly_field(poly(3, 2, 1, 1))


class TestPolyArithmetic:
    def test_mul_identity(self):
        f = poly(3, 2, 1, 1)
        assert f * poly(3, 1) == f

    def test_divrem(self):
        q, r = divmod(poly(3, 0, 0, 1), poly(3, 2, 1, 1))
        assert q == poly(3, 1)
        assert r == poly(3, 1, 2)  # x^2 = 2x+1 (mod x^2+x+2)

    def test_additive_inverse(self):
        assert (poly(3, 1, 1) + poly(3, 2, 2)).is_zero()

    def test_divrem_contract(self):
        f = poly(5, 3, 1, 4, 2)
        g = poly(5, 1, 2)
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            divmod(poly(3, 1), poly(3))

    def test_characteristic_mismatch(self):
        with pytest.raises(DomainError):
            poly(3, 1) + poly(5, 1)


class TestIrreducibility:
    def test_examples(self):
        assert is_irreducible(poly(3, 2, 1, 1))      # x^2+x+2 over F_3
        assert is_irreducible(poly(3, 1, 0, 1))      # x^2+1 over F_3
        assert not is_irreducible(poly(5, 1, 0, 1))  # x^2+1 = (x+2)(x+3) over F_5

    def test_degree_three_and_four(self):
        assert is_irreducible(poly(2, 1, 1, 0, 1))       # x^3+x+1 over F_2
        assert not is_irreducible(poly(2, 0, 0, 0, 0, 1))  # x^4

    def test_split_inert_correspondence(self):
        # x^2+1 factors mod p exactly when p splits in Z[i]; same for
        # x^2+x+1 and Z[w]
        for p in range(3, 201):
            if not is_prime(p):
                continue
            split = classify_prime(Ring.GAUSSIAN, p) == PrimeClass.SPLIT
            assert split == (not is_irreducible(poly(p, 1, 0, 1)))
            if p != 3:
                split_w = classify_prime(Ring.EISENSTEIN, p) == PrimeClass.SPLIT
                assert split_w == (not is_irreducible(poly(p, 1, 1, 1)))


class TestPolyField:
    def test_nine_elements(self, L9):
        elems = L9.elements()
        assert len(elems) == 9
        assert [str(e) for e in elems] == [
            "0", "1", "2",
            "θ", "θ+1", "θ+2",
            "2θ", "2θ+1", "2θ+2",
        ]

    def test_other_root_of_modulus(self, L9):
        other = L9.reduce(poly(3, 2, 2))  # 2*theta + 2
        assert evaluate(L9.modulus, other).is_zero()

    def test_theta_squared(self, L9):
        theta = L9.generator
        assert (theta * theta).rep == poly(3, 1, 2)  # 2theta+1

    def test_axioms(self, L9):
        assert verify_field_axioms(L9).passed

    def test_inverses(self, L9):
        for x in L9.elements():
            if not x.is_zero():
                assert (x * x.inverse()) == L9.one

    def test_reducible_modulus_rejected(self):
        with pytest.raises(DomainError, match="reducible"):
            make_poly_field(poly(5, 1, 0, 1))

    def test_degree_one_rejected(self):
        with pytest.raises(DomainError, match="degree"):
            make_poly_field(poly(5, 3, 1))

    def test_non_monic_rejected(self):
        with pytest.raises(DomainError, match="monic"):
            make_poly_field(poly(3, 1, 0, 2))


class TestPrimeField:
    def test_basicops(self):
        F = PrimeField(7)
        assert (F.from_int(3) * F.from_int(5)).value == 1
        assert F.from_int(3).inverse().value == 5
        assert len(F.elements()) == 7
        assert verify_field_axioms(F).passed


class TestRoots:
    def test_roots_in_own_quotient(self, L9):
        roots = find_roots(L9.modulus, L9)
        assert [str(r) for r in roots] == ["θ", "2θ+2"]

    def test_square_roots_of_minus_one_in_f9(self):
        K = make_field(Ring.GAUSSIAN, gaussian(3, 0))
        roots = find_roots(poly(3, 1, 0, 1), K)
        assert [r.rep for r in roots] == [gaussian(0, 1), gaussian(0, 2)]

    def test_roots_in_prime_field(self):
        roots = find_roots(poly(5, 1, 0, 1), PrimeField(5))
        assert [r.value for r in roots] == [2, 3]


class TestIsomorphism:
    def test_same_defining_polynomial(self):
        A = make_field(Ring.GAUSSIAN, gaussian(3, 0))
        B = make_poly_field(poly(3, 1, 0, 1))
        iso = find_isomorphism(A, B)
        assert iso.count == 2
        assert iso(A.reduce(gaussian(0, 1))) == iso.root
        # theta is the canonical (smallest) root
        assert iso.root == B.generator

    def test_different_presentations_of_f9(self, L9):
        A = make_field(Ring.GAUSSIAN, gaussian(3, 0))
        iso = find_isomorphism(A, L9)
        assert iso.count == 2
        img_i = iso(A.reduce(gaussian(0, 1)))
        assert evaluate(defining_polynomial(Ring.GAUSSIAN, 3), img_i).is_zero()
        # full homomorphism + bijection spot check
        elems = A.elements()
        assert len({iso(x) for x in elems}) == 9
        for x in elems:
            for y in elems:
                assert iso(x + y) == iso(x) + iso(y)
                assert iso(x * y) == iso(x) * iso(y)

    def test_frobenius_commutes(self, L9):
        A = make_field(Ring.GAUSSIAN, gaussian(3, 0))
        iso = find_isomorphism(A, L9)
        for x in A.elements():
            assert iso(A.frobenius(x)) == L9.frobenius(iso(x))

    def test_size_mismatch(self, L9):
        A = make_field(Ring.GAUSSIAN, gaussian(2, 1))
        with pytest.raises(DomainError):
            find_isomorphism(A, L9)


class TestRendering:
    @pytest.mark.parametrize(
        "f,text",
        [
            (poly(3, 2, 1, 1), "x^2+x+2"),
            (poly(3, 1, 2), "2x+1"),
            (poly(7, 0, 0, 1), "x^2"),
            (poly(3), "0"),
            (poly(5, 4), "4"),
        ],
    )
    def test_render(self, f, text):
        assert render_poly(f) == text

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("x^2+x+2", poly(3, 2, 1, 1)),
            ("2 + 1*x + 1*x^2", poly(3, 2, 1, 1)),
            ("2x+1", poly(3, 1, 2)),
            ("x^2-1", poly(3, 2, 0, 1)),
            ("7", poly(3, 1)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_poly(3, text) == expected

    def test_parse_error(self):
        with pytest.raises(DomainError):
            parse_poly(3, "x^^2")
