import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from appowers.errors import WindowCapError
from appowers.poly import Poly, difference_quotient, parse_poly, preimage_range

small_polys = st.lists(st.integers(min_value=-100, max_value=100),
                       min_size=2, max_size=6).filter(lambda c: c[-1] != 0)


class TestPoly:
    def test_normalization(self):
        assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
        assert Poly(()).degree == -1
        assert Poly((0, 0)).degree == -1

    @pytest.mark.parametrize("coeffs,t,want", [
        ((0, 0, 1), 7, 49),            # t^2
        ((0, -1, 0, 1), 2, 6),         # t^3 - t
        ((1, 3, 2), -4, 21),           # 2t^2 + 3t + 1, by hand
    ])
    def test_eval_examples(self, coeffs, t, want):
        assert Poly(coeffs)(t) == want

    def test_monomial(self):
        assert Poly.monomial(3).coeffs == (0, 0, 0, 1)
        assert Poly.monomial(3).is_monic_monomial
        assert not Poly((0, 0, 2)).is_monic_monomial
        assert not Poly((1, 0, 1)).is_monic_monomial

    def test_parse(self):
        assert parse_poly("1,0,2").coeffs == (1, 0, 2)
        assert parse_poly(" 5 ").coeffs == (5,)
        with pytest.raises(ValueError):
            parse_poly("1,x")
        with pytest.raises(ValueError):
            parse_poly("")


class TestDifferenceQuotient:
    @pytest.mark.parametrize("coeffs,t0,want", [
        ((0, 0, 0, 1), 2, (4, 2, 1)),      # t^3 at 2 -> t^2 + 2t + 4
        ((0, 0, 1), 1, (1, 1)),            # t^2 at 1 -> t + 1
        ((5, -2, 0, 1), -1, (-1, -1, 1)),  # checked: (t+1)(t^2-t-1) = t^3-2t-1
    ])
    def test_examples(self, coeffs, t0, want):
        assert difference_quotient(Poly(coeffs), t0).coeffs == want

    def test_rejects_constant(self):
        with pytest.raises(ValueError):
            difference_quotient(Poly((5,)), 0)
        with pytest.raises(ValueError):
            difference_quotient(Poly(()), 0)

    @given(small_polys, st.integers(min_value=-50, max_value=50),
           st.integers(min_value=-50, max_value=50))
    @settings(max_examples=300)
    def test_identity(self, coeffs, t0, t):
        P = Poly(tuple(coeffs))
        Q = difference_quotient(P, t0)
        assert Q.degree == P.degree - 1
        assert P(t) - P(t0) == (t - t0) * Q(t)


class TestPreimageRange:
    @pytest.mark.parametrize("coeffs,lo,hi,want", [
        ((0, 0, 1), 2, 101, list(range(-10, -1)) + list(range(2, 11))),
        ((0, 0, 0, 1), -8, 8, [-2, -1, 0, 1, 2]),
        ((1, 2), 1, 9, [0, 1, 2, 3, 4]),
    ])
    def test_examples(self, coeffs, lo, hi, want):
        assert preimage_range(Poly(coeffs), lo, hi, 10 ** 6) == want

    def test_cap(self):
        with pytest.raises(WindowCapError):
            preimage_range(Poly((0, 1)), 0, 10 ** 9, 100)
        with pytest.raises(WindowCapError):
            preimage_range(Poly.monomial(2), 0, 10 ** 9, 100)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            preimage_range(Poly((7,)), 0, 10, 100)
        with pytest.raises(ValueError):
            preimage_range(Poly.monomial(2), 5, 4, 100)

    @given(small_polys, st.integers(min_value=-2000, max_value=2000),
           st.integers(min_value=0, max_value=4000))
    @settings(max_examples=200)
    def test_matches_brute_force(self, coeffs, lo, width):
        P = Poly(tuple(coeffs))
        if P.degree < 1:
            return
        hi = lo + width
        got = preimage_range(P, lo, hi, 10 ** 4)
        want = [t for t in range(-10 ** 4, 10 ** 4 + 1) if lo <= P(t) <= hi]
        assert got == want
