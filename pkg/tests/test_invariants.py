from fractions import Fraction

import pytest

from contactsurg.invariants import (
    D3Result,
    NonTorsionEulerClassError,
    c_squared,
    d3,
    d3_spectrum,
    euler_char,
)
from contactsurg.surgery import IntersectionForm, LegendrianData


def form(q, l, r=None):
    f = IntersectionForm(tuple(tuple(row) for row in q), l)
    return f.with_rotation(r) if r is not None else f


class TestEulerChar:
    def test_values(self):
        assert euler_char(form([[0, -1], [-1, 0]], 2)) == 3
        assert euler_char(IntersectionForm((), 0)) == 1  # no surgeries: the ball


class TestCSquared:
    def test_zero_vector(self):
        assert c_squared(form([[0, -1], [-1, 0]], 2, (0, 0))) == 0

    def test_single_negative_generator(self):
        assert c_squared(form([[-2]], 1, (2,))) == Fraction(-2)
        assert c_squared(form([[-2]], 1, (0,))) == 0

    def test_singular_is_an_error(self):
        with pytest.raises(NonTorsionEulerClassError):
            c_squared(form([[1, 1], [1, 1]], 0, (1, 0)))


class TestD3:
    def test_half_surgeries(self):
        res = d3(form([[0, -1], [-1, 0]], 2, (0, 0)))
        assert (res.chi, res.sigma, res.c_squared, res.l) == (3, 0, 0, 2)
        assert res.d3 == 1
        res = d3(form([[0, -1], [-1, -4]], 1, (0, 2)))
        assert res.d3 == 0

    def test_identity_between_fields(self):
        res = d3(form([[-2]], 1, (2,)))
        assert 4 * (res.d3 - res.l) + 3 * res.sigma + 2 * (res.chi - 1) == res.c_squared

    def test_inconsistent_result_rejected(self):
        with pytest.raises(ValueError):
            D3Result(chi=3, sigma=0, c_squared=Fraction(0), l=2, d3=Fraction(7))

    def test_permutation_invariance(self):
        q = [[0, -1, 0], [-1, -3, -1], [0, -1, -2]]
        r = (0, 1, 0)
        base = d3(form(q, 1, r)).d3
        perm = [2, 0, 1]
        q2 = [[q[perm[i]][perm[j]] for j in range(3)] for i in range(3)]
        r2 = tuple(r[p] for p in perm)
        assert d3(form(q2, 1, r2)).d3 == base

    def test_json_is_exact(self):
        res = d3(form([[-2]], 1, (2,)))
        data = res.to_json()
        assert data["d3"] == "3/4"
        assert data["c_squared"] == "-2"


class TestSpectra:
    def test_worked_values(self):
        L1 = LegendrianData(-1, 0)
        assert d3_spectrum(L1, Fraction(-1, 2)) == {Fraction(1)}
        assert d3_spectrum(L1, Fraction(1, 2)) == {Fraction(0)}
        assert d3_spectrum(L1, -2) == {Fraction(1, 4)}
        assert d3_spectrum(L1, 2) == {Fraction(1, 4)}
        L2 = LegendrianData(-2, -1)
        assert d3_spectrum(L2, -1) == {Fraction(1)}
        assert d3_spectrum(L2, 1) == {Fraction(0), Fraction(2)}
        L3 = LegendrianData(-3, 2)
        assert d3_spectrum(L3, -2) == {Fraction(3, 4)}
        assert d3_spectrum(L3, 2) == {Fraction(1, 4), Fraction(17, 4)}

    def test_zero_slope_rejected(self):
        with pytest.raises(NonTorsionEulerClassError):
            d3_spectrum(LegendrianData(-1, 0), 0)

    def test_csq_denominator_divides_det(self):
        from contactsurg import linalg
        from contactsurg.surgery import convert, enumerate_rotations, linking_matrix

        cases = [(-3, 2, Fraction(2)), (-4, 1, Fraction(-1, 3)),
                 (-2, 1, Fraction(1, 5)), (-1, 0, Fraction(-1, 4))]
        for tb, rot, slope in cases:
            for pres in convert(LegendrianData(tb, rot), slope - tb):
                f = linking_matrix(pres)
                det = abs(linalg.determinant(f.rows()))
                for rvec in enumerate_rotations(pres):
                    res = d3(f.with_rotation(rvec))
                    assert det % res.c_squared.denominator == 0
