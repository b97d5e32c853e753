from fractions import Fraction as F

import mpmath as mp
import pytest

from balines.errors import NonSquarefree
from balines.poly import DensePoly
from balines.roots import poly_roots
from balines.symfunc import poly_from_elementary

from oracles import elementary_from_values


def test_exact_imaginary_pair():
    roots = poly_roots(DensePoly.rational([1, 0, 1]), 128)
    with mp.workprec(160):
        assert len(roots) == 2
        assert abs(roots[0] - mp.mpc(0, 1)) < mp.mpf(2) ** -120
        assert abs(roots[1] - mp.mpc(0, -1)) < mp.mpf(2) ** -120


def test_quadratic_formula_oracle():
    # w^2 + 4/3 w + 1 has roots -2/3 +- i sqrt(5)/3, modulus 1
    p = DensePoly.rational([1, F(4, 3), 1])
    roots = poly_roots(p, 256)
    with mp.workprec(320):
        expected = mp.mpc(mp.mpf(-2) / 3, mp.sqrt(mp.mpf(5)) / 3)
        assert abs(roots[0] - expected) < mp.mpf(2) ** -240
        assert abs(roots[1] - mp.conj(expected)) < mp.mpf(2) ** -240
        for r in roots:
            assert abs(abs(r) - 1) < mp.mpf(2) ** -240


def test_cube_roots_of_unity():
    roots = poly_roots(DensePoly.rational([1, 1, 1]), 128)
    with mp.workprec(160):
        for r in roots:
            assert abs(r ** 3 - 1) < mp.mpf(2) ** -110
            assert abs(r - 1) > 1


def test_residual_bound_and_ordering():
    p = poly_from_elementary([F(-8, 5), F(9, 5), F(-8, 5), F(1)], 4)
    prec = 256
    roots = poly_roots(p, prec)
    with mp.workprec(prec + 64):
        scale = max(abs(mp.mpf(c.numerator) / c.denominator) for c in p.coeffs)
        for r in roots:
            assert abs(p.eval_numeric(r)) < mp.mpf(2) ** (-(prec - 16)) * scale
        args = [mp.arg(r) % (2 * mp.pi) for r in roots]
        assert args == sorted(args)


def test_nonsquarefree_rejected():
    p = DensePoly.rational([-1, 1]) * DensePoly.rational([-1, 1])
    with pytest.raises(NonSquarefree):
        poly_roots(p, 128)


def test_round_trip_elementary():
    from balines.symfunc import e_values

    cases = [[F(-4, 3), F(1)],
             e_values(3, 5),
             e_values(6, 10),
             [F(1, 7), F(-2, 3), F(5, 2)]]
    for e in cases:
        p = poly_from_elementary(e, len(e))
        roots = poly_roots(p, 256)
        with mp.workprec(320):
            back = elementary_from_values(roots)
            for want, got in zip(e, back):
                assert abs(got - mp.mpf(want.numerator) / want.denominator) \
                    < mp.mpf(2) ** -200


def test_determinism():
    p = poly_from_elementary([F(-3, 2), F(3, 2), F(-1)], 3)
    a = poly_roots(p, 192)
    b = poly_roots(p, 192)
    assert all(x == y for x, y in zip(a, b))
