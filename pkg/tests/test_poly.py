from fractions import Fraction as F

import pytest

from balines.errors import NonSquarefree
from balines.poly import DensePoly
from balines.scalars import GaussianRational


def test_normalization_drops_leading_zeros():
    p = DensePoly.rational([1, 2, 0, 0])
    assert p.degree == 1
    assert DensePoly.rational([0, 0]).is_zero


def test_ring_ops():
    p = DensePoly.rational([1, 1])      # 1 + x
    q = DensePoly.rational([-1, 1])     # -1 + x
    assert p * q == DensePoly.rational([-1, 0, 1])
    assert p + q == DensePoly.rational([0, 2])
    assert (p - p).is_zero
    assert p.scale(F(3)) == DensePoly.rational([3, 3])


def test_divmod_exact():
    p = DensePoly.rational([-1, 0, 0, 1])  # x^3 - 1
    d = DensePoly.rational([-1, 1])        # x - 1
    q, r = p.divmod(d)
    assert r.is_zero
    assert q == DensePoly.rational([1, 1, 1])
    q2, r2 = p.divmod(DensePoly.rational([1, 1]))
    assert q2 * DensePoly.rational([1, 1]) + r2 == p


def test_gcd_and_squarefree():
    p = DensePoly.rational([-1, 1])
    sq = p * p * DensePoly.rational([1, 1])
    g = sq.gcd(sq.derivative())
    assert g == DensePoly.rational([-1, 1])
    with pytest.raises(NonSquarefree):
        sq.check_squarefree()
    DensePoly.rational([1, 0, 1]).check_squarefree()


def test_evaluation_and_derivative():
    p = DensePoly.rational([1, -2, 3])  # 1 - 2x + 3x^2
    assert p(F(1, 2)) == F(3, 4)
    assert p.derivative() == DensePoly.rational([-2, 6])


def test_compose_affine():
    p = DensePoly.rational([0, 0, 1])  # x^2
    # (2x + 1)^2 = 1 + 4x + 4x^2
    assert p.compose_affine(F(2), F(1)) == DensePoly.rational([1, 4, 4])


def test_gaussian_coefficients():
    i = GaussianRational(F(0), F(1))
    p = DensePoly([GaussianRational.of(1), i])  # 1 + i x
    q = p * p
    assert q == DensePoly([GaussianRational.of(1), 2 * i, GaussianRational.of(-1)])
    quo, rem = q.divmod(p)
    assert rem.is_zero and quo == p
