"""Exact scalar types: rationals and rationals with an imaginary unit adjoined.

Plain rationals are ``fractions.Fraction`` (already reduced, positive
denominator).  ``GaussianRational`` adjoins i and is the coefficient field of
the trigonometric Laurent polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

Scalar = Union[int, Fraction, "GaussianRational"]


def binom(n: int, k: int) -> int:
    """Binomial coefficient for nonnegative integer arguments."""
    return math.comb(n, k)


def frac_str(x: Fraction) -> str:
    """Serialize a rational as ``p/q`` (or ``p`` when q = 1)."""
    return str(Fraction(x))


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class GaussianRational:
    """Exact element re + im*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(Fraction(x), Fraction(0))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.of(other)
        n2 = other.norm2()
        if n2 == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        inv = GaussianRational(other.re / n2, -other.im / n2)
        return self * inv

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return (GaussianRational.of(1) / self) ** (-k)
        out = GaussianRational.of(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational.of(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = GaussianRational(Fraction(0), Fraction(1))
