"""Laurent polynomials in u = e^{i*phi} with GaussianRational coefficients.

A TrigPoly represents sum_l c_l u^l.  It is real-valued on the real phi axis
iff c_{-l} = conj(c_l) for all l.  Differentiation d/dphi maps c_l to i*l*c_l.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping

import mpmath as mp

from .errors import IdentityFailed
from .scalars import GaussianRational, I

_HALF = Fraction(1, 2)


class TrigPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, GaussianRational] | None = None):
        out: Dict[int, GaussianRational] = {}
        if coeffs:
            for k, c in coeffs.items():
                c = GaussianRational.of(c)
                if not c.is_zero:
                    out[int(k)] = c
        self.coeffs = out

    # --- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "TrigPoly":
        return TrigPoly()

    @staticmethod
    def const(c) -> "TrigPoly":
        return TrigPoly({0: GaussianRational.of(c)})

    @staticmethod
    def monomial(l: int, c=1) -> "TrigPoly":
        return TrigPoly({l: GaussianRational.of(c)})

    @staticmethod
    def sin(k: int) -> "TrigPoly":
        """sin(k*phi) = (u^k - u^-k) / (2i)."""
        if k == 0:
            return TrigPoly.zero()
        half_over_i = GaussianRational(Fraction(0), -_HALF)  # 1/(2i) = -i/2
        return TrigPoly({k: half_over_i, -k: -half_over_i})

    @staticmethod
    def cos(k: int) -> "TrigPoly":
        """cos(k*phi) = (u^k + u^-k) / 2."""
        if k == 0:
            return TrigPoly.const(1)
        h = GaussianRational(_HALF, Fraction(0))
        return TrigPoly({k: h, -k: h})

    # --- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def max_freq(self) -> int:
        if self.is_zero:
            raise ValueError("zero TrigPoly has no top frequency")
        return max(self.coeffs)

    def min_freq(self) -> int:
        if self.is_zero:
            raise ValueError("zero TrigPoly has no bottom frequency")
        return min(self.coeffs)

    def is_real(self) -> bool:
        for l, c in self.coeffs.items():
            if self.coeffs.get(-l, GaussianRational()) != c.conjugate():
                return False
        return True

    def conj(self) -> "TrigPoly":
        return TrigPoly({-l: c.conjugate() for l, c in self.coeffs.items()})

    # --- arithmetic ---------------------------------------------------------

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        out = dict(self.coeffs)
        for l, c in other.coeffs.items():
            out[l] = out.get(l, GaussianRational()) + c
        return TrigPoly(out)

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + (-other)

    def __neg__(self) -> "TrigPoly":
        return TrigPoly({l: -c for l, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        out: Dict[int, GaussianRational] = {}
        for l1, c1 in self.coeffs.items():
            for l2, c2 in other.coeffs.items():
                l = l1 + l2
                out[l] = out.get(l, GaussianRational()) + c1 * c2
        return TrigPoly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "TrigPoly":
        c = GaussianRational.of(c)
        return TrigPoly({l: c * v for l, v in self.coeffs.items()})

    def __pow__(self, k: int) -> "TrigPoly":
        if k < 0:
            raise ValueError("negative TrigPoly power")
        out = TrigPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def dphi(self) -> "TrigPoly":
        """Derivative with respect to phi: c_l -> i*l*c_l."""
        return TrigPoly({l: (I * l) * c for l, c in self.coeffs.items()})

    def subs_power(self, q: int) -> "TrigPoly":
        """Substitute phi -> q*phi, i.e. u -> u^q."""
        return TrigPoly({q * l: c for l, c in self.coeffs.items()})

    def exact_div(self, other: "TrigPoly") -> "TrigPoly":
        """Exact division in the Laurent ring; raises if not divisible."""
        if other.is_zero:
            raise ZeroDivisionError("TrigPoly division by zero")
        if self.is_zero:
            return TrigPoly.zero()
        from .poly import DensePoly

        a_min, b_min = self.min_freq(), other.min_freq()
        pa = DensePoly([self.coeffs.get(a_min + k, GaussianRational())
                        for k in range(self.max_freq() - a_min + 1)])
        pb = DensePoly([other.coeffs.get(b_min + k, GaussianRational())
                        for k in range(other.max_freq() - b_min + 1)])
        q, r = pa.divmod(pb)
        if not r.is_zero:
            raise ValueError("inexact TrigPoly division")
        shift = a_min - b_min
        return TrigPoly({shift + k: GaussianRational.of(c)
                         for k, c in enumerate(q.coeffs)})

    # --- numerics -----------------------------------------------------------

    def eval(self, phi):
        """Numeric value at real phi (mpmath); returns mpc."""
        u = mp.exp(mp.mpc(0, 1) * phi)
        acc = mp.mpc(0)
        for l, c in self.coeffs.items():
            term = mp.mpc(mp.mpf(c.re.numerator) / c.re.denominator,
                          mp.mpf(c.im.numerator) / c.im.denominator)
            acc += term * u ** l
        return acc

    def __repr__(self):
        if self.is_zero:
            return "TrigPoly(0)"
        items = ", ".join(f"u^{l}: {c}" for l, c in sorted(self.coeffs.items()))
        return f"TrigPoly({items})"


def sin_power(k: int) -> TrigPoly:
    """(sin phi)^k as an exact TrigPoly."""
    return TrigPoly.sin(1) ** k


def cos_power(k: int) -> TrigPoly:
    return TrigPoly.cos(1) ** k


def wronskian(fs: List[TrigPoly]) -> TrigPoly:
    """Wronskian det[d^i f_j / dphi^i], i = 0..len(fs)-1.

    Fraction-free (Bareiss) elimination over the Laurent ring: every division
    by the previous pivot is exact, which keeps intermediate entries small.
    """
    if not fs:
        raise ValueError("wronskian of an empty list")
    n = len(fs)
    rows: List[List[TrigPoly]] = [list(fs)]
    for _ in range(n - 1):
        rows.append([f.dphi() for f in rows[-1]])
    m = [[rows[i][j] for j in range(n)] for i in range(n)]

    sign = 1
    prev = TrigPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return TrigPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = TrigPoly.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def require_identity(lhs: TrigPoly, rhs: TrigPoly, what: str) -> bool:
    """Assert lhs == rhs exactly; raises IdentityFailed with the difference."""
    diff = lhs - rhs
    if not diff.is_zero:
        raise IdentityFailed(f"{what}: difference has {len(diff.coeffs)} terms",
                             difference=diff)
    return True
