"""Arbitrary-precision floating-point helpers on top of mpmath.

Conventions used throughout the package:

- every public operation takes a ``precision`` in bits (>= 64) and runs its
  mpmath arithmetic under ``working(precision)``, which adds guard bits;
- mpf values serialize as hex-float strings built from the exact internal
  (sign, mantissa, exponent) triple, so round-trips are bit-exact.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

import mpmath as mp

from .scalars import GaussianRational

GUARD_BITS = 64
MIN_PRECISION = 64


def check_precision(precision: int) -> int:
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {precision}")
    return int(precision)


@contextmanager
def working(precision: int, guard: int = GUARD_BITS):
    check_precision(precision)
    with mp.workprec(precision + guard):
        yield


def to_mp(x):
    """Convert exact scalars to mpf/mpc at the current working precision."""
    if isinstance(x, GaussianRational):
        if x.is_real:
            return mp.mpf(x.re.numerator) / x.re.denominator
        return mp.mpc(
            mp.mpf(x.re.numerator) / x.re.denominator,
            mp.mpf(x.im.numerator) / x.im.denominator,
        )
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpmathify(x)


def mpf_to_hex(x) -> str:
    """Exact hex serialization of an mpf: [-]0xMANTISSApEXP."""
    if not isinstance(x, mp.mpf):
        # conversion must not round: use enough bits for exact ints/floats
        with mp.workprec(max(getattr(x, "bit_length", lambda: 64)(), 64) + 8):
            x = mp.mpf(x)
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if exp == 0:
            return "0x0p0"
        raise ValueError(f"cannot serialize non-finite value {x}")
    return f"{'-' if sign else ''}0x{man:x}p{exp}"


def hex_to_mpf(s: str):
    """Inverse of mpf_to_hex; exact regardless of ambient precision."""
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    if not s.startswith("0x"):
        raise ValueError(f"bad hex float {s!r}")
    man_s, exp_s = s[2:].split("p")
    man = int(man_s, 16)
    exp = int(exp_s)
    if man == 0:
        return mp.mpf(0)
    with mp.workprec(max(man.bit_length(), 53) + 8):
        v = mp.ldexp(mp.mpf(man), exp)
    return -v if neg else v


def reduce_angle_mod_pi(phi):
    """Map an angle to the representative in [0, pi)."""
    pi = mp.pi
    k = mp.floor(phi / pi)
    out = phi - k * pi
    if out >= pi:
        out -= pi
    if out < 0:
        out += pi
    return out


def log2_abs(x) -> float:
    """float(log2|x|), with -inf for 0; safe for tiny/huge mpf values."""
    ax = abs(mp.mpmathify(x))
    if ax == 0:
        return float("-inf")
    return float(mp.log(ax, 2))
