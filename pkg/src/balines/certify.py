"""Existence-condition residuals and exact ODE checks for arrangements.

Two families of conditions are evaluated per line j and order k <= mult(j):
the first-order family

    sum_{i != j} m_i (z_i + z_j)^{2k-1} / (z_i - z_j)^{2k-1} = 0

and the locus family

    sum_{i != j} m_i (m_i + 1) z_i (z_i + z_j)^{2k-1} / (z_i - z_j)^{2k+1} = 0,

plus their Cartesian counterparts written in the angle differences.  A
certificate aggregates relative residuals over all (j, k) of both families.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import mpmath as mp

from .config import Configuration, Line
from .errors import Collinear, MissingExactData
from .numeric import log2_abs, working
from .poly import DensePoly


@dataclass(frozen=True)
class ConditionResidual:
    j: int
    k: int
    value: object  # mpc
    scale: object  # mpf, largest summand magnitude (floored at 1)
    form: str  # polar-first | polar-locus | cartesian-first | cartesian-locus

    def relative(self):
        return abs(self.value) / self.scale


@dataclass(frozen=True)
class BACertificate:
    digest: str
    precision: int
    threshold: object  # mpf
    max_residual: object  # mpf, max relative residual
    verdict: str  # pass | fail
    residuals: Sequence[ConditionResidual]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self) -> dict:
        return {
            "digest": self.digest,
            "precision_bits": self.precision,
            "max_residual_log2": log2_abs(self.max_residual),
            "threshold_log2": log2_abs(self.threshold),
            "verdict": self.verdict,
            "per_condition": [
                {
                    "j": r.j,
                    "k": r.k,
                    "form": r.form,
                    "residual_log2": log2_abs(r.relative()),
                }
                for r in self.residuals
            ],
        }


def _distinct_or_raise(zs, j):
    zj = zs[j]
    for i, zi in enumerate(zs):
        if i != j and zi == zj:
            raise Collinear(f"lines {i} and {j} are collinear")


def _first_residual(zs, mults, j: int, k: int) -> ConditionResidual:
    _distinct_or_raise(zs, j)
    zj = zs[j]
    total = mp.mpc(0)
    scale = mp.mpf(1)
    for i, zi in enumerate(zs):
        if i == j:
            continue
        term = mults[i] * ((zi + zj) / (zi - zj)) ** (2 * k - 1)
        scale = max(scale, abs(term))
        total += term
    return ConditionResidual(j=j, k=k, value=total, scale=scale, form="polar-first")


def _locus_residual(zs, mults, j: int, k: int) -> ConditionResidual:
    _distinct_or_raise(zs, j)
    zj = zs[j]
    total = mp.mpc(0)
    scale = mp.mpf(1)
    for i, zi in enumerate(zs):
        if i == j:
            continue
        num = mults[i] * (mults[i] + 1) * zi * (zi + zj) ** (2 * k - 1)
        term = num / (zi - zj) ** (2 * k + 1)
        scale = max(scale, abs(term))
        total += term
    return ConditionResidual(j=j, k=k, value=total, scale=scale, form="polar-locus")


def first_condition_residual_lines(lines: Sequence[Line], j: int, k: int) -> ConditionResidual:
    zs = [ln.z() for ln in lines]
    return _first_residual(zs, [ln.mult for ln in lines], j, k)


def locus_condition_residual_lines(lines: Sequence[Line], j: int, k: int) -> ConditionResidual:
    zs = [ln.z() for ln in lines]
    return _locus_residual(zs, [ln.mult for ln in lines], j, k)


def first_condition_residual(c: Configuration, j: int, k: int) -> ConditionResidual:
    if not 1 <= k <= c.lines[j].mult:
        raise ValueError(f"need 1 <= k <= mult, got k={k}")
    with working(c.precision):
        return first_condition_residual_lines(c.lines, j, k)


def locus_condition_residual(c: Configuration, j: int, k: int) -> ConditionResidual:
    if not 1 <= k <= c.lines[j].mult:
        raise ValueError(f"need 1 <= k <= mult, got k={k}")
    with working(c.precision):
        return locus_condition_residual_lines(c.lines, j, k)


def cartesian_condition_residual(c: Configuration, j: int, k: int,
                                 which: str = "first") -> ConditionResidual:
    """Same conditions evaluated at x = (-sin phi_j, cos phi_j):

    first:  sum m_i cos^{2k-1}(phi_j - phi_i) / sin^{2k-1}(phi_j - phi_i)
    locus:  sum m_i (m_i+1) cos^{2k-1}(phi_j - phi_i) / sin^{2k+1}(phi_j - phi_i)
    """
    if which not in ("first", "locus"):
        raise ValueError(f"unknown family {which!r}")
    if not 1 <= k <= c.lines[j].mult:
        raise ValueError(f"need 1 <= k <= mult, got k={k}")
    with working(c.precision):
        phij = c.lines[j].phi
        total = mp.mpf(0)
        scale = mp.mpf(1)
        for i, ln in enumerate(c.lines):
            if i == j:
                continue
            d = phij - ln.phi
            s, co = mp.sin(d), mp.cos(d)
            if s == 0:
                raise Collinear(f"lines {i} and {j} are collinear")
            if which == "first":
                term = ln.mult * co ** (2 * k - 1) / s ** (2 * k - 1)
            else:
                term = ln.mult * (ln.mult + 1) * co ** (2 * k - 1) / s ** (2 * k + 1)
            scale = max(scale, abs(term))
            total += term
        return ConditionResidual(j=j, k=k, value=mp.mpc(total), scale=scale,
                                 form=f"cartesian-{which}")


def default_threshold(precision: int):
    return mp.mpf(2) ** (-(precision - 32))


def certify_ba(c: Configuration, threshold=None) -> BACertificate:
    """Evaluate both polar families over all (j, k <= mult_j).

    The verdict is pass iff every relative residual (|sum| over the largest
    summand magnitude) stays below the threshold, by default
    2^-(precision - 32)."""
    for ln in c.lines:
        if int(ln.mult) != ln.mult:
            raise ValueError("certification needs integer multiplicities")
    with working(c.precision):
        thr = mp.mpf(threshold) if threshold is not None else default_threshold(c.precision)
        zs = [ln.z() for ln in c.lines]
        mults = [ln.mult for ln in c.lines]
        residuals: List[ConditionResidual] = []
        for j, ln in enumerate(c.lines):
            for k in range(1, int(ln.mult) + 1):
                residuals.append(_first_residual(zs, mults, j, k))
                residuals.append(_locus_residual(zs, mults, j, k))
        worst = max(r.relative() for r in residuals)
        verdict = "pass" if worst < thr else "fail"
    return BACertificate(digest=c.digest(), precision=c.precision,
                         threshold=thr, max_residual=worst, verdict=verdict,
                         residuals=tuple(residuals))


# --- exact ODE residuals ------------------------------------------------------


def ode_residual_am1n(c: Configuration) -> DensePoly:
    """w(w-1) P'' - ((n-1)(w-1) - m(w+1)) P' - mn P, exactly (z_0 = 1)."""
    if c.P is None or c.m is None or c.n is None:
        raise MissingExactData("configuration lacks exact P")
    if c.kind != "am1n":
        raise MissingExactData(f"expected an am1n configuration, got {c.kind}")
    m, n = c.m, c.n
    P = c.P
    P1 = P.derivative()
    P2 = P1.derivative()
    w = DensePoly.rational([0, 1])
    one = DensePoly.rational([1])
    term2 = (w - one).scale(Fraction(n - 1)) - (w + one).scale(Fraction(m))
    return (w * (w - one)) * P2 - term2 * P1 - P.scale(Fraction(m * n))


def ode_residual_two_mult(c: Configuration) -> DensePoly:
    """w(w^2-1) P'' - ((n-1)(w^2-1) - m(w+1)^2 - mt(w-1)^2) P'
    - (n(m+mt) w + n(m-mt)) P, exactly (z_0 = 1)."""
    if c.P is None or c.m is None or c.n is None:
        raise MissingExactData("configuration lacks exact P")
    if c.kind != "twomult":
        raise MissingExactData(f"expected a twomult configuration, got {c.kind}")
    m, n = c.m, c.n
    mt = c.mtilde or 0
    P = c.P
    P1 = P.derivative()
    P2 = P1.derivative()
    w = DensePoly.rational([0, 1])
    one = DensePoly.rational([1])
    wsq = w * w - one
    term2 = (wsq.scale(Fraction(n - 1))
             - ((w + one) * (w + one)).scale(Fraction(m))
             - ((w - one) * (w - one)).scale(Fraction(mt)))
    rhs = DensePoly.rational([n * (m - mt), n * (m + mt)]) * P
    return (w * wsq) * P2 - term2 * P1 - rhs


def certificate_to_json(cert: BACertificate, path: Optional[str] = None) -> str:
    text = json.dumps(cert.to_json_dict(), indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text
