"""Simultaneous (Aberth-type) polynomial root finding in mpmath complex.

Inputs are exact DensePoly instances with rational or Gaussian-rational
coefficients, assumed squarefree (checked).  Initial points sit on a circle
of Fujiwara-bound radius with a fixed deterministic jitter, so reruns give
identical output at identical precision.
"""

from __future__ import annotations

from typing import List

import mpmath as mp

from .errors import NoConvergence
from .poly import DensePoly
from .numeric import check_precision, to_mp, working

_MAX_ITER = 400
# deterministic angular jitter, a fixed irrational multiple per index
_JITTER = 0.01234567


def fujiwara_bound(coeffs_mp) -> mp.mpf:
    """Upper bound on root moduli: 2 * max_k |a_{n-k}/a_n|^{1/k}."""
    n = len(coeffs_mp) - 1
    an = abs(coeffs_mp[-1])
    best = mp.mpf(0)
    for k in range(1, n + 1):
        c = abs(coeffs_mp[n - k]) / an
        if c > 0:
            best = max(best, c ** (mp.mpf(1) / k))
    return 2 * best if best > 0 else mp.mpf(1)


def _polyval(coeffs_mp, x):
    acc = mp.mpc(0)
    for c in reversed(coeffs_mp):
        acc = acc * x + c
    return acc


def poly_roots(p: DensePoly, precision: int = 256) -> List[mp.mpc]:
    """All deg(p) roots, ordered by (principal argument in [0, 2pi), modulus).

    Residuals |p(root)| are driven below 2^-(precision-16) * max|coeff|
    (with extra guard bits internally).  Raises NonSquarefree when p has a
    repeated root and NoConvergence when iteration stalls.
    """
    check_precision(precision)
    p.check_squarefree()
    n = p.degree
    if n <= 0:
        return []
    with working(precision, guard=96):
        coeffs = [to_mp(c) for c in p.coeffs]
        dcoeffs = [k * c for k, c in enumerate(coeffs)][1:]
        scale = max(abs(c) for c in coeffs)
        target = mp.mpf(2) ** (-(precision + 48)) * scale

        radius = fujiwara_bound(coeffs)
        xs = [radius * mp.exp(mp.mpc(0, 1) * (2 * mp.pi * k / n + _JITTER * (k + 1)))
              for k in range(n)]

        converged = False
        for _ in range(_MAX_ITER):
            offsets = []
            maxres = mp.mpf(0)
            for i, x in enumerate(xs):
                pv = _polyval(coeffs, x)
                maxres = max(maxres, abs(pv))
                dv = _polyval(dcoeffs, x)
                if dv == 0:
                    offsets.append(mp.mpc(0.5, 0.5))
                    continue
                w = pv / dv
                s = mp.mpc(0)
                for j, y in enumerate(xs):
                    if j != i:
                        s += 1 / (x - y)
                denom = 1 - w * s
                offsets.append(w if denom == 0 else w / denom)
            xs = [x - o for x, o in zip(xs, offsets)]
            if maxres < target:
                converged = True
                break
        if not converged:
            # final residual check: the last sweep may have landed the roots
            if max(abs(_polyval(coeffs, x)) for x in xs) >= target:
                raise NoConvergence(
                    f"root iteration stalled at precision {precision}")

        # Newton polish, then deterministic ordering
        for _ in range(3):
            xs = [x - _polyval(coeffs, x) / _polyval(dcoeffs, x) for x in xs]

        def key(z):
            a = mp.arg(z)
            if a < 0:
                a += 2 * mp.pi
            return (a, abs(z))

        xs.sort(key=key)
        return xs
