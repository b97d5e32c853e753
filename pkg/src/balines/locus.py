"""Real locus configurations from the variational principle.

For positive multiplicities m_0..m_n the function

    F(psi) = sum_{i<j} m_i m_j log sin(psi_j - psi_i),   psi_0 = 0,

is strictly concave on the ordered region 0 < psi_1 < ... < psi_n < pi and
blows down to -inf at its boundary, so it has a unique critical point; the
first-order conditions there are exactly the k = 1 existence conditions.
Damped Newton with the analytic Hessian finds it to full precision; a
golden-section coordinate sweep serves as a stall fallback.
"""

from __future__ import annotations

import mpmath as mp

from .config import Configuration, Multiplicities, general_from_angles
from .errors import NoConvergence
from .numeric import check_precision, to_mp, working

_MAX_NEWTON = 200


def _f_value(mults, psis):
    total = mp.mpf(0)
    n = len(psis)
    for i in range(n):
        for j in range(i + 1, n):
            s = mp.sin(psis[j] - psis[i])
            if s <= 0:
                return mp.mpf("-inf")
            total += mults[i] * mults[j] * mp.log(s)
    return total


def _gradient(mults, psis):
    n = len(psis)
    g = []
    for j in range(1, n):
        acc = mp.mpf(0)
        for i in range(n):
            if i != j:
                acc += mults[i] * mults[j] * mp.cot(psis[j] - psis[i])
        g.append(acc)
    return g


def _hessian(mults, psis):
    n = len(psis)
    h = mp.matrix(n - 1, n - 1)
    for j in range(1, n):
        diag = mp.mpf(0)
        for i in range(n):
            if i == j:
                continue
            w = mults[i] * mults[j] / mp.sin(psis[j] - psis[i]) ** 2
            diag -= w
            if i >= 1:
                h[j - 1, i - 1] = w
        h[j - 1, j - 1] = diag
    return h


def _ordered(psis) -> bool:
    if psis[0] != 0:
        return False
    for a, b in zip(psis, psis[1:]):
        if b <= a:
            return False
    return psis[-1] < mp.pi


def _golden_sweep(mults, psis):
    """One golden-section coordinate-ascent sweep inside the brackets."""
    gr = (mp.sqrt(5) - 1) / 2
    out = list(psis)
    n = len(out)
    for j in range(1, n):
        lo = out[j - 1]
        hi = out[j + 1] if j + 1 < n else mp.pi
        a, b = lo, hi
        c = b - gr * (b - a)
        d = a + gr * (b - a)
        for _ in range(80):
            pc = list(out)
            pc[j] = c
            pd = list(out)
            pd[j] = d
            if _f_value(mults, pc) > _f_value(mults, pd):
                b = d
            else:
                a = c
            c = b - gr * (b - a)
            d = a + gr * (b - a)
        out[j] = (a + b) / 2
    return out


def solve_general_locus(mults, precision: int = 256) -> Configuration:
    """Unique critical configuration for the given multiplicities.

    Accepts a Multiplicities instance or any sequence of positive reals
    (length >= 2); the first entry sits on the line psi_0 = 0.  Converges to
    gradient max-norm below 2^-(precision - 32), else raises NoConvergence."""
    if not isinstance(mults, Multiplicities):
        mults = Multiplicities(tuple(mults))
    if len(mults) < 2:
        raise ValueError("need at least two multiplicities")
    check_precision(precision)
    mvals = list(mults)
    n = len(mvals)

    with working(precision):
        tol = mp.mpf(2) ** (-(precision - 32))
        mvals = [to_mp(v) for v in mvals]
        psis = [mp.pi * j / n for j in range(n)]
        fval = _f_value(mvals, psis)
        stalls = 0
        for _ in range(_MAX_NEWTON):
            g = _gradient(mvals, psis)
            gnorm = max(abs(v) for v in g)
            if gnorm < tol:
                break
            h = _hessian(mvals, psis)
            rhs = mp.matrix([-v for v in g])
            try:
                step = mp.lu_solve(h, rhs)
            except ZeroDivisionError:
                step = None
            moved = False
            if step is not None:
                t = mp.mpf(1)
                for _ in range(60):
                    cand = [mp.mpf(0)] + [psis[j] + t * step[j - 1]
                                          for j in range(1, n)]
                    if _ordered(cand):
                        fc = _f_value(mvals, cand)
                        if fc > fval:
                            psis, fval = cand, fc
                            moved = True
                            break
                    t /= 2
            if not moved:
                stalls += 1
                if stalls > 3:
                    raise NoConvergence(
                        f"locus solver stalled at gradient norm {mp.nstr(gnorm, 5)}")
                psis = _golden_sweep(mvals, psis)
                fval = _f_value(mvals, psis)
        else:
            raise NoConvergence("locus solver exceeded the iteration budget")

        return general_from_angles(list(mults), psis, precision)
