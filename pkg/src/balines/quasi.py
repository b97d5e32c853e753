"""Graded dimensions of quasi-invariant algebras for type-(m, 1^n) arrangements.

A homogeneous polynomial sum_i c_i x^(d-i) y^i is quasi-invariant when the
heavy line (0, 1) kills the coefficients with odd index <= 2m - 1 and every
slope-alpha line imposes one linear functional: the derivative along (1, alpha)
restricted to the line is t^(d-1) g(alpha) for a polynomial g depending
linearly on the coefficients.  The joint kernel over all lines therefore
equals {c : R(alpha) divides g_c(alpha)} where R is the monic polynomial with
the slopes as roots, so dimensions reduce to exact ranks of rational
remainder-map matrices.  A full-pivot numeric rank serves configurations
carrying only numeric charts.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath as mp

from .config import INF, Configuration
from .errors import IllConditioned, MissingExactData, OutOfRange, TailMismatch
from .numeric import working
from .poly import DensePoly


# --- linear algebra kernels ---------------------------------------------------


def rank_exact(rows: List[List[Fraction]]) -> int:
    """Row rank over the rationals by Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col] != 0:
                factor = m[r][col] / pv
                for c2 in range(col, ncols):
                    m[r][c2] -= factor * m[row][c2]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank_numeric(rows, precision: int, pivot_threshold=None) -> int:
    """Numeric rank by full-pivot elimination with an explicit margin rule.

    Pivoting stops when the remaining submatrix maximum falls under
    pivot_threshold (default 2^-(precision/2)) times the largest initial
    entry; the decision is accepted only when the last accepted pivot
    exceeds the first discarded one by 2^64, else IllConditioned."""
    m = [[mp.mpf(x) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    scale0 = max((abs(x) for r in m for x in r), default=mp.mpf(0))
    if scale0 == 0:
        return 0
    thr = (mp.mpf(2) ** (-(precision // 2)) if pivot_threshold is None
           else mp.mpf(pivot_threshold))
    # the functionals have integer coefficients of order the degree, so unit
    # scale is the natural floor; without it an all-noise matrix (e.g. an
    # exactly-zero slope entering through a numeric chart) looks full rank
    cutoff = thr * max(scale0, mp.mpf(1))

    live_rows = list(range(nrows))
    live_cols = list(range(ncols))
    rank = 0
    last_pivot = None
    while live_rows and live_cols:
        best = mp.mpf(0)
        br = bc = None
        for r in live_rows:
            for c in live_cols:
                v = abs(m[r][c])
                if v > best:
                    best, br, bc = v, r, c
        if best <= cutoff:
            if last_pivot is not None and best > 0 and last_pivot / best < mp.mpf(2) ** 64:
                raise IllConditioned(
                    f"rank margin {mp.nstr(last_pivot / best, 5)} below 2^64")
            return rank
        pv = m[br][bc]
        for r in live_rows:
            if r != br and m[r][bc] != 0:
                f = m[r][bc] / pv
                for c in live_cols:
                    m[r][c] -= f * m[br][c]
        live_rows.remove(br)
        live_cols.remove(bc)
        rank += 1
        last_pivot = best
    return rank


# --- the per-line functional --------------------------------------------------


def free_indices(d: int, m: int) -> List[int]:
    """Coefficient indices surviving the heavy-line constraints."""
    return [i for i in range(d + 1) if not (i % 2 == 1 and i <= 2 * m - 1)]


def functional_poly(d: int, i: int) -> DensePoly:
    """(d-i) alpha^(d-1-i) - i alpha^(d+1-i) as an exact polynomial."""
    coeffs = [Fraction(0)] * (d + 2)
    if i < d:
        coeffs[d - 1 - i] += d - i
    if i > 0:
        coeffs[d + 1 - i] -= i
    return DensePoly(coeffs)


@dataclass(frozen=True)
class QISystem:
    """Assembled degree-d system: surviving coefficient indices and the
    remainder-map matrix (one row per power of alpha below deg R)."""

    degree: int
    heavy_mult: int
    free: Tuple[int, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]

    @property
    def free_count(self) -> int:
        return len(self.free)

    def dimension(self) -> int:
        return self.free_count - rank_exact([list(r) for r in self.matrix])


def assemble_system(c: Configuration, d: int) -> QISystem:
    """Exact quasi-invariance system of degree d over the rationals."""
    if c.R is None:
        raise MissingExactData("configuration carries no exact slope polynomial R")
    m, light = _require_m1n_chart(c)
    R = c.R
    n = R.degree
    if n != len(light):
        raise MissingExactData("R degree does not match the number of slope lines")
    S = free_indices(d, m)
    cols = []
    for i in S:
        rem = functional_poly(d, i) % R
        cols.append([rem[k] for k in range(n)])
    rows = tuple(tuple(cols[ci][k] for ci in range(len(S))) for k in range(n))
    return QISystem(degree=d, heavy_mult=m, free=tuple(S), matrix=rows)


def m1n_parameters(c: Configuration) -> Tuple[int, int]:
    """(heavy multiplicity, number of slope lines) of a type-(m, 1^n) chart."""
    m, light = _require_m1n_chart(c)
    return m, len(light)


def _require_m1n_chart(c: Configuration) -> Tuple[int, List]:
    heavy = [ln for ln in c.lines if ln.mult != 1]
    light = [ln for ln in c.lines if ln.mult == 1]
    if len(heavy) > 1:
        raise MissingExactData(
            "quasi-invariant system needs type (m, 1^n): at most one heavy line")
    if heavy:
        if not (heavy[0].phi == 0 or heavy[0].alpha_exact is INF):
            raise MissingExactData("the heavy line must sit at phi = 0")
        m = int(heavy[0].mult)
    else:
        # all multiplicity 1: treat the phi = 0 line as the distinguished one
        zero = [ln for ln in light if ln.phi == 0]
        if not zero:
            raise MissingExactData("no line at phi = 0 to play the heavy role")
        m = 1
        light = [ln for ln in light if ln.phi != 0]
    return m, light


def qi_dimension_exact(c: Configuration, d: int) -> int:
    """dim of degree-d quasi-invariants via the exact remainder-map rank."""
    return assemble_system(c, d).dimension()


def qi_dimension_numeric(c: Configuration, d: int, precision: Optional[int] = None,
                         pivot_threshold=None) -> int:
    """Same dimension from the numeric slope chart (full-pivot rank)."""
    precision = precision or c.precision
    m, light = _require_m1n_chart(c)
    with working(precision):
        rows = []
        S = free_indices(d, m)
        for ln in light:
            a = ln.alpha()
            row = []
            for i in S:
                v = mp.mpf(0)
                if i < d:
                    v += (d - i) * a ** (d - 1 - i)
                if i > 0:
                    v -= i * a ** (d + 1 - i)
                row.append(v)
            rows.append(row)
        return len(S) - rank_numeric(rows, precision, pivot_threshold)


def is_quasi_invariant(c: Configuration, coeffs: Sequence[Fraction]) -> bool:
    """Exact membership test for a homogeneous polynomial sum c_i x^(d-i) y^i."""
    if c.R is None:
        raise MissingExactData("membership test needs exact R")
    m, _ = _require_m1n_chart(c)
    coeffs = [Fraction(v) for v in coeffs]
    d = len(coeffs) - 1
    for i in range(1, min(2 * m - 1, d) + 1, 2):
        if coeffs[i] != 0:
            return False
    g = DensePoly.zero()
    for i, ci in enumerate(coeffs):
        if ci == 0:
            continue
        sign = 1 if (d - i - 1) % 2 == 0 else -1
        g = g + functional_poly(d, i).scale(ci * sign)
    return (g % c.R).is_zero


def radial_invariant(d: int = 2) -> List[Fraction]:
    """Coefficients of x^2 + y^2."""
    if d != 2:
        raise ValueError("the radial invariant has degree 2")
    return [Fraction(1), Fraction(0), Fraction(1)]


def product_invariant(c: Configuration) -> List[Fraction]:
    """Coefficients of prod_lines (line form)^(2 mult): the squared defining
    polynomial, built from R so it stays rational for irrational slopes."""
    if c.R is None:
        raise MissingExactData("product invariant needs exact R")
    m, light = _require_m1n_chart(c)
    n = c.R.degree
    # prod (x + alpha_j y) = sum_k r_k (-1)^(n-k) x^k y^(n-k),  R = sum r_k a^k
    lin = [(-1) ** (n - k) * c.R[k] for k in range(n + 1)]  # index = power of x
    prod = {k: lin[k] for k in range(n + 1)}

    def mul(p1: Dict[int, Fraction], p2: Dict[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for a, va in p1.items():
            for b, vb in p2.items():
                out[a + b] = out.get(a + b, Fraction(0)) + va * vb
        return out

    sq = mul(prod, prod)
    # heavy line contributes y^(2m); x-power unchanged
    d = 2 * n + 2 * m
    coeffs = [Fraction(0)] * (d + 1)
    for xpow, v in sq.items():
        coeffs[d - xpow] = v  # i = index of y-power = d - xpow
    return coeffs


# --- Hilbert series -----------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    m: int
    n: int
    coeffs: Tuple[int, ...]  # b_0 .. b_D
    numerator: Tuple[int, ...]  # N(t) with P(t) = N(t) / (t^2 - 1)^2

    @property
    def degree_cutoff(self) -> int:
        return 2 * self.m + 2 * self.n - 1

    def coefficient(self, d: int) -> int:
        if d < len(self.coeffs):
            return self.coeffs[d]
        return d + 1 - self.m - self.n

    def to_json_dict(self) -> dict:
        gor, M = is_gorenstein(self)
        return {
            "m": self.m,
            "n": self.n,
            "coefficients": list(self.coeffs),
            "numerator": list(self.numerator),
            "gorenstein": gor,
            "M": M,
        }

    def save_json(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=2, sort_keys=True)

    def save_csv(self, path: str) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["degree", "b"])
            for d, b in enumerate(self.coeffs):
                writer.writerow([d, b])


def hilbert_coefficients(c: Configuration, D: int,
                         exact: Optional[bool] = None) -> List[int]:
    """[b_0 .. b_D]; exact route when R is available unless overridden."""
    m, light = _require_m1n_chart(c)
    n = len(light)
    if D < 2 * m + 2 * n + 2:
        raise ValueError(f"need D >= {2 * m + 2 * n + 2}")
    use_exact = exact if exact is not None else c.R is not None
    if use_exact:
        return [qi_dimension_exact(c, d) for d in range(D + 1)]
    return [qi_dimension_numeric(c, d) for d in range(D + 1)]


def hilbert_rational_form(coeffs: Sequence[int], m: int, n: int) -> HilbertSeries:
    """Splice the computed coefficients and the linear tail into N(t)/(t^2-1)^2.

    Verifies the tail law b_i = i + 1 - m - n on every stored i past the
    cutoff (TailMismatch otherwise)."""
    coeffs = [int(v) for v in coeffs]
    D = len(coeffs) - 1
    if D < 2 * m + 2 * n + 2:
        raise ValueError(f"need coefficients through degree {2 * m + 2 * n + 2}")
    cutoff = 2 * m + 2 * n - 1
    for i in range(cutoff, D + 1):
        if coeffs[i] != i + 1 - m - n:
            raise TailMismatch(f"b_{i} = {coeffs[i]} violates the tail law "
                               f"{i + 1 - m - n}")

    def b(i: int) -> int:
        if i < 0:
            return 0
        if i <= D:
            return coeffs[i]
        return i + 1 - m - n

    deg_n = 2 * m + 2 * n + 2
    numer = [b(k) - 2 * b(k - 2) + b(k - 4) for k in range(deg_n + 1)]
    while numer and numer[-1] == 0:
        numer.pop()
    if not numer or numer[0] != 1:
        raise TailMismatch("numerator must have constant term b_0 = 1")
    return HilbertSeries(m=m, n=n, coeffs=tuple(coeffs), numerator=tuple(numer))


def expand_numerator(numer: Sequence[int], D: int) -> List[int]:
    """Series coefficients of N(t) / (1 - t^2)^2 through degree D."""
    numer = list(numer)
    out = []
    for d in range(D + 1):
        acc = 0
        k = 0
        while 2 * k <= d:
            idx = d - 2 * k
            if idx < len(numer):
                acc += (k + 1) * numer[idx]
            k += 1
        out.append(acc)
    return out


def am1n_hilbert_numerator(m: int, n: int) -> List[int]:
    """Closed-form numerator for the distinguished one-heavy-line family:
    1 - t^2 + t^(n+1) + t^(n+2) + t^(2m+n) + t^(2m+n+1) - t^(2m+2n) + t^(2m+2n+2)."""
    deg = 2 * m + 2 * n + 2
    out = [0] * (deg + 1)
    for expo, coef in [(0, 1), (2, -1), (n + 1, 1), (n + 2, 1), (2 * m + n, 1),
                       (2 * m + n + 1, 1), (2 * m + 2 * n, -1), (deg, 1)]:
        out[expo] += coef
    return out


def is_gorenstein(h: HilbertSeries) -> Tuple[bool, Optional[int]]:
    """(True, M) iff the numerator is an exact palindrome; then
    P(1/t) = t^M P(t) with M = 4 - deg N."""
    numer = list(h.numerator)
    if numer != numer[::-1]:
        return False, None
    return True, 4 - (len(numer) - 1)


def r_parameter(c: Configuration) -> int:
    """Number of distinct squared slopes among the multiplicity-1 lines."""
    _, light = _require_m1n_chart(c)
    exact = [ln.alpha_exact for ln in light]
    if all(isinstance(a, Fraction) for a in exact):
        return len({a * a for a in exact})
    if c.kind == "am1n":
        return (c.n + 1) // 2
    with working(c.precision):
        tol = mp.mpf(2) ** (-(c.precision // 2))
        sq = sorted(ln.alpha() ** 2 for ln in light)
        count = 1
        for a, b in zip(sq, sq[1:]):
            if abs(b - a) > tol * max(1, abs(b)):
                count += 1
        return count


def is_symmetric_slope_chart(c: Configuration) -> bool:
    """Whether slopes pair off as {a, -a} (plus one zero slope when n is odd)."""
    _, light = _require_m1n_chart(c)
    if c.kind == "am1n":
        return True
    exact = [ln.alpha_exact for ln in light]
    if not all(isinstance(a, Fraction) for a in exact):
        return False
    zeros = [a for a in exact if a == 0]
    if len(zeros) != len(exact) % 2:
        return False
    nonzero = sorted(a for a in exact if a != 0)
    return sorted(-a for a in nonzero) == nonzero


# --- coefficient-segment oracles ----------------------------------------------

SEGMENT_NAMES = (
    "low_degree_alternation",
    "heavy_threshold_value",
    "odd_tail_linear",
    "even_tail_linear",
    "stable_tail",
    "odd_mid_window",
    "odd_window_distinct_slopes",
    "sym_low_window",
    "sym_odd_upper",
    "exceptional_even_window",
    "sym_even_window",
)


def segment_prediction(name: str, m: int, n: int, r: Optional[int] = None,
                       symmetric: bool = False, am1n: bool = False,
                       D: Optional[int] = None) -> Dict[int, int]:
    """Predicted b_i over the degrees one formula covers; OutOfRange when its
    hypothesis (parity, 2r vs m+n, symmetry) fails."""
    D = D if D is not None else 2 * m + 2 * n + 4
    out: Dict[int, int] = {}
    if name == "low_degree_alternation":
        for k in range(0, min(n, D) + 1):
            out[k] = 1 if k % 2 == 0 else 0
    elif name == "heavy_threshold_value":
        if n % 2 == 0:
            if 2 * m + n - 1 <= D:
                out[2 * m + n - 1] = m
        else:
            if 2 * m + n - 2 <= D:
                out[2 * m + n - 2] = m - 1
    elif name == "odd_tail_linear":
        start = 2 * m + n - 1
        if start % 2 == 0:
            start += 1
        for i in range(start, D + 1, 2):
            out[i] = i + 1 - m - n
    elif name == "even_tail_linear":
        for i in range(2 * (m + n), D + 1, 2):
            out[i] = i + 1 - m - n
    elif name == "stable_tail":
        for i in range(2 * m + 2 * n - 1, D + 1):
            out[i] = i + 1 - m - n
    elif name == "odd_mid_window":
        lo = 2 * m + n + 1 if n % 2 == 0 else 2 * m + n
        for i in range(lo, min(2 * m + 2 * n - 3, D) + 1, 2):
            out[i] = i + 1 - m - n
    elif name == "odd_window_distinct_slopes":
        if r is None:
            raise OutOfRange("needs the distinct-squared-slope count r")
        if 2 * r > m + n:
            raise OutOfRange(f"window formula needs 2r <= m+n, got r={r}")
        lo = n + 1 if (n + 1) % 2 == 1 else n + 2
        for i in range(lo, min(2 * m + n - 1, D) + 1, 2):
            if i <= 2 * r - 1:
                out[i] = 0
            elif i <= 2 * m + 2 * n - 2 * r - 1:
                out[i] = (i + 1) // 2 - r
            else:
                out[i] = i + 1 - m - n
    elif name == "sym_low_window":
        if not symmetric:
            raise OutOfRange("needs the paired-slope symmetry")
        for i in range(n, min(2 * m, D) + 1):
            if i % 2 == 1:
                out[i] = (i + 1) // 2 - (n + 1) // 2
            else:
                out[i] = i // 2 + 1 - n // 2
    elif name == "sym_odd_upper":
        if not symmetric:
            raise OutOfRange("needs the paired-slope symmetry")
        lo = max(2 * m - 1, n - 1)
        if lo % 2 == 0:
            lo += 1
        for i in range(lo, min(2 * m + n - 1, D) + 1, 2):
            out[i] = (i + 1) // 2 - (n + 1) // 2
    elif name == "exceptional_even_window":
        if not am1n:
            raise OutOfRange("only the distinguished family takes these values")
        for s in range(1, n // 2 + 1):
            i = 2 * (m + n - s)
            if i <= D:
                out[i] = i - m - n + 2
    elif name == "sym_even_window":
        if not symmetric:
            raise OutOfRange("needs the paired-slope symmetry")
        for s in range(n // 2 + 1, min(n, m + (n + 1) // 2) + 1):
            i = 2 * (m + n - s)
            if 0 <= i <= D:
                out[i] = i // 2 - n // 2 + 1
    else:
        raise ValueError(f"unknown segment formula {name!r}")
    return out


def segment_oracles(m: int, n: int, r: Optional[int] = None,
                    symmetric: bool = False, am1n: bool = False,
                    D: Optional[int] = None) -> Dict[str, Dict[int, int]]:
    """All applicable per-degree predictions; inapplicable formulas are skipped."""
    out = {}
    for name in SEGMENT_NAMES:
        try:
            out[name] = segment_prediction(name, m, n, r=r, symmetric=symmetric,
                                           am1n=am1n, D=D)
        except OutOfRange:
            continue
    return out
