"""Planar arrangements of lines with multiplicities, in three charts.

A line is stored by the angle phi in [0, pi) of its unit normal
(cos phi, sin phi); z = e^{2i phi} is the unit-circle chart and
alpha = cot(phi) the slope chart (phi = 0 maps to alpha = infinity,
i.e. the vector (0, 1) of the slope chart).

Exact data (elementary symmetric values, the monic polynomials P and R)
is carried whenever the construction provides it.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath as mp

from .errors import CollisionError, NoConvergence, RecurrenceBreakdown
from .numeric import (check_precision, hex_to_mpf, mpf_to_hex,
                      reduce_angle_mod_pi, to_mp, working)
from .poly import DensePoly
from .roots import poly_roots
from .scalars import frac_str, parse_frac
from .symfunc import (e_values, ehat_values, elementary_from_power_sums,
                      poly_from_elementary, power_sums_from_elementary,
                      r_poly_from_ehat)


class _Infinity:
    """Sentinel for the infinite slope of the phi = 0 line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()


@dataclass(frozen=True)
class Line:
    mult: object  # int everywhere except locus charts, which allow reals
    phi: object  # mpf, exact snapshot
    alpha_exact: object = None  # Fraction | INF | None

    def z(self):
        """Unit-circle coordinate e^{2i phi} at the ambient working precision."""
        return mp.exp(mp.mpc(0, 2) * self.phi)

    def alpha(self):
        """Numeric slope cot(phi); infinite for phi = 0."""
        if self.alpha_exact is INF or self.phi == 0:
            return mp.inf
        if isinstance(self.alpha_exact, Fraction):
            return to_mp(self.alpha_exact)
        return mp.cot(self.phi)


@dataclass(frozen=True)
class Multiplicities:
    values: Tuple[object, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty multiplicity list")
        if any(not (v > 0) for v in self.values):
            raise ValueError("multiplicities must be positive")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class Configuration:
    kind: str  # am1n | twomult | qexpanded | general | random
    lines: Tuple[Line, ...]
    precision: int
    m: Optional[int] = None
    mtilde: Optional[int] = None
    n: Optional[int] = None
    q: Optional[int] = None
    seed: Optional[int] = None
    e: Optional[Tuple[Fraction, ...]] = None
    ehat: Optional[Tuple[Fraction, ...]] = None
    P: Optional[DensePoly] = None
    R: Optional[DensePoly] = None
    e_branch_sign: Optional[int] = None

    def __len__(self):
        return len(self.lines)

    def mult1_lines(self) -> List[Line]:
        return [ln for ln in self.lines if ln.mult == 1]

    def slope_lines(self) -> List[Line]:
        """Lines with a finite slope, i.e. everything except phi = 0."""
        return [ln for ln in self.lines
                if not (ln.phi == 0 or ln.alpha_exact is INF)]

    def heavy_line(self) -> Line:
        """The phi = 0 line when present, else the largest multiplicity."""
        for ln in self.lines:
            if ln.phi == 0 or ln.alpha_exact is INF:
                return ln
        return max(self.lines, key=lambda ln: ln.mult)

    # --- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "mtilde": self.mtilde,
            "n": self.n,
            "q": self.q,
            "seed": self.seed,
            "precision_bits": self.precision,
            "e": [frac_str(v) for v in self.e] if self.e is not None else None,
            "ehat": [frac_str(v) for v in self.ehat] if self.ehat is not None else None,
            "e_branch_sign": self.e_branch_sign,
            "lines": [
                {
                    "mult": ln.mult,
                    "phi_hex": mpf_to_hex(ln.phi),
                    "alpha": ("inf" if ln.alpha_exact is INF
                              else frac_str(ln.alpha_exact)
                              if isinstance(ln.alpha_exact, Fraction) else None),
                }
                for ln in self.lines
            ],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "Configuration":
        lines = []
        for entry in d["lines"]:
            alpha = entry.get("alpha")
            if alpha == "inf":
                alpha_exact = INF
            elif alpha is None:
                alpha_exact = None
            else:
                alpha_exact = parse_frac(alpha)
            lines.append(Line(mult=entry["mult"],
                              phi=hex_to_mpf(entry["phi_hex"]),
                              alpha_exact=alpha_exact))
        e = tuple(parse_frac(v) for v in d["e"]) if d.get("e") is not None else None
        ehat = (tuple(parse_frac(v) for v in d["ehat"])
                if d.get("ehat") is not None else None)
        n = d.get("n")
        P = poly_from_elementary(list(e), n) if (e is not None and n is not None) else None
        R = (r_poly_from_ehat(list(ehat), n)
             if (ehat is not None and n is not None) else None)
        if R is None:
            alphas = [ln.alpha_exact for ln in lines
                      if ln.mult >= 1 and isinstance(ln.alpha_exact, Fraction)]
            if alphas and len(alphas) == sum(1 for ln in lines if ln.alpha_exact is not INF):
                R = _product_poly(alphas)
        return Configuration(
            kind=d["kind"], lines=tuple(lines),
            precision=d["precision_bits"], m=d.get("m"), mtilde=d.get("mtilde"),
            n=n, q=d.get("q"), seed=d.get("seed"), e=e, ehat=ehat, P=P, R=R,
            e_branch_sign=d.get("e_branch_sign"),
        )

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=2, sort_keys=True)

    @staticmethod
    def load(path: str) -> "Configuration":
        with open(path) as fh:
            return Configuration.from_json_dict(json.load(fh))

    def digest(self) -> str:
        blob = json.dumps(self.to_json_dict(), sort_keys=True,
                          separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()


def _product_poly(alphas: Sequence[Fraction]) -> DensePoly:
    out = DensePoly.rational([1])
    for a in alphas:
        out = out * DensePoly([-Fraction(a), Fraction(1)])
    return out


def _check_distinct_angles(phis, precision: int) -> None:
    tol = mp.mpf(2) ** (-(precision // 2))
    s = sorted(phis)
    for a, b in zip(s, s[1:]):
        if abs(b - a) < tol:
            raise CollisionError(f"two lines coincide near phi = {mp.nstr(a, 10)}")
    if s and (s[0] + mp.pi) - s[-1] < tol:
        raise CollisionError("two lines coincide across the pi wrap")


def _lines_from_poly_roots(P: DensePoly, precision: int) -> List[Line]:
    roots = poly_roots(P, precision)
    lines = []
    for z in roots:
        arg = mp.arg(z)
        if arg < 0:
            arg += 2 * mp.pi
        lines.append(Line(mult=1, phi=arg / 2, alpha_exact=None))
    return lines


def build_am1n(m: int, n: int, precision: int = 256) -> Configuration:
    """The unique real arrangement with one multiplicity-m line at phi = 0
    and n multiplicity-1 lines, fixed by its elementary symmetric values."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    check_precision(precision)
    e = e_values(m, n)
    ehat = ehat_values(m, n)
    P = poly_from_elementary(e, n)
    R = r_poly_from_ehat(ehat, n)
    with working(precision):
        lines = [Line(mult=m, phi=mp.mpf(0), alpha_exact=INF)]
        lines += _lines_from_poly_roots(P, precision)
        lines.sort(key=lambda ln: ln.phi)
        _check_distinct_angles([ln.phi for ln in lines], precision)
    return Configuration(kind="am1n", lines=tuple(lines), precision=precision,
                         m=m, mtilde=None, n=n, e=tuple(e), ehat=tuple(ehat),
                         P=P, R=R)


def _two_mult_recurrence(m: int, mt: int, n: int, sign: int) -> List[Fraction]:
    """e_n..e_0 (descending) from the three-term recurrence and seeds."""
    N = n + m + mt - 1
    e = {n: Fraction(1), n - 1: Fraction(sign * (m - mt) * n, N)}
    for k in range(1, n):
        lead = (m + mt + n - k - 1) * (k + 1)
        if lead == 0:
            raise RecurrenceBreakdown(f"leading coefficient vanished at k={k}")
        val = ((m + mt + k - 1) * (k - n - 1) * e[n - k + 1]
               + (n - 2 * k) * (m - mt) * e[n - k])
        e[n - k - 1] = Fraction(-val, lead)
    return [e[j] for j in range(1, n + 1)]


def _first_condition_max_residual(lines: List[Line]):
    """max over multiplicity-1 lines of the k=1 polar sum, relative scale."""
    from .certify import first_condition_residual_lines

    worst = mp.mpf(0)
    for j, ln in enumerate(lines):
        if ln.mult != 1:
            continue
        res = first_condition_residual_lines(lines, j, 1)
        worst = max(worst, res.relative())
    return worst


def build_two_mult(m: int, mt: int, n: int, precision: int = 256) -> Configuration:
    """Arrangement with multiplicity m at phi = 0, mt at phi = pi/2 (omitted
    when mt = 0) and n multiplicity-1 lines produced by the recurrence.

    The seed e_{n-1} has an ambiguous sign; both branches are built and the
    one whose first-order residuals vanish is kept (reported in
    e_branch_sign, as a factor on (m - mt) n / (n + m + mt - 1))."""
    if m < 1 or mt < 0:
        raise ValueError("need m >= 1 and mt >= 0")
    if n < 2 or n % 2 != 0:
        raise ValueError("the two-multiplicity family needs even n >= 2")
    check_precision(precision)

    candidates = [-1] if m != mt else [1]
    if m != mt:
        candidates.append(1)
    best = None
    with working(precision):
        tol = mp.mpf(2) ** (-(precision - 32))
        for sign in candidates:
            e = _two_mult_recurrence(m, mt, n, sign)
            P = poly_from_elementary(e, n)
            lines = [Line(mult=m, phi=mp.mpf(0), alpha_exact=INF)]
            if mt > 0:
                lines.append(Line(mult=mt, phi=mp.pi / 2,
                                  alpha_exact=Fraction(0)))
            lines += _lines_from_poly_roots(P, precision)
            lines.sort(key=lambda ln: ln.phi)
            worst = _first_condition_max_residual(lines)
            if worst < tol:
                best = (sign, e, P, lines)
                break
        if best is None:
            raise NoConvergence(
                f"neither sign branch satisfies the first-order residual test "
                f"for (m, mt, n) = ({m}, {mt}, {n})")
        sign, e, P, lines = best
        _check_distinct_angles([ln.phi for ln in lines], precision)
    return Configuration(kind="twomult", lines=tuple(lines), precision=precision,
                         m=m, mtilde=mt, n=n, e=tuple(e), P=P,
                         e_branch_sign=sign)


def t_q_expand(c: Configuration, q: int) -> Configuration:
    """Replace each line at phi with the q lines at (phi + pi*s)/q, s = 1..q,
    so that sin(q*phi - phi_i) factors over the expanded angles.

    Exact data transforms too: the multiplicity-1 polynomial becomes
    P(w^q) (roots are the q-th roots of the z_i), computed from power sums.
    Raises CollisionError when two expanded lines coincide."""
    if q < 1:
        raise ValueError("need q >= 1")
    if q == 1:
        return c
    with working(c.precision):
        new_lines = []
        for ln in c.lines:
            for s in range(1, q + 1):
                phi = reduce_angle_mod_pi((ln.phi + mp.pi * s) / q)
                new_lines.append(Line(mult=ln.mult, phi=phi, alpha_exact=None))
        new_lines.sort(key=lambda ln: ln.phi)
        _check_distinct_angles([ln.phi for ln in new_lines], c.precision)

        e = None
        P = None
        if c.e is not None and c.n:
            # q-th roots of the z_i: the J-th power sum is q*p_{J/q} when
            # q | J and 0 otherwise
            n = c.n
            p_sums = power_sums_from_elementary(list(c.e), n)
            big = [Fraction(q) * p_sums[J // q - 1] if J % q == 0 else Fraction(0)
                   for J in range(1, q * n + 1)]
            e = elementary_from_power_sums(big, q * n)
            P = poly_from_elementary(e, q * n)
    return Configuration(kind="qexpanded", lines=tuple(new_lines),
                         precision=c.precision, m=c.m, mtilde=c.mtilde,
                         n=(c.n * q if c.n else None), q=q,
                         e=tuple(e) if e else None, P=P,
                         e_branch_sign=c.e_branch_sign)


def from_alphas(m: int, alphas: Sequence[Fraction], precision: int = 256,
                kind: str = "random", seed: Optional[int] = None) -> Configuration:
    """Type-(m, 1^n) configuration from exact rational slopes.

    The heavy line is (0, 1) in the slope chart (phi = 0 here); each slope
    alpha gives the line with normal angle arccot(alpha)."""
    alphas = [Fraction(a) for a in alphas]
    if len(set(alphas)) != len(alphas):
        raise CollisionError("slopes must be distinct")
    check_precision(precision)
    with working(precision):
        lines = [Line(mult=m, phi=mp.mpf(0), alpha_exact=INF)]
        for a in alphas:
            av = to_mp(a)
            phi = mp.acot(av)
            if phi < 0:
                phi += mp.pi
            lines.append(Line(mult=1, phi=phi, alpha_exact=a))
        lines.sort(key=lambda ln: ln.phi)
        _check_distinct_angles([ln.phi for ln in lines], precision)
    return Configuration(kind=kind, lines=tuple(lines), precision=precision,
                         m=m, n=len(alphas), seed=seed,
                         R=_product_poly(alphas))


def random_type_m1n(m: int, n: int, seed: int, precision: int = 256,
                    max_num: int = 50, max_den: int = 50) -> Configuration:
    """Seeded generic type-(m, 1^n) configuration with rational slopes
    drawn from {p/q : 1 <= |p| <= max_num, 1 <= q <= max_den}."""
    rng = random.Random(seed)
    alphas: List[Fraction] = []
    seen = set()
    while len(alphas) < n:
        p = rng.randint(1, max_num) * (1 if rng.randint(0, 1) else -1)
        den = rng.randint(1, max_den)
        a = Fraction(p, den)
        if a != 0 and a not in seen:
            seen.add(a)
            alphas.append(a)
    return from_alphas(m, alphas, precision=precision, kind="random", seed=seed)


def general_from_angles(mults: Sequence, phis: Sequence, precision: int = 256) -> Configuration:
    """Configuration from explicit angles (numeric chart only)."""
    check_precision(precision)
    with working(precision):
        lines = []
        for mu, phi in zip(mults, phis):
            phi = reduce_angle_mod_pi(mp.mpf(phi))
            alpha = INF if phi == 0 else None
            lines.append(Line(mult=mu, phi=phi, alpha_exact=alpha))
        lines.sort(key=lambda ln: ln.phi)
        _check_distinct_angles([ln.phi for ln in lines], precision)
    return Configuration(kind="general", lines=tuple(lines), precision=precision)


def perturb_line(c: Configuration, index: int, delta: float) -> Configuration:
    """Copy of c with one angle shifted; exact data no longer applies."""
    with working(c.precision):
        mults = [ln.mult for ln in c.lines]
        phis = [ln.phi + (delta if i == index else 0)
                for i, ln in enumerate(c.lines)]
        return general_from_angles(mults, phis, c.precision)


# --- equivalence of arrangements ---------------------------------------------


def _circular_angle_distance(a, b):
    d = abs(a - b)
    return min(d, abs(mp.pi - d))


def _matched_distance(pairs_a, pairs_b):
    """Max distance after sorting both (phi, mult) lists; inf on mult mismatch."""
    pa = sorted(pairs_a)
    pb = sorted(pairs_b)
    worst = mp.mpf(0)
    for (phi1, m1), (phi2, m2) in zip(pa, pb):
        if m1 != m2:
            return mp.inf
        worst = max(worst, _circular_angle_distance(phi1, phi2))
    return worst


def angle_multiset_distance(c1: Configuration, c2: Configuration):
    """Distance between arrangements modulo rotation.

    Tries every rotation aligning a line of c1 to the first line of c2,
    then reports the smallest max mismatch of the sorted angle multisets;
    equal multiplicity multisets are required."""
    if len(c1) != len(c2):
        return mp.inf
    if sorted(ln.mult for ln in c1.lines) != sorted(ln.mult for ln in c2.lines):
        return mp.inf
    precision = min(c1.precision, c2.precision)
    with working(precision):
        b = [(ln.phi, ln.mult) for ln in c2.lines]
        base = c2.lines[0].phi
        best = mp.inf
        for ref in c1.lines:
            delta = base - ref.phi
            a = [(reduce_angle_mod_pi(ln.phi + delta), ln.mult) for ln in c1.lines]
            best = min(best, _matched_distance(a, b))
        # also the un-rotated comparison
        a0 = [(ln.phi, ln.mult) for ln in c1.lines]
        best = min(best, _matched_distance(a0, b))
        return best
