"""Darboux-Crum chains and their exact trigonometric-polynomial identities.

A chain for parameters (m, mt, n) consists of functions chi_j = sin(k_j phi)
with the level ladder

    k_j = j                      j = 1 .. m - mt
    k_{m-mt+j} = m - mt + 2j     j = 1 .. mt - 1
    k_m = mt + m + n

(for mt = 0 the ladder degenerates to 1..m-1 plus m+n).  Its Wronskian W
reproduces, exactly as Laurent-polynomial identities:

  factorization:  W = nu^-1 * Q(phi) * cos^(mt(mt+1)/2) * sin^(m(m+1)/2)
  potential:      -2 (log W)'' equals the singular potential of the arrangement
  eigenfunction:  Q solves its second-order equation with eigenvalue
                  n (2(m + mt) + n)

where Q(phi) = (prod (u^2 - z_j)) u^-n is assembled from the exact elementary
symmetric values of the configuration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .config import Configuration
from .errors import IdentityFailed, InvalidOrder, MissingExactData
from .scalars import frac_str
from .trig import TrigPoly, require_identity, wronskian


def darboux_levels(m: int, mt: int, n: int) -> List[int]:
    """Strictly increasing frequency ladder of length m (empty for m = 0)."""
    if m < mt:
        raise InvalidOrder(f"need m >= mt, got m={m} < mt={mt}; "
                           "rotate the configuration by pi/2 first")
    if m < 0:
        raise ValueError("need m >= 0")
    if n < 0 or (mt >= 1 and n % 2 != 0):
        raise ValueError("the two-multiplicity ladder needs even n >= 0")
    if m == 0:
        return []
    if mt == 0:
        levels = list(range(1, m)) + [m + n]
    else:
        levels = list(range(1, m - mt + 1))
        levels += [m - mt + 2 * j for j in range(1, mt)]
        levels += [mt + m + n]
    assert len(levels) == m
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise InvalidOrder(f"levels {levels} are not strictly increasing")
    return levels


@dataclass(frozen=True)
class DarbouxChain:
    m: int
    mt: int
    n: int
    q: int
    levels: Tuple[int, ...]
    chis: Tuple[TrigPoly, ...]
    W: TrigPoly


def build_chain(m: int, mt: int, n: int, q: int = 1) -> DarbouxChain:
    """Chain with frequencies q * k_j and its exact Wronskian."""
    if q < 1:
        raise ValueError("need q >= 1")
    levels = darboux_levels(m, mt, n)
    chis = tuple(TrigPoly.sin(q * k) for k in levels)
    W = wronskian(list(chis)) if chis else TrigPoly.const(1)
    return DarbouxChain(m=m, mt=mt, n=n, q=q, levels=tuple(levels),
                        chis=chis, W=W)


def nu_constant(chain: DarbouxChain) -> Fraction:
    """nu = 2^(-mt(mt+1)/2 - m(m-1)/2) (-1)^(m(m-1)/2) prod_{p>q} (k_p - k_q)^-1."""
    m, mt = chain.m, chain.mt
    expo = mt * (mt + 1) // 2 + m * (m - 1) // 2
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    nu = Fraction(sign, 2 ** expo)
    for b in range(len(chain.levels)):
        for a in range(b):
            nu /= chain.levels[b] - chain.levels[a]
    return nu


def q_trig(config: Configuration) -> TrigPoly:
    """Q(phi) = sum_k (-1)^k e_k u^(n - 2k) from the exact elementary values."""
    if config.e is None or config.n is None:
        raise MissingExactData("configuration carries no exact e values")
    n = config.n
    full = [Fraction(1)] + list(config.e)
    out = {}
    for k in range(0, n + 1):
        sign = 1 if k % 2 == 0 else -1
        out[n - 2 * k] = out.get(n - 2 * k, Fraction(0)) + sign * full[k]
    return TrigPoly({l: c for l, c in out.items()})


@dataclass(frozen=True)
class OperatorData:
    """Singular Schroedinger data of an arrangement: pole strengths at the
    two axes, the simple-pole angles, Q, and the eigenvalue of the
    boundary-weighted eigenfunction Q * cos^mt * sin^m."""

    m: int
    mt: int
    n: int
    Q: TrigPoly
    pole_angles: Tuple[object, ...]
    epsilon_squared: Fraction  # e_n

    @property
    def sin_strength(self) -> int:
        return self.m * (self.m + 1)

    @property
    def cos_strength(self) -> int:
        return self.mt * (self.mt + 1)

    @property
    def eigenvalue(self) -> int:
        return (self.n + self.m + self.mt) ** 2


def operator_data(config: Configuration) -> OperatorData:
    m = config.m
    mt = config.mtilde or 0
    n = config.n
    if m is None or n is None or config.e is None:
        raise MissingExactData("operator data needs (m, mt, n) and exact e")
    poles = [ln.phi for ln in config.mult1_lines()
             if not (mt >= 1 and ln.alpha_exact == Fraction(0))]
    return OperatorData(m=m, mt=mt, n=n, Q=q_trig(config),
                        pole_angles=tuple(poles),
                        epsilon_squared=Fraction(config.e[-1]))


def _check_chain_matches(chain: DarbouxChain, config: Configuration) -> None:
    if chain.q != 1:
        raise ValueError("identity checks run on the q = 1 chain")
    m = config.m
    mt = config.mtilde or 0
    if (chain.m, chain.mt) != (m, mt) or chain.n != config.n:
        raise ValueError(f"chain ({chain.m},{chain.mt},{chain.n}) does not "
                         f"match configuration ({m},{mt},{config.n})")


def verify_factorization(chain: DarbouxChain, config: Configuration) -> bool:
    """W = nu^-1 Q(phi) cos^(mt(mt+1)/2) sin^(m(m+1)/2), exactly."""
    _check_chain_matches(chain, config)
    m, mt = chain.m, chain.mt
    nu = nu_constant(chain)
    rhs = (q_trig(config)
           * (TrigPoly.cos(1) ** (mt * (mt + 1) // 2))
           * (TrigPoly.sin(1) ** (m * (m + 1) // 2))).scale(1 / nu)
    return require_identity(chain.W, rhs, "Wronskian factorization")


def verify_potential(chain: DarbouxChain, config: Configuration) -> bool:
    """-2 (log W)'' equals the singular potential, after clearing denominators:

    -2 (W'' W - W'^2) sin^2 cos^2 Q^2
        = W^2 [ m(m+1) cos^2 Q^2 + mt(mt+1) sin^2 Q^2
                + 2 sin^2 cos^2 (Q'^2 - Q'' Q) ]."""
    _check_chain_matches(chain, config)
    m, mt = chain.m, chain.mt
    W = chain.W
    Q = q_trig(config)
    W1, Q1 = W.dphi(), Q.dphi()
    W2, Q2 = W1.dphi(), Q1.dphi()
    sin2 = TrigPoly.sin(1) ** 2
    cos2 = TrigPoly.cos(1) ** 2
    Qsq = Q * Q
    lhs = (W2 * W - W1 * W1) * sin2 * cos2 * Qsq * (-2)
    inner = (cos2 * Qsq).scale(m * (m + 1)) + (sin2 * Qsq).scale(mt * (mt + 1)) \
        + (sin2 * cos2 * (Q1 * Q1 - Q2 * Q)) * 2
    rhs = W * W * inner
    return require_identity(lhs, rhs, "transformed potential")


def verify_eigen(config: Configuration) -> bool:
    """sin cos Q'' + 2 (m cos^2 - mt sin^2) Q' + n(2(m+mt)+n) sin cos Q = 0."""
    m = config.m
    mt = config.mtilde or 0
    n = config.n
    if m is None or n is None:
        raise MissingExactData("eigen check needs the (m, mt, n) parameters")
    Q = q_trig(config)
    Q1 = Q.dphi()
    Q2 = Q1.dphi()
    sc = TrigPoly.sin(1) * TrigPoly.cos(1)
    coeff = (TrigPoly.cos(1) ** 2).scale(m) - (TrigPoly.sin(1) ** 2).scale(mt)
    lhs = sc * Q2 + coeff * Q1 * 2 + sc.scale(n * (2 * (m + mt) + n)) * Q
    return require_identity(lhs, TrigPoly.zero(), "eigenfunction equation")


def q_scaling_check(chain: DarbouxChain, q: int) -> bool:
    """W_q(phi) = q^(m(m-1)/2) W_1(q phi) as exact TrigPolys."""
    if chain.q != 1:
        raise ValueError("scaling check starts from the q = 1 chain")
    if q < 1:
        raise ValueError("need q >= 1")
    scaled = build_chain(chain.m, chain.mt, chain.n, q=q)
    expected = chain.W.subs_power(q).scale(Fraction(q) ** (chain.m * (chain.m - 1) // 2))
    return require_identity(scaled.W, expected, f"q = {q} frequency scaling")


def chain_report(chain: DarbouxChain, config: Configuration,
                 q_values: Tuple[int, ...] = (2, 3)) -> dict:
    """Run all identity checks; report per-identity outcomes."""
    out = {
        "m": chain.m, "mt": chain.mt, "n": chain.n,
        "levels": list(chain.levels),
        "nu": frac_str(nu_constant(chain)),
    }

    def run(name, fn):
        try:
            fn()
            out[name] = "exact-pass"
        except IdentityFailed as ex:
            out[name] = f"fail: {ex}"

    run("factorization", lambda: verify_factorization(chain, config))
    run("potential", lambda: verify_potential(chain, config))
    run("eigen", lambda: verify_eigen(config))
    for q in q_values:
        run(f"q_scaling_{q}", lambda q=q: q_scaling_check(chain, q))
    return out


def report_to_json(report: dict, path: Optional[str] = None) -> str:
    text = json.dumps(report, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text
