"""Batch command-line front end.

Subcommands: construct, certify, hilbert, scan.  Machine-readable output
only (JSON/CSV).  Exit codes: 0 success or verified pass, 1 verified fail,
2 usage error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

import mpmath as mp

from . import __version__
from .config import (Configuration, build_am1n, build_two_mult,
                     random_type_m1n, t_q_expand)
from .certify import certify_ba
from .darboux import build_chain, chain_report
from .errors import BalinesError, CollisionError
from .locus import solve_general_locus
from .quasi import (am1n_hilbert_numerator, hilbert_coefficients,
                    hilbert_rational_form, is_gorenstein, m1n_parameters,
                    r_parameter)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ERROR = 3


@dataclass
class RunManifest:
    subcommand: str
    params: dict
    seed: Optional[int]
    precision: int
    outputs: List[str]
    version: str = __version__
    wall_clock: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def default_precision() -> int:
    env = os.environ.get("BA_PRECISION")
    return int(env) if env else 256


def parse_range(text: str) -> List[int]:
    """'1..4' -> [1,2,3,4]; '2,4,6' -> [2,4,6]; '3' -> [3]."""
    out: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out


def _write_json(path: Optional[str], payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _threshold(args, precision: int):
    log2 = args.threshold_log2 if args.threshold_log2 is not None else precision - 32
    return mp.mpf(2) ** (-log2)


# --- construct -----------------------------------------------------------------


def cmd_construct(args) -> int:
    precision = args.precision
    t0 = time.perf_counter()
    if args.family == "am1n":
        cfg = build_am1n(args.m, args.n, precision)
    elif args.family == "twomult":
        cfg = build_two_mult(args.m, args.mt, args.n, precision)
    elif args.family == "tq":
        if not args.input:
            print("construct tq needs --input", file=sys.stderr)
            return EXIT_USAGE
        base = Configuration.load(args.input)
        cfg = t_q_expand(base, args.q)
    elif args.family == "random":
        cfg = random_type_m1n(args.m, args.n, args.seed, precision)
    elif args.family == "locus":
        mults = [int(v) if float(v).is_integer() else float(v)
                 for v in args.mults.split(",")]
        cfg = solve_general_locus(mults, precision)
    else:
        return EXIT_USAGE
    elapsed = time.perf_counter() - t0
    if args.output:
        cfg.save(args.output)
        manifest = RunManifest(
            subcommand=f"construct {args.family}",
            params={k: getattr(args, k, None)
                    for k in ("m", "mt", "n", "q", "mults", "input")},
            seed=getattr(args, "seed", None), precision=precision,
            outputs=[args.output], wall_clock={"build": elapsed})
        _write_json(args.output + ".manifest.json", manifest.to_dict())
    else:
        print(json.dumps(cfg.to_json_dict(), indent=2, sort_keys=True))
    return EXIT_PASS


# --- certify ---------------------------------------------------------------------


def cmd_certify(args) -> int:
    precision = args.precision
    if args.input:
        cfg = Configuration.load(args.input)
    elif args.family == "am1n":
        cfg = build_am1n(args.m, args.n, precision)
    elif args.family == "twomult":
        cfg = build_two_mult(args.m, args.mt, args.n, precision)
    elif args.family == "random":
        cfg = random_type_m1n(args.m, args.n, args.seed, precision)
    else:
        print("certify needs --input or --family", file=sys.stderr)
        return EXIT_USAGE
    if args.q and args.q > 1:
        cfg = t_q_expand(cfg, args.q)
    t0 = time.perf_counter()
    cert = certify_ba(cfg, threshold=_threshold(args, cfg.precision))
    payload = cert.to_json_dict()
    payload["manifest"] = RunManifest(
        subcommand="certify",
        params={"input": args.input, "family": args.family,
                "m": args.m, "mt": args.mt, "n": args.n, "q": args.q,
                "threshold_log2": args.threshold_log2},
        seed=args.seed, precision=cfg.precision,
        outputs=[args.output] if args.output else [],
        wall_clock={"certify": time.perf_counter() - t0}).to_dict()
    _write_json(args.output, payload)
    return EXIT_PASS if cert.passed else EXIT_FAIL


# --- hilbert ---------------------------------------------------------------------


def cmd_hilbert(args) -> int:
    precision = args.precision
    if args.input:
        cfg = Configuration.load(args.input)
    elif args.random:
        cfg = random_type_m1n(args.m, args.n, args.seed, precision)
    elif args.m is not None and args.n is not None:
        cfg = build_am1n(args.m, args.n, precision)
    else:
        print("hilbert needs --input, --random, or --m/--n", file=sys.stderr)
        return EXIT_USAGE
    m, n = m1n_parameters(cfg)
    D = args.D if args.D is not None else 2 * m + 2 * n + 4
    t0 = time.perf_counter()
    coeffs = hilbert_coefficients(cfg, D)
    series = hilbert_rational_form(coeffs, m, n)
    gor, M = is_gorenstein(series)
    payload = series.to_json_dict()
    payload["r"] = r_parameter(cfg)
    payload["manifest"] = RunManifest(
        subcommand="hilbert",
        params={"input": args.input, "m": args.m, "n": args.n, "D": D,
                "random": args.random},
        seed=args.seed, precision=cfg.precision,
        outputs=[p for p in (args.output, args.csv) if p],
        wall_clock={"hilbert": time.perf_counter() - t0}).to_dict()
    if args.csv:
        series.save_csv(args.csv)
    _write_json(args.output, payload)
    if args.check_closed_form:
        want = am1n_hilbert_numerator(m, n)
        return EXIT_PASS if list(series.numerator) == want else EXIT_FAIL
    return EXIT_PASS


# --- scan: parallelizable grid items ----------------------------------------------


def _scan_gorenstein_item(item) -> dict:
    m, n, seed, precision = item
    t0 = time.perf_counter()
    if seed is None:
        cfg = build_am1n(m, n, precision)
        expect_gor, expect_crit = True, m + n
    else:
        cfg = random_type_m1n(m, n, seed, precision)
        expect_gor, expect_crit = False, m + n - 1
    coeffs = hilbert_coefficients(cfg, 2 * m + 2 * n + 4)
    series = hilbert_rational_form(coeffs, m, n)
    gor, M = is_gorenstein(series)
    crit = coeffs[2 * (m + n - 1)]
    ok = (gor == expect_gor) and (crit == expect_crit)
    if expect_gor:
        ok = ok and M == 2 - 2 * m - 2 * n
    return {"m": m, "n": n, "seed": seed, "gorenstein": gor, "M": M,
            "critical_coefficient": crit, "ok": ok,
            "seconds": round(time.perf_counter() - t0, 3)}


def _scan_certify_item(item) -> dict:
    family, m, mt, n, q, precision, threshold_log2 = item
    t0 = time.perf_counter()
    try:
        if family == "am1n":
            cfg = build_am1n(m, n, precision)
        else:
            cfg = build_two_mult(m, mt, n, precision)
        if q > 1:
            cfg = t_q_expand(cfg, q)
    except CollisionError as ex:
        return {"family": family, "m": m, "mt": mt, "n": n, "q": q,
                "skipped": f"collision: {ex}", "ok": True,
                "seconds": round(time.perf_counter() - t0, 3)}
    cert = certify_ba(cfg, threshold=mp.mpf(2) ** (-threshold_log2))
    return {"family": family, "m": m, "mt": mt, "n": n, "q": q,
            "verdict": cert.verdict, "ok": cert.passed,
            "max_residual_log2": cert.to_json_dict()["max_residual_log2"],
            "seconds": round(time.perf_counter() - t0, 3)}


def _scan_darboux_item(item) -> dict:
    m, mt, n, qs, precision = item
    t0 = time.perf_counter()
    cfg = build_two_mult(m, mt, n, precision) if mt >= 1 else build_am1n(m, n, precision)
    chain = build_chain(m, mt, n)
    report = chain_report(chain, cfg, q_values=tuple(qs))
    checks = [v for k, v in report.items()
              if k in ("factorization", "potential", "eigen") or k.startswith("q_scaling")]
    report["ok"] = all(v == "exact-pass" for v in checks)
    report["seconds"] = round(time.perf_counter() - t0, 3)
    return report


def _run_items(worker, items, jobs: int) -> List[dict]:
    if jobs <= 1:
        return [worker(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, items))


def cmd_scan(args) -> int:
    precision = args.precision
    t0 = time.perf_counter()
    if args.what == "gorenstein":
        items = []
        for m in parse_range(args.m):
            for n in parse_range(args.n):
                items.append((m, n, None, precision))
                for s in range(args.samples):
                    items.append((m, n, args.seed + s, precision))
        results = _run_items(_scan_gorenstein_item, items, args.jobs)
    elif args.what == "certify":
        thr = args.threshold_log2 if args.threshold_log2 is not None else precision - 32
        items = []
        qs = parse_range(args.q) if args.q else [1]
        if args.family in ("am1n", "tq"):
            for m in parse_range(args.m):
                for n in parse_range(args.n):
                    for q in (qs if args.family == "tq" else [1]):
                        items.append(("am1n", m, 0, n, q, precision, thr))
        if args.family in ("twomult", "tq"):
            mts = parse_range(args.mt) if args.mt else None
            for m in parse_range(args.m):
                for mt in (mts if mts is not None else range(0, m + 1)):
                    for n in parse_range(args.n):
                        if n % 2 != 0:
                            continue  # the two-heavy-line family needs even n
                        for q in (qs if args.family == "tq" else [1]):
                            items.append(("twomult", m, mt, n, q, precision, thr))
        results = _run_items(_scan_certify_item, items, args.jobs)
    elif args.what == "darboux":
        qs = parse_range(args.q) if args.q else [2, 3]
        items = []
        for m in parse_range(args.m):
            mts = parse_range(args.mt) if args.mt else range(0, m + 1)
            for mt in mts:
                if mt > m:
                    continue
                for n in parse_range(args.n):
                    if mt >= 1 and n % 2 != 0:
                        continue
                    items.append((m, mt, n, qs, precision))
        results = _run_items(_scan_darboux_item, items, args.jobs)
    else:
        return EXIT_USAGE

    all_ok = all(r.get("ok") for r in results)
    payload = {
        "scan": args.what,
        "all_pass": all_ok,
        "items": results,
        "manifest": RunManifest(
            subcommand=f"scan {args.what}",
            params={k: getattr(args, k, None)
                    for k in ("m", "mt", "n", "q", "samples", "family",
                              "threshold_log2")},
            seed=args.seed, precision=precision,
            outputs=[args.output] if args.output else [],
            wall_clock={"total": time.perf_counter() - t0}).to_dict(),
    }
    _write_json(args.output, payload)
    return EXIT_PASS if all_ok else EXIT_FAIL


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="balines",
        description="Exact computations for planar line arrangements with "
                    "multiplicities: construction, certification, Hilbert "
                    "series, and Darboux identity checks.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--precision", type=int, default=default_precision(),
                       help="mantissa bits (default 256; env BA_PRECISION)")
        p.add_argument("--threshold-log2", type=int, default=None,
                       help="pass threshold 2^-VALUE (default precision-32)")
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("-o", "--output", default=None)

    pc = sub.add_parser("construct", help="build arrangements")
    pc.add_argument("family", choices=["am1n", "twomult", "tq", "random", "locus"])
    pc.add_argument("--m", type=int)
    pc.add_argument("--mt", type=int, default=0)
    pc.add_argument("--n", type=int)
    pc.add_argument("--q", type=int, default=1)
    pc.add_argument("--mults", default=None, help="comma list for locus")
    pc.add_argument("--input", default=None, help="base configuration for tq")
    common(pc)
    pc.set_defaults(func=cmd_construct)

    pk = sub.add_parser("certify", help="existence-condition certificates")
    pk.add_argument("--input", default=None)
    pk.add_argument("--family", choices=["am1n", "twomult", "random"], default=None)
    pk.add_argument("--m", type=int)
    pk.add_argument("--mt", type=int, default=0)
    pk.add_argument("--n", type=int)
    pk.add_argument("--q", type=int, default=1)
    common(pk)
    pk.set_defaults(func=cmd_certify)

    ph = sub.add_parser("hilbert", help="Hilbert series and Gorenstein test")
    ph.add_argument("--input", default=None)
    ph.add_argument("--random", action="store_true")
    ph.add_argument("--m", type=int)
    ph.add_argument("--n", type=int)
    ph.add_argument("--D", type=int, default=None)
    ph.add_argument("--csv", default=None)
    ph.add_argument("--check-closed-form", action="store_true")
    common(ph)
    ph.set_defaults(func=cmd_hilbert)

    ps = sub.add_parser("scan", help="aggregate runs over parameter grids")
    ps.add_argument("what", choices=["gorenstein", "certify", "darboux"])
    ps.add_argument("--m", default="1..3")
    ps.add_argument("--mt", default=None)
    ps.add_argument("--n", default="2..5")
    ps.add_argument("--q", default=None)
    ps.add_argument("--samples", type=int, default=20)
    ps.add_argument("--family", choices=["am1n", "twomult", "tq"], default="am1n")
    common(ps)
    ps.set_defaults(func=cmd_scan)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except BalinesError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
