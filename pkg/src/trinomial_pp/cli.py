"""Command-line entry point.

Exit codes: 0 all checks pass, 1 a mathematical disagreement or failed
check, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .fields import GF2n, ReducibleModulusError, Tower, format_tower_elem, parse_tower_elem
from .sweep import ORACLES, ConfigError, SweepConfig, report_csv, report_json, run_sweep
from .symf2.identities import SECTIONS, basefield_resultant_factorization, numeric_shadow, verify_all
from .trinomial import (
    DomainError,
    PreconditionError,
    TraceObstruction,
    TrinomialParams,
    build_curve,
    construct_D,
    criterion_thm11,
    criterion_tzlh,
    cubic_root_count,
    curve_point_count,
    is_pp_bruteforce,
    normalize_b,
    williams_predicate,
)

log = logging.getLogger("trinomial_pp")

OK, DISAGREE, USAGE = 0, 1, 2

SECTION_ALIASES = {"3": "general", "4": "basefield"}


class UsageError(Exception):
    pass


def _hex(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex value: {text!r}") from None


def _tower(args) -> Tower:
    try:
        return Tower(GF2n(args.n, args.modulus), args.k)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _base_elem(tower: Tower, text: str, what: str) -> int:
    x = _tower_elem(tower, text, what)
    if not tower.in_base(x):
        raise UsageError(f"{what} must lie in the base field")
    return x


def _tower_elem(tower: Tower, text: str, what: str) -> int:
    try:
        return parse_tower_elem(tower, text)
    except ValueError as e:
        raise UsageError(f"{what}: {e}") from None


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------------

def cmd_classify(args) -> int:
    T = _tower(args)
    a = _tower_elem(T, args.a, "a")
    b = _tower_elem(T, args.b, "b")
    if a == 0 or b == 0:
        raise UsageError("a and b must be nonzero")
    fmt = lambda x: format_tower_elem(T, x)
    params = TrinomialParams(T, a, b)
    norm = normalize_b(params)
    cls = criterion_thm11(norm)
    tz = criterion_tzlh(params)
    verdicts = {"thm11": cls.is_pp, "tzlh": tz.holds}
    if args.oracle:
        verdicts["brute"] = is_pp_bruteforce(params)
    agree = len(set(verdicts.values())) == 1
    _emit({
        "field": {"n": T.n, "modulus": f"{T.base.modulus:x}", "k": f"{T.k:x}"},
        "input": {"a": fmt(a), "b": fmt(b)},
        "normalized": {"a": fmt(norm.a), "b": fmt(norm.b)},
        "verdict": cls.verdict.value,
        "diagnostics": {
            "b_in_base_field": T.in_base(b),
            "traces": cls.traces,
            "failed": cls.failed,
            "norm_relation": tz.norm_relation,
            "b_norm_is_one": tz.b_norm_is_one,
            "norm_trace": tz.trace_value,
        },
        "oracles": verdicts,
        "agree": agree,
    })
    return OK if agree else DISAGREE


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        n=args.n,
        b_range=args.b_range,
        oracles=tuple(o.strip() for o in args.oracles.split(",") if o.strip()),
        workers=args.workers,
        output=args.output,
        fmt=args.format,
        pairs=args.pairs,
        mode=args.mode,
        modulus=args.modulus,
        k=args.k,
        force=args.force,
    )
    try:
        report = run_sweep(cfg)
    except (ConfigError, ReducibleModulusError) as e:
        raise UsageError(str(e)) from None
    text = report_csv(report) if cfg.fmt == "csv" else report_json(report, timing=args.timing)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    log.info("sweep finished: %s", json.dumps(report["runtime"]))
    return OK if report["equivalence_holds"] else DISAGREE


def cmd_verify_identities(args) -> int:
    if args.section == "all":
        sections = ("general", "basefield", "appendix")
    else:
        sections = (SECTION_ALIASES.get(args.section, args.section),)
    if args.as_printed or args.section == "printed":
        sections = tuple(dict.fromkeys(sections + ("printed",)))
    try:
        res = verify_all(sections, mutate=args.mutate)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None
    out = []
    for r in res["records"]:
        item = r.to_json()
        if args.shadow and r.passed:
            item["numeric_shadow"] = all(numeric_shadow(r, n, args.shadow_trials) for n in (3, 4))
        out.append(item)
    _emit(out, args.output)
    if "basefield" in sections:
        log.info("base-field bottom eliminant factorization: %s",
                 basefield_resultant_factorization())
    bad = [r for r in res["records"] if r.section != "printed" and not r.passed]
    shadow_bad = [o for o in out if o.get("numeric_shadow") is False]
    return DISAGREE if bad or shadow_bad else OK


def williams_scan(n: int) -> dict:
    F = GF2n(n)
    dist = {0: 0, 1: 0, 3: 0}
    violations = []
    for alpha in F.elements():
        for beta in F.nonzero():
            c = cubic_root_count(F, alpha, beta)
            dist[c] += 1
            if (c == 1) != (williams_predicate(F, alpha, beta) == 1):
                violations.append([f"{alpha:x}", f"{beta:x}"])
    return {
        "n": n,
        "modulus": f"{F.modulus:x}",
        "pairs": F.q * (F.q - 1),
        "violations": len(violations),
        "violating_pairs": violations,
        "root_count_distribution": {str(k): v for k, v in dist.items()},
    }


def cmd_williams(args) -> int:
    if args.n > 8 and not args.force:
        raise UsageError("williams scans above n=8 need --force")
    rep = williams_scan(args.n)
    _emit(rep)
    return OK if rep["violations"] == 0 else DISAGREE


def cmd_curve(args) -> int:
    T = _tower(args)
    F = T.base
    a1 = _base_elem(T, args.a1, "a1")
    b = _base_elem(T, args.b, "b")
    k = _base_elem(T, args.curve_k, "k") if args.curve_k is not None else T.k
    try:
        curve = build_curve(F, a1, b, k)
    except (PreconditionError, DomainError) as e:
        raise UsageError(str(e)) from None
    count = curve_point_count(curve)
    checks = {
        "gcd_PQ_is_one": curve.P.gcd(curve.Q).degree == 0,
        "count_even": count % 2 == 0,
        "smooth": True,  # curve_point_count raises otherwise
        "deg_P_le_4": curve.P.degree <= 4,
        "deg_Q_le_4": curve.Q.degree <= 4,
    }
    _emit({
        "field": {"n": F.n, "modulus": f"{F.modulus:x}"},
        "a1": f"{a1:x}", "b": f"{b:x}", "k": f"{k:x}",
        "P": [f"{c:x}" for c in curve.P.coeffs],
        "Q": [f"{c:x}" for c in curve.Q.coeffs],
        "point_count": count,
        "lower_bound_2(q-2)": 2 * (F.q - 2),
        "checks": checks,
    })
    return OK if all(checks.values()) else DISAGREE


def cmd_construct_d(args) -> int:
    T = _tower(args)
    F = T.base
    a = _base_elem(T, args.a, "a")
    b = _base_elem(T, args.b, "b")
    if a == 0 or b == 0:
        raise UsageError("a and b must be nonzero")
    try:
        w = construct_D(F, a, b, T.k)
    except TraceObstruction as e:
        _emit({"a": f"{a:x}", "b": f"{b:x}", "k": f"{T.k:x}", "obstruction": str(e),
               "trace_F4_over_E2_squared": e.trace_value})
        return DISAGREE
    except (PreconditionError, DomainError) as e:
        raise UsageError(str(e)) from None
    _emit({"a": f"{a:x}", "b": f"{b:x}", "k": f"{T.k:x}",
           "D2": f"{w.D2:x}", "D1": f"{w.D1:x}", "D0": f"{w.D0:x}", "checks": w.checks})
    return OK if all(w.checks.values()) else DISAGREE


# -- parser ------------------------------------------------------------------------------

def _field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="degree of F_q over F_2")
    p.add_argument("--modulus", type=_hex, default=None,
                   help="irreducible modulus as hex (default: smallest irreducible)")
    p.add_argument("--k", type=_hex, default=None,
                   help="tower constant with Tr(k)=1 (default: smallest such)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trinomial-pp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one pair (a, b)")
    _field_args(p)
    p.add_argument("--a", required=True, help="hex, <hex>+<hex>*z, or n:..,mod:..,val:..")
    p.add_argument("--b", required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="exhaustive sweep with oracle cross-checks")
    _field_args(p)
    p.add_argument("--b-range", choices=["base", "full"], default="base")
    p.add_argument("--oracles", default="brute,thm11",
                   help=f"comma-separated subset of {','.join(ORACLES)}")
    p.add_argument("--mode", choices=["cross-check", "census"], default="cross-check")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--pairs", choices=["pp", "all", "disagreements"], default="pp")
    p.add_argument("--timing", action="store_true", help="embed runtime in the JSON report")
    p.add_argument("--force", action="store_true", help="override runtime guards")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify-identities", help="run the symbolic identity suite")
    p.add_argument("--section", default="all",
                   choices=["all", *SECTIONS, *SECTION_ALIASES])
    p.add_argument("--as-printed", "--paper-as-printed", dest="as_printed", action="store_true",
                   help="include the typeset forms that are expected to fail")
    p.add_argument("--shadow", action="store_true",
                   help="also check each passing identity numerically in GF(8) and GF(16)")
    p.add_argument("--shadow-trials", type=int, default=100)
    p.add_argument("--mutate", default=None, help="inject a fault into one named record")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("williams", help="scan X^3+aX+b root counts against the trace predicate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_williams)

    p = sub.add_parser("curve", help="build the curve for a outside the base field")
    _field_args(p)
    p.add_argument("--a1", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--curve-k", default=None, help="curve parameter k (default: tower k)")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("construct-d", help="build the factorization witness D")
    _field_args(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_construct_d)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
