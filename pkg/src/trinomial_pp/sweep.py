"""Exhaustive parameter sweeps with oracle cross-checks.

The unit of work is one value of a with every b in range.  Units are
evaluated in a process pool and merged in a-order, so the report does not
depend on the number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import __version__
from .fields import GF2n, Tower, format_tower_elem
from .trinomial import (
    TrinomialParams,
    Verdict,
    criterion_thm11,
    criterion_tzlh,
    h_permutes_mu,
    is_pp_bruteforce,
    normalize_b,
    prop21_check,
)

__all__ = ["ORACLES", "SweepConfig", "ConfigError", "run_sweep", "report_json", "report_csv"]


def _thm11(p: TrinomialParams) -> bool:
    return criterion_thm11(normalize_b(p)).is_pp


ORACLES = {
    "brute": is_pp_bruteforce,
    "h-mu": h_permutes_mu,
    "prop21": prop21_check,
    "tzlh": lambda p: criterion_tzlh(p).holds,
    "thm11": _thm11,
}

CSV_COLUMNS = ["n", "a_hex_u", "a_hex_v", "b_hex_u", "b_hex_v", "verdict", "branch",
               "oracle_disagreement"]

# runtime guards (field degree n of F_q)
FULL_B_MAX_N = 8
BASE_B_BRUTE_MAX_N = 7


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    n: int
    b_range: str = "base"
    oracles: tuple[str, ...] = ("brute", "thm11")
    workers: int = 1
    output: str | None = None
    fmt: str = "json"
    pairs: str = "pp"
    mode: str = "cross-check"
    modulus: int | None = None
    k: int | None = None
    force: bool = False

    def validate(self) -> None:
        unknown = set(self.oracles) - ORACLES.keys()
        if unknown:
            raise ConfigError(f"unknown oracles {sorted(unknown)}; choose from {sorted(ORACLES)}")
        if not self.oracles:
            raise ConfigError("no oracle selected")
        if self.mode == "cross-check" and len(self.oracles) < 2:
            raise ConfigError("cross-check mode needs at least two oracles")
        if self.mode not in ("cross-check", "census"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.b_range not in ("base", "full"):
            raise ConfigError(f"b-range must be 'base' or 'full', not {self.b_range!r}")
        if self.fmt not in ("json", "csv"):
            raise ConfigError(f"format must be json or csv, not {self.fmt!r}")
        if self.pairs not in ("pp", "all", "disagreements"):
            raise ConfigError(f"pairs must be pp, all or disagreements, not {self.pairs!r}")
        if self.workers < 1:
            raise ConfigError("workers must be positive")
        if not self.force:
            if self.b_range == "full" and self.n > FULL_B_MAX_N:
                raise ConfigError(f"full-b sweeps above n={FULL_B_MAX_N} need --force")
            if self.b_range == "base" and "brute" in self.oracles and self.n > BASE_B_BRUTE_MAX_N:
                raise ConfigError(
                    f"base-field brute-force sweeps above n={BASE_B_BRUTE_MAX_N} need --force")


@dataclass
class PairRow:
    a: int
    b: int
    verdicts: dict[str, bool]
    branch: str | None
    a_in_base_after_normalization: bool

    @property
    def verdict(self) -> bool:
        return next(iter(self.verdicts.values()))

    @property
    def disagreement(self) -> bool:
        return len(set(self.verdicts.values())) > 1


@dataclass
class UnitResult:
    total: int = 0
    pp: int = 0
    branch_i: int = 0
    branch_ii: int = 0
    pp_a_outside_base: int = 0
    disagreements: int = 0
    rows: list = field(default_factory=list)


_CTX: dict = {}


def _init_worker(n: int, modulus: int | None, k: int | None) -> None:
    _CTX["tower"] = Tower(GF2n(n, modulus), k)


def _unit(args) -> UnitResult:
    a, b_range, oracles, keep = args
    T: Tower = _CTX["tower"]
    bs = T.base.nonzero() if b_range == "base" else T.nonzero()
    out = UnitResult()
    order = ("brute",) + tuple(o for o in oracles if o != "brute") if "brute" in oracles else oracles
    for b in bs:
        p = TrinomialParams(T, a, b)
        verdicts = {name: ORACLES[name](p) for name in order}
        row = PairRow(a, b, verdicts, None, False)
        out.total += 1
        if row.verdict:
            norm = normalize_b(p)
            v = criterion_thm11(norm).verdict
            row.branch = {Verdict.PP_BRANCH_I: "i", Verdict.PP_BRANCH_II: "ii"}.get(v)
            row.a_in_base_after_normalization = T.in_base(norm.a)
            out.pp += 1
            out.branch_i += row.branch == "i"
            out.branch_ii += row.branch == "ii"
            out.pp_a_outside_base += not row.a_in_base_after_normalization
        if row.disagreement:
            out.disagreements += 1
        if keep == "all" or (keep == "pp" and row.verdict) or row.disagreement:
            out.rows.append(row)
    return out


def run_sweep(cfg: SweepConfig) -> dict:
    """Run a sweep; returns the report as a dict with a separate ``runtime`` entry."""
    cfg.validate()
    t0 = time.perf_counter()
    tower = Tower(GF2n(cfg.n, cfg.modulus), cfg.k)
    units = [(a, cfg.b_range, cfg.oracles, cfg.pairs) for a in tower.nonzero()]
    if cfg.workers == 1:
        _init_worker(cfg.n, cfg.modulus, cfg.k)
        results = [_unit(u) for u in units]
    else:
        chunk = max(1, len(units) // (cfg.workers * 8))
        with ProcessPoolExecutor(cfg.workers, initializer=_init_worker,
                                 initargs=(cfg.n, tower.base.modulus, tower.k)) as ex:
            results = list(ex.map(_unit, units, chunksize=chunk))
    elapsed = time.perf_counter() - t0

    summary = UnitResult()
    rows = []
    for r in results:
        for name in ("total", "pp", "branch_i", "branch_ii", "pp_a_outside_base", "disagreements"):
            setattr(summary, name, getattr(summary, name) + getattr(r, name))
        rows.extend(r.rows)
    fmt = lambda x: format_tower_elem(tower, x)
    counts = {k: v for k, v in asdict(summary).items() if k != "rows"}
    return {
        "tool": "trinomial-pp",
        "version": __version__,
        "config": {
            "n": cfg.n,
            "q": tower.q,
            "modulus": f"{tower.base.modulus:x}",
            "k": f"{tower.k:x}",
            "b_range": cfg.b_range,
            "oracles": list(cfg.oracles),
            "mode": cfg.mode,
            "pairs": cfg.pairs,
        },
        "summary": counts,
        "equivalence_holds": summary.disagreements == 0,
        "disagreements": [_row_json(r, fmt) for r in rows if r.disagreement],
        "pairs": [_row_json(r, fmt) for r in rows if cfg.pairs != "disagreements"],
        "_rows": rows,
        "runtime": {"workers": cfg.workers, "seconds": round(elapsed, 3)},
    }


def _row_json(r: PairRow, fmt) -> dict:
    return {
        "a": fmt(r.a),
        "b": fmt(r.b),
        "verdict": "PP" if r.verdict else "NotPP",
        "branch": r.branch,
        "oracles": r.verdicts,
        "disagreement": r.disagreement,
    }


def report_json(report: dict, timing: bool = False) -> str:
    body = {k: v for k, v in report.items() if not k.startswith("_") and k != "runtime"}
    if timing:
        body["runtime"] = report["runtime"]
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def report_csv(report: dict) -> str:
    n = report["config"]["n"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report["_rows"]:
        mask = (1 << n) - 1
        w.writerow([
            n,
            f"{r.a & mask:x}", f"{r.a >> n:x}",
            f"{r.b & mask:x}", f"{r.b >> n:x}",
            "PP" if r.verdict else "NotPP",
            r.branch or "",
            int(r.disagreement),
        ])
    return buf.getvalue()
