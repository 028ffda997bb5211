"""Batch verification of registry identities and report files."""

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .catalog import iter_lines, parse_params, split_fields, _parse_range
from .closed_forms import calibrate_mrr, rhs
from .ct_integral import dyson_ct, selberg_like, v2_coefficient
from .determinants import det_bareiss, det_condensation, det_laplace
from .families import build, default_grid, list_identities, lookup, point_key
from .scalars import render

__all__ = [
    "Config",
    "Summary",
    "VerificationReport",
    "load_config",
    "verify",
    "verify_all",
    "verify_point",
    "write_report",
]

JOBS_ENV = "DETLAB_JOBS"
ENGINES = ("bareiss", "laplace", "condensation")


@dataclass
class VerificationReport:
    id: str
    point: dict
    lhs: str
    rhs: str
    match: bool
    engine: str
    fallbacks: int = 0
    elapsed_ms: float = 0.0
    mode: str = "check"
    note: str = ""

    def to_json(self, timings: bool = False) -> str:
        d = asdict(self)
        d["point"] = {k: self.point[k] for k in sorted(self.point)}
        if not timings:
            d.pop("elapsed_ms")
        if not self.note:
            d.pop("note")
        return json.dumps(d, sort_keys=True, separators=(",", ":"))


@lru_cache(maxsize=1)
def _mrr_verdict():
    return calibrate_mrr()


def _lhs_special(spec, n):
    kind = spec.entry.special
    args = spec.entry.special_args
    if kind == "dyson":
        return dyson_ct(n, *args), "constant-term"
    if kind == "selberg":
        return selberg_like(n, *args), "moment-integral"
    if kind == "v2coef":
        return v2_coefficient(n), "coefficient"
    raise ValueError(f"unknown special rule {kind}")


def verify_point(identity_id, point, engine: str = "bareiss") -> VerificationReport:
    """Compare determinant (or CT/integral) and closed form at one point."""
    spec = lookup(identity_id)
    params = {k: v for k, v in point.items() if k != "n"}
    n = point["n"]
    t0 = time.perf_counter()
    fallbacks = 0
    if spec.entry.special:
        lhs, used = _lhs_special(spec, n)
    else:
        if engine == "condensation" and spec.condense:
            res = det_condensation(spec.id, n, 0, 0, params, with_report=True)
            lhs, fallbacks, used = res.value, res.fallbacks, "condensation"
        elif engine == "laplace" and n <= 8:
            lhs, used = det_laplace(build(spec.id, n, params)), "laplace"
        else:
            lhs, used = det_bareiss(build(spec.id, n, params)), "bareiss"
    value = rhs(spec.id, n, params)
    elapsed = (time.perf_counter() - t0) * 1000.0
    match = lhs == value
    note = ""
    if spec.mode == "calibration":
        verdict = _mrr_verdict()
        calibrated = rhs(spec.id, n, params, form=1) == lhs
        note = f"{verdict}; calibrated form {'matches' if calibrated else 'differs'}"
    return VerificationReport(spec.id, dict(point), render(lhs), render(value), match, used,
                              fallbacks, round(elapsed, 3), spec.mode, note)


def verify(identity_id, n_range=None, param_ranges=None, engine="bareiss"):
    """Verify one identity over its default grid (optionally overridden)."""
    spec = lookup(identity_id)
    return [verify_point(spec.id, pt, engine) for pt in default_grid(spec, n_range, param_ranges)]


@dataclass
class Config:
    ids: tuple = None
    n_max: int = None
    overrides: dict = field(default_factory=dict)  # id -> (n_range, param_ranges)
    rings: tuple = None
    engine: str = "bareiss"
    jobs: int = None
    out: str = None
    timings: bool = False


def load_config(text: str) -> dict:
    """Grid overrides in catalog syntax: ``I01 | n=1..4 | params=a:0..2``.

    Id ``*`` sets the n range for every identity.
    """
    out = {}
    for line in iter_lines(text):
        ident, f = split_fields(line)
        n_range = _parse_range(f["n"]) if "n" in f else None
        params = {name: (lo, hi) for name, lo, hi in parse_params(f.get("params", "-"))}
        out[ident] = (n_range, params)
    return out


def _tasks(cfg: Config):
    specs = list_identities()
    if cfg.ids:
        wanted = set(cfg.ids)
        unknown = wanted - {s.id for s in specs}
        if unknown:
            raise KeyError(f"unknown identities {sorted(unknown)}")
        specs = [s for s in specs if s.id in wanted]
    if cfg.rings:
        specs = [s for s in specs if s.ring in cfg.rings]
    tasks = []
    for spec in sorted(specs, key=lambda s: s.id):
        n_range, pr = cfg.overrides.get(spec.id, cfg.overrides.get("*", (None, {})))
        lo, hi = n_range or spec.n
        if cfg.n_max is not None:
            hi = min(hi, cfg.n_max)
        if lo > hi:
            continue
        for pt in default_grid(spec, (lo, hi), pr):
            tasks.append((spec.id, pt))
    return tasks


def _run_chunk(chunk, engine):
    return [verify_point(i, pt, engine) for i, pt in chunk]


def default_jobs():
    env = os.environ.get(JOBS_ENV)
    cores = os.cpu_count() or 1
    if env:
        return max(1, min(int(env), cores))
    return cores


@dataclass
class Summary:
    total: int
    matches: int
    mismatches: int
    calibration_findings: int
    per_identity: dict

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def to_json(self) -> str:
        return json.dumps({"summary": asdict(self)}, sort_keys=True, separators=(",", ":"))


def summarize(reports) -> Summary:
    per = {}
    mism = cal = good = 0
    for r in reports:
        row = per.setdefault(r.id, {"points": 0, "mismatches": 0})
        row["points"] += 1
        if r.match:
            good += 1
        elif r.mode == "calibration":
            cal += 1
            row["mismatches"] += 1
        else:
            mism += 1
            row["mismatches"] += 1
    return Summary(len(reports), good, mism, cal, per)


def write_report(path, reports, summary, timings=False):
    with open(path, "w") as fh:
        for r in reports:
            fh.write(r.to_json(timings) + "\n")
        fh.write(summary.to_json() + "\n")


def verify_all(cfg: Config = None):
    """Run every selected identity over its grid; returns (reports, summary).

    Points are spread over worker processes; results are sorted by identity
    id then parameter point, so the report is identical between runs.
    """
    cfg = cfg or Config()
    tasks = _tasks(cfg)
    jobs = cfg.jobs or default_jobs()
    if jobs <= 1 or len(tasks) < 2:
        reports = _run_chunk(tasks, cfg.engine)
    else:
        size = max(1, len(tasks) // (jobs * 8))
        chunks = [tasks[i:i + size] for i in range(0, len(tasks), size)]
        reports = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_chunk, chunks, [cfg.engine] * len(chunks)):
                reports.extend(part)
    reports.sort(key=lambda r: (r.id, point_key(r.point)))
    summary = summarize(reports)
    if cfg.out:
        write_report(cfg.out, reports, summary, cfg.timings)
    return reports, summary
