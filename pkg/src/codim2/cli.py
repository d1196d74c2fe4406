"""Command-line surface: candidate checks, box scans, reference numbers.

The scanner drives gate_composite over an inclusive box of (n, d, e, s)
tuples in lexicographic order, emitting one row per tuple as CSV or
JSON plus a per-verdict summary on stderr.  Output is deterministic:
the row set, order and bytes do not depend on the worker count.  An
optional figure (rendered to a file next to the delimited output) shows
the verdict geography and the first-failing-gate histogram.

The paper-numbers subcommand re-derives the package's frozen reference
constants (the m(alpha) table, the minimal admissible discriminant at
n = 8, the speciality-bound flip points, the exclusion boxes at n = 6
and 7, the 3n/2 thresholds) and reports each as a named pass/fail item.

Config files for scans are flat key=value text; command-line flags
override file values.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple

from mpmath import ceil as mp_ceil
from mpmath import mpf, sqrt

from .arithmetic import delta_min_search, qr_claim_check, schwarzenberger_check
from .errors import CapExceeded, Codim2Error
from .gates import (
    GATE_ORDER,
    Verdict,
    _sdelta_elliptic_thresholds,
    elliptic_e_lower,
    gate_composite,
    gate_m_alpha,
    gate_speciality,
    gate_u_positivity,
)
from .genus5 import (
    P5Candidate,
    chi_fractional,
    chi_oracle,
    genus_interval,
    mu,
    mu_gate,
)
from .invariants import GateStatus, Invariants, _jsonable, normalize, spectral
from .precision import REPORT_DECIMALS, working_precision
from .series import positivity_series, u_recurrence
from .transcendental import minimize_m, m_table, solve_alpha

CSV_COLUMNS = ("n", "d", "e", "s", "z", "delta", "verdict", "first_fail",
               "u2", "u3", "u4", "alpha")

DEFAULT_CAP = 10**8


def _fmt_real(x, digits: int = REPORT_DECIMALS) -> str:
    with working_precision():
        return f"{float(x):.{digits}f}"


# ---------------------------------------------------------------------------
# scan configuration


def parse_range(text: str) -> Tuple[int, int]:
    """Parse '7' or '1..200' into an inclusive (lo, hi) pair."""
    raw = text.strip()
    if ".." in raw:
        lo_s, hi_s = raw.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(raw)
    if lo > hi:
        raise ValueError(f"empty range {text!r}: lower end exceeds upper end")
    return lo, hi


@dataclass(frozen=True)
class ScanConfig:
    """A box of tuples plus evaluation and output options."""

    n: Tuple[int, int]
    d: Tuple[int, int]
    e: Tuple[int, int]
    s: Tuple[int, int]
    assume_non_ci: bool = True
    gates: Optional[Tuple[str, ...]] = None
    output: Optional[str] = None
    fmt: str = "csv"
    workers: int = 1
    cap: int = DEFAULT_CAP
    plot: Optional[str] = None

    def __post_init__(self):
        for name in ("n", "d", "e", "s"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"empty {name}-range {lo}..{hi}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.fmt!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.gates is not None:
            unknown = [g for g in self.gates if g not in GATE_ORDER]
            if unknown:
                raise ValueError(f"unknown gate ids: {', '.join(unknown)}")

    @property
    def total(self) -> int:
        size = 1
        for name in ("n", "d", "e", "s"):
            lo, hi = getattr(self, name)
            size *= hi - lo + 1
        return size

    def tuples(self) -> Iterator[Tuple[int, int, int, int]]:
        for n in range(self.n[0], self.n[1] + 1):
            for d in range(self.d[0], self.d[1] + 1):
                for e in range(self.e[0], self.e[1] + 1):
                    for s in range(self.s[0], self.s[1] + 1):
                        yield (n, d, e, s)


def load_config_file(path: str) -> dict:
    """Read a flat key=value config file; '#' starts a comment line."""
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = stripped.partition("=")
            values[key.strip()] = value.strip()
    return values


_TRUE_WORDS = {"1", "true", "yes", "on"}
_FALSE_WORDS = {"0", "false", "no", "off"}


def parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in _TRUE_WORDS:
        return True
    if lowered in _FALSE_WORDS:
        return False
    raise ValueError(f"not a boolean: {text!r}")


def build_scan_config(file_values: dict, flag_values: dict) -> ScanConfig:
    """Merge config-file values with flags; flags win."""
    merged = dict(file_values)
    for key, value in flag_values.items():
        if value is not None:
            merged[key] = value
    missing = [k for k in ("n", "d", "e", "s") if k not in merged]
    if missing:
        raise ValueError(f"missing required range(s): {', '.join(missing)}")

    def _range(key):
        v = merged[key]
        return v if isinstance(v, tuple) else parse_range(str(v))

    def _get(key, default, conv):
        if key not in merged or merged[key] is None:
            return default
        v = merged[key]
        return v if not isinstance(v, str) else conv(v)

    gates = merged.get("gates")
    if isinstance(gates, str):
        gates = tuple(g.strip() for g in gates.split(",") if g.strip())
    return ScanConfig(
        n=_range("n"),
        d=_range("d"),
        e=_range("e"),
        s=_range("s"),
        assume_non_ci=_get("assume_non_ci", True, parse_bool),
        gates=gates,
        output=merged.get("output"),
        fmt=_get("format", "csv", str),
        workers=_get("workers", 1, int),
        cap=_get("cap", DEFAULT_CAP, int),
        plot=merged.get("plot"),
    )


# ---------------------------------------------------------------------------
# scan execution


@dataclass(frozen=True)
class ScanRow:
    n: int
    d: int
    e: int
    s: int
    z: int
    delta: int
    verdict: str
    first_fail: str
    u2: int
    u3: int
    u4: int
    alpha: str

    def as_record(self) -> Tuple:
        return (self.n, self.d, self.e, self.s, self.z, self.delta,
                self.verdict, self.first_fail, self.u2, self.u3, self.u4,
                self.alpha)


def evaluate_tuple(task) -> ScanRow:
    """Gate one tuple and flatten the result into a row.

    alpha is solved only for Admissible tuples where the defining
    equation applies; a RootOrderViolated or similar leaves the field
    empty rather than failing the row.
    """
    (n, d, e, s), assume_non_ci, gates = task
    inv = Invariants(n, d, e, s)
    nc = normalize(inv)
    gs = gate_composite(inv, assume_non_ci=assume_non_ci, gates=gates)
    useq = u_recurrence(inv, 4)
    alpha = ""
    if gs.overall is Verdict.ADMISSIBLE and inv.z > 0 and s >= 2:
        try:
            sol = solve_alpha(spectral(nc, z=inv.z), inv)
            alpha = _fmt_real(sol.alpha)
        except Codim2Error:
            alpha = ""
    return ScanRow(
        n=n, d=d, e=e, s=s, z=inv.z, delta=nc.delta,
        verdict=gs.overall.value,
        first_fail=gs.first_fail or "-",
        u2=useq[2], u3=useq[3], u4=useq[4],
        alpha=alpha,
    )


def run_scan(cfg: ScanConfig) -> Iterator[ScanRow]:
    """Stream rows in lexicographic tuple order.

    Raises CapExceeded before any evaluation when the box is larger than
    cfg.cap.  With workers > 1 the evaluation is distributed, but the
    order-preserving merge keeps the stream identical to a serial run.
    """
    total = cfg.total
    if total > cfg.cap:
        raise CapExceeded(
            f"box holds {total} tuples, above the cap of {cfg.cap}"
        )
    tasks = ((t, cfg.assume_non_ci, cfg.gates) for t in cfg.tuples())
    if cfg.workers == 1:
        for task in tasks:
            yield evaluate_tuple(task)
        return
    with Pool(processes=cfg.workers) as pool:
        yield from pool.imap(evaluate_tuple, tasks, chunksize=256)


def summarize(rows: Iterable[ScanRow]) -> dict:
    """Counts per verdict and per first-failing gate."""
    verdicts = {v.value: 0 for v in Verdict}
    first_fails = {}
    total = 0
    for row in rows:
        total += 1
        verdicts[row.verdict] += 1
        if row.first_fail != "-":
            first_fails[row.first_fail] = first_fails.get(row.first_fail, 0) + 1
    ordered_fails = {g: first_fails[g] for g in GATE_ORDER if g in first_fails}
    return {"total": total, "verdicts": verdicts, "first_fail": ordered_fails}


def scan_to_stream(cfg: ScanConfig, out: TextIO, err: TextIO) -> dict:
    """Run a scan, writing rows to out and the summary to err."""
    err.write(f"scan: {cfg.total} tuples (cap {cfg.cap})\n")
    err.flush()
    collected: List[ScanRow] = []

    if cfg.fmt == "csv":
        out.write(",".join(CSV_COLUMNS) + "\n")
        for row in run_scan(cfg):
            collected.append(row)
            out.write(",".join(str(v) for v in row.as_record()) + "\n")
    else:
        for row in run_scan(cfg):
            collected.append(row)
        payload = {
            "rows": [dict(zip(CSV_COLUMNS, r.as_record())) for r in collected],
            "summary": summarize(collected),
        }
        json.dump(payload, out, indent=2)
        out.write("\n")

    summary = summarize(collected)
    err.write(
        "scan: total={total} Admissible={a} Excluded={x} Degenerate={g}\n".format(
            total=summary["total"],
            a=summary["verdicts"]["Admissible"],
            x=summary["verdicts"]["Excluded"],
            g=summary["verdicts"]["Degenerate"],
        )
    )
    for gate_id, count in summary["first_fail"].items():
        err.write(f"scan: first-fail {gate_id}: {count}\n")
    if cfg.plot:
        render_scan_figure(collected, cfg.plot)
        err.write(f"scan: figure written to {cfg.plot}\n")
    return summary


# ---------------------------------------------------------------------------
# figures


def render_scan_figure(rows: Sequence[ScanRow], path: str) -> None:
    """Two fixed panels: (d, s) verdict geography, first-fail histogram.

    Rendering is deterministic for a given row sequence: fixed figure
    geometry, fixed colors, no timestamps.
    """
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    colors = {"Admissible": "#2a9d2a", "Excluded": "#c43535",
              "Degenerate": "#7a7a7a"}
    fig = Figure(figsize=(11, 4.5), dpi=110)
    FigureCanvasAgg(fig)
    left = fig.add_subplot(1, 2, 1)
    for verdict, color in colors.items():
        xs = [r.d for r in rows if r.verdict == verdict]
        ys = [r.s for r in rows if r.verdict == verdict]
        if xs:
            left.scatter(xs, ys, s=9, c=color, label=verdict, alpha=0.6,
                         linewidths=0)
    left.set_xlabel("d")
    left.set_ylabel("s")
    left.set_title("verdict by (d, s)")
    left.legend(loc="best", fontsize=8)

    right = fig.add_subplot(1, 2, 2)
    counts = summarize(rows)["first_fail"]
    gate_ids = list(counts)
    right.bar(range(len(gate_ids)), [counts[g] for g in gate_ids],
              color="#3a6ea5")
    right.set_xticks(range(len(gate_ids)))
    right.set_xticklabels(gate_ids, rotation=45, ha="right", fontsize=8)
    right.set_ylabel("tuples")
    right.set_title("first failing gate")
    fig.tight_layout()
    fig.savefig(path)


def render_m_table_figure(table: Sequence[Tuple[int, mpf]], path: str) -> None:
    """Plot m(alpha) against integer alpha."""
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    fig = Figure(figsize=(7, 4.5), dpi=110)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    ax.plot([a for a, _ in table], [float(m) for _, m in table],
            marker="o", markersize=3, color="#3a6ea5")
    ax.set_xlabel("alpha")
    ax.set_ylabel("m(alpha)")
    ax.set_title("minimum of sin(alpha x)/(sin x sin((alpha+1) x))")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)


# ---------------------------------------------------------------------------
# reference-number suite


@dataclass(frozen=True)
class RefItem:
    name: str
    ok: bool
    detail: str
    elapsed: float


def _item(name, fn) -> RefItem:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashed item is a failed item
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    return RefItem(name, ok, detail, time.perf_counter() - start)


M_REFERENCE = ((2, "1.6949"), (3, "2.2845"), (4, "2.8203"), (5, "3.3233"),
               (37, "16.1647"))
M_TOLERANCE = mpf("2e-4")


def _check_m_values():
    problems = []
    shown = []
    for alpha, expected in M_REFERENCE:
        res = minimize_m(alpha)
        shown.append(f"m({alpha})={_fmt_real(res.m_value)}")
        if abs(res.m_value - mpf(expected)) > M_TOLERANCE:
            problems.append(f"m({alpha}) = {res.m_value} vs {expected}")
    with working_precision():
        beta = minimize_m(2).beta
        from mpmath import sin

        closed = (3 - sqrt(3)) / 4
        gap = abs(sin(beta) ** 2 - closed)
        if gap > mpf("1e-12"):
            problems.append(f"sin^2(beta) off the closed form by {gap}")
    if problems:
        return False, "; ".join(problems)
    return True, ", ".join(shown) + "; sin^2(beta) matches (3-sqrt(3))/4"


def _check_delta_min_8():
    result = delta_min_search(8, 200)
    ok = (result.delta == -119
          and result.candidates_checked == 59
          and len(result.per_candidate_log) == 58)
    return ok, (f"delta={result.delta}, candidates={result.candidates_checked}, "
                f"rejections={len(result.per_candidate_log)}")


def _check_elliptic_bound_n8():
    m5 = minimize_m(5).m_value
    with working_precision():
        bound = sqrt(mpf(119)) / 2 * m5
        needed = int(mp_ceil(bound))
    if needed != 19:
        return False, f"ceil((sqrt(119)/2) m(5)) = {needed}, expected 19"
    fail = gate_m_alpha(Invariants(8, 32, -6, 19))
    passed = gate_m_alpha(Invariants(8, 32, -6, 20))
    ok = fail.status is GateStatus.FAIL and passed.status is GateStatus.PASS
    return ok, (f"s-1 >= {_fmt_real(bound)} so s >= 20; gate at s=19 "
                f"{fail.status.value}, s=20 {passed.status.value}")


def _check_z_cap_n5():
    passing = []
    for d in range(21, 41):
        inv = Invariants(5, d, 3, 5)
        if gate_u_positivity(inv).status is GateStatus.PASS:
            passing.append(inv.z)
    ok = passing == [1, 2, 3, 4, 5]
    return ok, f"u-positivity passes exactly for z in {passing} at n=5, s=5, e=3"


def _exclusion_box(n: int) -> ScanConfig:
    return ScanConfig(n=(n, n), d=(1, 200), e=(n + 2, 30), s=(1, n))


def _check_exclusion_boxes():
    details = []
    for n in (6, 7):
        cfg = _exclusion_box(n)
        admissible = sum(
            1 for row in run_scan(cfg) if row.verdict == Verdict.ADMISSIBLE.value
        )
        details.append(f"n={n}: {cfg.total} tuples, {admissible} admissible")
        if admissible:
            return False, "; ".join(details)
    return True, "; ".join(details)


def _check_speciality_flips():
    e_pass = gate_speciality(Invariants(5, 10, 8, 5))
    e_fail = gate_speciality(Invariants(5, 10, 9, 5))
    d_pass = gate_speciality(Invariants(5, 61, 0, 5))
    d_fail = gate_speciality(Invariants(5, 62, 0, 5))
    ok = (e_pass.status is GateStatus.PASS and e_fail.status is GateStatus.FAIL
          and d_pass.status is GateStatus.PASS
          and d_fail.status is GateStatus.FAIL)
    return ok, ("at n=5, s=5: e <= 8 (flip at e=9), d <= 61 (flip at d=62); "
                f"verdicts {e_pass.status.value}/{e_fail.status.value}/"
                f"{d_pass.status.value}/{d_fail.status.value}")


def _least_admissible_s(n: int) -> int:
    """Smallest s not excluded outright by the regime-wide s-bounds at n."""
    bound = (n - 3) ** 2 * (n - 1)
    root = math.isqrt(bound)
    if root * root < bound:
        root += 1
    s_hyperbolic = root + 1
    thr_s, _ = _sdelta_elliptic_thresholds(n)
    s_elliptic_wide = int(mp_ceil(thr_s)) + 1
    s_elliptic_tight = -(-(elliptic_e_lower(n) + n + 1) // 2)
    return min(s_hyperbolic, s_elliptic_wide, s_elliptic_tight)


def _check_cor_3n2():
    details = []
    for n in range(11, 15):
        target = -(-3 * n // 2)
        least = _least_admissible_s(n)
        details.append(f"n={n}: least admissible s={least}, 3n/2 rounds to {target}")
        if least < target:
            return False, "; ".join(details)
    thr10, _ = _sdelta_elliptic_thresholds(10)
    if not thr10 < mpf(14):
        return False, "expected the scaled bound to fall below 3n/2 - 1 at n=10"
    details.append(
        f"n=10 is sharp: (2/pi)(n-3)sqrt(n-1) = {_fmt_real(thr10)} < 14"
    )
    return True, "; ".join(details)


def paper_numbers(out: TextIO = sys.stdout) -> bool:
    """Run every reference-number item; True iff all pass."""
    items = [
        _item("m-table", _check_m_values),
        _item("delta-min-n8", _check_delta_min_8),
        _item("elliptic-s-bound-n8", _check_elliptic_bound_n8),
        _item("z-cap-n5-s5-e3", _check_z_cap_n5),
        _item("exclusion-boxes-n6-n7", _check_exclusion_boxes),
        _item("speciality-flips-n5-s5", _check_speciality_flips),
        _item("three-halves-n-thresholds", _check_cor_3n2),
    ]
    all_ok = True
    for item in items:
        tag = "pass" if item.ok else "FAIL"
        out.write(f"[{tag}] {item.name} ({item.elapsed:.2f}s): {item.detail}\n")
        all_ok = all_ok and item.ok
    out.write("reference numbers: {} of {} items passed\n".format(
        sum(1 for i in items if i.ok), len(items)))
    return all_ok


# ---------------------------------------------------------------------------
# argparse wiring


def _add_check(sub):
    p = sub.add_parser("check", help="run every gate on one candidate tuple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--assume-non-ci", type=parse_bool, default=True,
                   metavar="BOOL")
    p.add_argument("--format", choices=("json", "text"), default="text")


def _add_scan(sub):
    p = sub.add_parser("scan", help="gate every tuple in an inclusive box")
    for name in ("n", "d", "e", "s"):
        p.add_argument(f"--{name}", type=parse_range, default=None,
                       metavar="LO..HI")
    p.add_argument("--assume-non-ci", dest="assume_non_ci", type=parse_bool,
                   default=None, metavar="BOOL")
    p.add_argument("--gates", default=None,
                   help="comma-separated subset of gate ids")
    p.add_argument("--output", default=None, help="path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--config", default=None, help="flat key=value file")
    p.add_argument("--plot", default=None,
                   help="also render a PNG figure to this path")


def _add_simple(sub):
    p = sub.add_parser("series", help="expand the positivity series")
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--c1l", type=int, required=True)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("alpha", help="solve the defining equation for alpha")
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)

    p = sub.add_parser("m-table", help="table of m(alpha) for integer alpha")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--digits", type=int, default=REPORT_DECIMALS)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--plot", default=None,
                   help="also render a PNG figure to this path")

    p = sub.add_parser("schwarzenberger", help="trace-integrality test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)

    p = sub.add_parser("qr", help="square-mod-p discriminant test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)

    p = sub.add_parser("delta-min", help="least admissible |Delta| search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--no-qr-screen", action="store_true")

    p = sub.add_parser("mu", help="sectional-genus window value")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--pi", type=int, required=True)

    p = sub.add_parser("genus-interval", help="admissible sectional-genus window")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = sub.add_parser("chi", help="Euler characteristic of the section ideal")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--pi", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--closed-form", action="store_true",
                   help="also evaluate the fractional closed form")

    sub.add_parser("paper-numbers",
                   help="re-derive and check every frozen reference constant")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codim2",
        description="Exact-arithmetic necessary-condition gates for candidate "
                    "invariants of smooth codimension-two subvarieties of "
                    "projective n-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_check(sub)
    _add_scan(sub)
    _add_simple(sub)
    return parser


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _cmd_check(args) -> int:
    inv = Invariants(args.n, args.d, args.e, args.s)
    gs = gate_composite(inv, assume_non_ci=args.assume_non_ci)
    nc = normalize(inv)
    if args.format == "json":
        payload = {
            "invariants": {"n": inv.n, "d": inv.d, "e": inv.e, "s": inv.s,
                           "z": inv.z, "q": inv.q},
            "normalized": {"c1": nc.c1, "c2": nc.c2, "delta": nc.delta},
        }
        payload.update(gs.to_dict())
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(f"tuple (n={inv.n}, d={inv.d}, e={inv.e}, s={inv.s})  "
              f"z={inv.z}  C1={nc.c1}  C2={nc.c2}  Delta={nc.delta}")
        print(f"overall: {gs.overall.value}")
        for report in gs.reports:
            pairs = " ".join(f"{k}={_jsonable(v)}" for k, v in report.witness)
            print(f"  {report.gate_id:<16} {report.status.value:<14} {pairs}")
        for gate_id, message in gs.errors:
            print(f"  error in {gate_id}: {message}")
    return 0


def _cmd_scan(args) -> int:
    file_values = load_config_file(args.config) if args.config else {}
    flag_values = {
        "n": args.n, "d": args.d, "e": args.e, "s": args.s,
        "assume_non_ci": args.assume_non_ci, "gates": args.gates,
        "output": args.output, "format": args.format,
        "workers": args.workers, "cap": args.cap, "plot": args.plot,
    }
    cfg = build_scan_config(file_values, flag_values)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as out:
            scan_to_stream(cfg, out, sys.stderr)
    else:
        scan_to_stream(cfg, sys.stdout, sys.stderr)
    return 0


def _cmd_series(args) -> int:
    ts = positivity_series(args.c1, args.c2, args.c1l, args.order)
    coeffs = [int(c) if c.denominator == 1 else _fraction_str(c)
              for c in ts.coefficients]
    json.dump({"c1": args.c1, "c2": args.c2, "c1l": args.c1l,
               "coefficients": coeffs}, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _cmd_alpha(args) -> int:
    if args.c1 != args.e + args.n - 1:
        raise ValueError(
            f"inconsistent flags: c1 must equal e+n-1 = {args.e + args.n - 1}"
        )
    d = args.c2 + args.e + args.n
    inv = Invariants(args.n, d, args.e, args.s)
    sol = solve_alpha(spectral(normalize(inv), z=inv.z), inv)
    json.dump({
        "alpha": _fmt_real(sol.alpha),
        "regime": sol.regime.value,
        "residual": float(sol.residual),
        "panoplie_ratios": [_fmt_real(r) for r in sol.panoplie_ratios],
    }, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_m_table(args) -> int:
    table = m_table(args.max)
    if args.plot:
        render_m_table_figure(table, args.plot)
    if args.format == "json":
        json.dump({"m": {str(a): _fmt_real(m, args.digits) for a, m in table}},
                  sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for a, m in table:
            print(f"{a:>4}  {_fmt_real(m, args.digits)}")
    return 0


def _print_report(report) -> None:
    json.dump(report.to_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_schwarzenberger(args) -> int:
    _print_report(schwarzenberger_check(args.n, args.c1, args.c2))
    return 0


def _cmd_qr(args) -> int:
    _print_report(qr_claim_check(args.n, args.delta))
    return 0


def _cmd_delta_min(args) -> int:
    result = delta_min_search(args.n, args.limit,
                              qr_screen=not args.no_qr_screen)
    json.dump(result.to_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_mu(args) -> int:
    candidate = P5Candidate(args.d, args.s, args.pi)
    report = mu_gate(candidate)
    payload = {"mu": mu(candidate)}
    payload.update(report.to_dict())
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_genus_interval(args) -> int:
    pi_min, pi_max = genus_interval(args.d, args.s)
    json.dump({
        "pi_min": _fraction_str(pi_min),
        "pi_max": _fraction_str(pi_max),
        "length": _fraction_str(pi_max - pi_min),
    }, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _cmd_chi(args) -> int:
    payload = {"chi": _fraction_str(chi_oracle(args.d, args.s, args.pi, args.m))}
    if args.closed_form:
        payload["chi_closed_form"] = _fraction_str(
            chi_fractional(args.d, args.s, args.pi)
        )
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _cmd_paper_numbers(_args) -> int:
    return 0 if paper_numbers(sys.stdout) else 1


_COMMANDS = {
    "check": _cmd_check,
    "scan": _cmd_scan,
    "series": _cmd_series,
    "alpha": _cmd_alpha,
    "m-table": _cmd_m_table,
    "schwarzenberger": _cmd_schwarzenberger,
    "qr": _cmd_qr,
    "delta-min": _cmd_delta_min,
    "mu": _cmd_mu,
    "genus-interval": _cmd_genus_interval,
    "chi": _cmd_chi,
    "paper-numbers": _cmd_paper_numbers,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, Codim2Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
