"""Batch scans over (n, d) grids, with machine-readable records.

Each cell produces a ScanRecord holding named check outcomes
(pass / fail / skip) plus a payload; failing records always carry a
witness sufficient to reproduce the failure in one targeted call.
Iteration order is n ascending, then d ascending; complete cells get
explicit skip records.  Cells are independent work items processed by a
thread pool of configurable width; results are collected in grid order,
so parallel execution never changes the output.

Checks are classed as either theorem validations (a failure means the
implementation or the formula is wrong, and drives a nonzero exit code in
the CLI) or conjecture/report checks (failures are findings, reported as
data).  Conjecture scans never "pass" a conjecture; they only report that
no counterexample was found in range.

Two deliberately report-classed checks encode classical claims that are
falsifiable and indeed falsified at desk scale:

* ``mult_two_relaxed`` checks the multiplicity-two window above d/pi - 1.
  That threshold does not guarantee multiplicity two (eigenvalue 0 of
  C_6^(2) sits above it with multiplicity three); the guaranteed window,
  above 1/sin(2 pi/(2d+1)) - 1, is checked by ``mult_two_sharp``.
* ``integrality_only_c6`` checks that C_6^(1) is the only integral
  non-complete circuit power.  It is not: C_{2d+2}^(d), the complete
  graph minus a perfect matching, is integral for every d (spectrum
  {2d, 0^{d+1}, (-2)^d}), so the check fails on that whole family.  The
  theorem-classed part, ``integrality_routes_agree``, asserts that the
  gcd-class condition and the spectrum agree cell by cell, which always
  holds.

Similarly, ``path_eig_one`` hunts counterexamples to "the two-vertex
complete graph is the only path power with eigenvalue 1" and finds them:
every plain path on 3m+2 vertices has eigenvalue 2 cos(pi/3) = 1 exactly
(confirmed by an integer rank certificate).  Restricted to proper powers
(d >= 2) no counterexample is known.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TextIO

import numpy as np

from .eigenbasis import exact_rank
from .errors import DomainError
from .graphs import CircuitPower, PathPower, adjacency
from .integer_eigs import integer_spectrum, is_integral
from .oracle import symmetric_eigenvalues
from .spectrum import circuit_power_spectrum, group_spectrum, mult_two_bound

SCAN_KINDS = ("theorems", "odd-mult", "mult-two", "integrality", "path-conjectures")

THEOREM_CHECKS = frozenset(
    {
        "proposition",
        "mult_2d",
        "mult_1",
        "mult_0",
        "mult_-1",
        "mult_-2",
        "mult_-3",
        "odd_mult",
        "mult_two_sharp",
        "integrality_routes_agree",
        "path_partial_mult_two",
    }
)
REPORT_CHECKS = frozenset(
    {
        "mult_two_relaxed",
        "integrality_only_c6",
        "path_int_catalog",
        "path_eig_one",
        "path_simple",
    }
)

DEFAULT_JOBS_ENV = "CIRCPOW_JOBS"


@dataclass(frozen=True)
class CheckResult:
    outcome: str  # "pass" | "fail" | "skip"
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ScanRecord:
    n: int
    d: int
    checks: dict[str, CheckResult]
    elapsed: float

    def failed_theorem_checks(self) -> list[str]:
        return [
            name
            for name, res in self.checks.items()
            if res.outcome == "fail" and name in THEOREM_CHECKS
        ]


@dataclass(frozen=True)
class ScanConfig:
    n_range: tuple[int, int]
    d_range: tuple[int, int] | None = None  # None: every d in the natural grid
    checks: frozenset[str] = frozenset(SCAN_KINDS)
    int_tol: float = 1e-7
    path_int_tol: float = 1e-6
    jobs: int = 0  # 0: take CIRCPOW_JOBS from the environment, default 1

    def __post_init__(self):
        lo, hi = self.n_range
        if lo > hi:
            raise DomainError(f"empty n range {self.n_range}")
        if self.d_range is not None and self.d_range[0] > self.d_range[1]:
            raise DomainError(f"empty d range {self.d_range}")
        unknown = set(self.checks) - set(SCAN_KINDS)
        if unknown:
            raise DomainError(f"unknown check names {sorted(unknown)}; known: {SCAN_KINDS}")

    def effective_jobs(self) -> int:
        if self.jobs > 0:
            return self.jobs
        return max(1, int(os.environ.get(DEFAULT_JOBS_ENV, "1")))


def _circuit_cells(cfg: ScanConfig) -> list[tuple[int, int]]:
    cells = []
    for n in range(max(3, cfg.n_range[0]), cfg.n_range[1] + 1):
        d_lo, d_hi = (1, n // 2) if cfg.d_range is None else cfg.d_range
        for d in range(max(1, d_lo), min(d_hi, n // 2) + 1):
            cells.append((n, d))
    return cells


def _path_cells(cfg: ScanConfig) -> list[tuple[int, int]]:
    cells = []
    for n in range(max(2, cfg.n_range[0]), cfg.n_range[1] + 1):
        d_lo, d_hi = (1, n - 1) if cfg.d_range is None else cfg.d_range
        for d in range(max(1, d_lo), min(d_hi, n - 1) + 1):
            cells.append((n, d))
    return cells


def _run_cells(
    cells: Sequence[tuple[int, int]],
    worker: Callable[[int, int], dict[str, CheckResult]],
    cfg: ScanConfig,
) -> list[ScanRecord]:
    def timed(cell: tuple[int, int]) -> ScanRecord:
        n, d = cell
        start = time.perf_counter()
        checks = worker(n, d)
        return ScanRecord(n=n, d=d, checks=checks, elapsed=time.perf_counter() - start)

    jobs = cfg.effective_jobs()
    if jobs == 1:
        return [timed(c) for c in cells]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(timed, cells))


def _skip(names: Iterable[str], reason: str) -> dict[str, CheckResult]:
    return {name: CheckResult("skip", {"reason": reason}) for name in names}


# --- integer-eigenvalue theorem scan ---------------------------------------

_THEOREM_CHECK_NAMES = ("proposition", "mult_2d", "mult_1", "mult_0", "mult_-1", "mult_-2", "mult_-3")


def _integer_theorem_checks(n: int, d: int, int_tol: float) -> dict[str, CheckResult]:
    if CircuitPower(n, d).complete:
        return _skip(_THEOREM_CHECK_NAMES, "complete graph")
    values = symmetric_eigenvalues(adjacency(CircuitPower(n, d)))
    checks: dict[str, CheckResult] = {}

    candidates = {-3, -2, -1, 0, 1, 2 * d}
    violations = []
    for v in values:
        k = round(float(v))
        if abs(v - k) <= int_tol and k not in candidates:
            violations.append({"eigenvalue": float(v), "integer": int(k)})
    checks["proposition"] = CheckResult(
        "pass" if not violations else "fail", {"violations": violations}
    )

    for rep in integer_spectrum(n, d):
        numeric = int(np.count_nonzero(np.abs(values - rep.eigenvalue) <= int_tol))
        name = "mult_2d" if rep.eigenvalue == 2 * d else f"mult_{rep.eigenvalue}"
        checks[name] = CheckResult(
            "pass" if numeric == rep.multiplicity else "fail",
            {
                "eigenvalue": rep.eigenvalue,
                "theorem": rep.multiplicity,
                "numeric": numeric,
                "case": rep.case_tag,
            },
        )
    return checks


def scan_integer_eig_theorems(cfg: ScanConfig) -> list[ScanRecord]:
    """Theorem multiplicities vs numeric multiplicities, cell by cell."""
    return _run_cells(
        _circuit_cells(cfg), lambda n, d: _integer_theorem_checks(n, d, cfg.int_tol), cfg
    )


# --- odd multiplicity scan --------------------------------------------------


def _odd_mult_checks(n: int, d: int, int_tol: float) -> dict[str, CheckResult]:
    if CircuitPower(n, d).complete:
        return _skip(["odd_mult"], "complete graph")
    values = symmetric_eigenvalues(adjacency(CircuitPower(n, d)))
    grouped = group_spectrum(values, tol=int_tol, index_order=False)
    allowed = (2 * d, 0, -2)
    offenders = [
        {"value": g.value, "multiplicity": g.multiplicity}
        for g in grouped.groups
        if g.multiplicity % 2 == 1 and all(abs(g.value - a) > int_tol for a in allowed)
    ]
    return {"odd_mult": CheckResult("pass" if not offenders else "fail", {"offenders": offenders})}


def scan_odd_multiplicity(cfg: ScanConfig) -> list[ScanRecord]:
    """Odd-multiplicity eigenvalues must be 2d, 0 or -2."""
    return _run_cells(
        _circuit_cells(cfg), lambda n, d: _odd_mult_checks(n, d, cfg.int_tol), cfg
    )


# --- multiplicity-two window scan -------------------------------------------


def _window_check(groups, lo: float, hi: float) -> list[dict]:
    return [
        {"value": g.value, "multiplicity": g.multiplicity}
        for g in groups
        if lo < g.value < hi and g.multiplicity != 2
    ]


def _mult_two_checks(n: int, d: int, int_tol: float) -> dict[str, CheckResult]:
    if CircuitPower(n, d).complete:
        return _skip(["mult_two_sharp", "mult_two_relaxed"], "complete graph")
    values = symmetric_eigenvalues(adjacency(CircuitPower(n, d)))
    grouped = group_spectrum(values, tol=int_tol, index_order=False)
    bounds = mult_two_bound(d)
    hi = 2 * d - int_tol
    sharp_bad = _window_check(grouped.groups, bounds.sharp, hi)
    relaxed_bad = _window_check(grouped.groups, bounds.relaxed, hi)
    table_hits = [g.value for g in grouped.groups if d / math.pi < g.value < hi]
    payload = {"sharp": bounds.sharp, "relaxed": bounds.relaxed, "hits_above_d_over_pi": table_hits}
    return {
        "mult_two_sharp": CheckResult(
            "pass" if not sharp_bad else "fail", {**payload, "offenders": sharp_bad}
        ),
        "mult_two_relaxed": CheckResult(
            "pass" if not relaxed_bad else "fail", {**payload, "offenders": relaxed_bad}
        ),
    }


def scan_mult_two(cfg: ScanConfig) -> list[ScanRecord]:
    """Multiplicity-two windows: the sharp one asserted, the relaxed one reported."""
    return _run_cells(
        _circuit_cells(cfg), lambda n, d: _mult_two_checks(n, d, cfg.int_tol), cfg
    )


def smallest_window_hits(d_values: Iterable[int], n_max: int) -> dict[int, int]:
    """Smallest n per d whose circuit power has an eigenvalue above d/pi.

    This is the tabulation threshold that reproduces the classical list
    C_5^(1), C_7^(2), C_10^(3), C_12^(4); eigenvalues above d/pi are
    strictly inside the sharp multiplicity-two window for every d.
    """
    hits: dict[int, int] = {}
    for d in d_values:
        for n in range(3, n_max + 1):
            g = CircuitPower(n, d)
            if g.complete:
                continue
            lam = circuit_power_spectrum(g)
            if any(d / math.pi < v < 2 * d - 1e-9 for v in lam[1:]):
                hits[d] = n
                break
    return hits


# --- integrality scan ---------------------------------------------------------


def _integrality_checks(n: int, d: int, int_tol: float) -> dict[str, CheckResult]:
    g = CircuitPower(n, d)
    if g.complete:
        return _skip(["integrality_routes_agree", "integrality_only_c6"], "complete graph")
    verdict = is_integral(g)
    lam = circuit_power_spectrum(g)
    off = [float(v) for v in lam if abs(v - round(float(v))) > int_tol]
    spectral_integral = not off
    payload: dict = {
        "so_integral": verdict.integral,
        "spectral_integral": spectral_integral,
    }
    if verdict.violating_class is not None:
        payload["witness_class"] = {
            "gcd": verdict.violating_class[0],
            "missing": verdict.violating_class[1],
        }
    if off:
        payload["non_integer_eigenvalue"] = off[0]
    agree = verdict.integral == spectral_integral
    only_c6 = (not verdict.integral) or (n, d) == (6, 1)
    return {
        "integrality_routes_agree": CheckResult("pass" if agree else "fail", payload),
        "integrality_only_c6": CheckResult("pass" if only_c6 else "fail", payload),
    }


def scan_integrality(cfg: ScanConfig) -> list[ScanRecord]:
    """Gcd-class condition vs the spectrum, and the which-cells-are-integral map.

    Route agreement is a theorem validation.  The classical claim that
    C_6^(1) is the only integral non-complete cell is reported as data; it
    fails on the cocktail-party family C_{2d+2}^(d).
    """
    return _run_cells(
        _circuit_cells(cfg), lambda n, d: _integrality_checks(n, d, cfg.int_tol), cfg
    )


# --- path-power conjecture scan -----------------------------------------------


def _exact_integer_multiplicity(a: np.ndarray, k: int) -> int:
    """Exact multiplicity of integer k in an integer matrix, via rank over Q."""
    n = a.shape[0]
    shifted = a - k * np.eye(n, dtype=np.int64)
    return n - exact_rank(shifted.tolist())


def _path_conjecture_checks(n: int, d: int, int_tol: float, path_int_tol: float) -> dict[str, CheckResult]:
    g = PathPower(n, d)
    a = adjacency(g)
    values = symmetric_eigenvalues(a)
    grouped = group_spectrum(values, tol=int_tol, index_order=False)

    # integer catalogue: numeric candidates confirmed by an exact rank certificate
    numeric_ints = sorted({round(float(v)) for v in values if abs(v - round(float(v))) <= path_int_tol})
    confirmed: dict[int, int] = {}
    for k in numeric_ints:
        mult = _exact_integer_multiplicity(a, int(k))
        if mult > 0:
            confirmed[int(k)] = mult
    checks = {
        "path_int_catalog": CheckResult(
            "pass", {"integers": {str(k): m for k, m in sorted(confirmed.items())}}
        )
    }

    # eigenvalue 1 only on the two-vertex complete graph
    has_one = confirmed.get(1, 0) > 0
    if has_one and n > 2:
        checks["path_eig_one"] = CheckResult("fail", {"multiplicity": confirmed[1]})
    else:
        checks["path_eig_one"] = CheckResult(
            "pass", {"k2_exception": bool(has_one and n == 2)}
        )

    # simplicity off {-2, -1, 0}
    exempt = (-2.0, -1.0, 0.0)
    simple_bad = [
        {"value": grp.value, "multiplicity": grp.multiplicity}
        for grp in grouped.groups
        if grp.multiplicity > 1 and all(abs(grp.value - e) > int_tol for e in exempt)
    ]
    checks["path_simple"] = CheckResult(
        "pass" if not simple_bad else "fail", {"offenders": simple_bad}
    )

    # proved partial result: for n/2 < d < n-1 multiple eigenvalues != -1 are double
    if n / 2 < d < n - 1:
        partial_bad = [
            {"value": grp.value, "multiplicity": grp.multiplicity}
            for grp in grouped.groups
            if grp.multiplicity > 1
            and abs(grp.value - (-1.0)) > int_tol
            and grp.multiplicity != 2
        ]
        checks["path_partial_mult_two"] = CheckResult(
            "pass" if not partial_bad else "fail", {"offenders": partial_bad}
        )
    else:
        checks["path_partial_mult_two"] = CheckResult("skip", {"reason": "d outside (n/2, n-1)"})
    return checks


def scan_path_conjectures(cfg: ScanConfig) -> list[ScanRecord]:
    """Catalogue integer eigenvalues of path powers and hunt counterexamples."""
    return _run_cells(
        _path_cells(cfg),
        lambda n, d: _path_conjecture_checks(n, d, cfg.int_tol, cfg.path_int_tol),
        cfg,
    )


# --- serialization -------------------------------------------------------------

SCAN_FUNCTIONS: dict[str, Callable[[ScanConfig], list[ScanRecord]]] = {
    "theorems": scan_integer_eig_theorems,
    "odd-mult": scan_odd_multiplicity,
    "mult-two": scan_mult_two,
    "integrality": scan_integrality,
    "path-conjectures": scan_path_conjectures,
}


def record_to_json(record: ScanRecord) -> dict:
    return {
        "n": record.n,
        "d": record.d,
        "checks": {
            name: {"outcome": res.outcome, "payload": res.payload}
            for name, res in record.checks.items()
        },
        "elapsed": record.elapsed,
    }


def write_jsonl(records: Iterable[ScanRecord], stream: TextIO) -> None:
    import json

    for rec in records:
        stream.write(json.dumps(record_to_json(rec), sort_keys=True) + "\n")


def write_csv_summary(records: Iterable[ScanRecord], stream: TextIO) -> None:
    import csv

    writer = csv.writer(stream)
    writer.writerow(["n", "d", "check", "outcome", "witness"])
    for rec in records:
        for name, res in sorted(rec.checks.items()):
            witness = ""
            if res.outcome == "fail":
                witness = repr(res.payload.get("offenders") or res.payload)
            writer.writerow([rec.n, rec.d, name, res.outcome, witness])


def has_theorem_failures(records: Iterable[ScanRecord]) -> bool:
    return any(rec.failed_theorem_checks() for rec in records)
