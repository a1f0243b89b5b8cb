"""Command-line front end.

Subcommands expose the closed-form spectra, the integer-eigenvalue
reports, the sign-vector bases, the survey scans and the kernel-ratio
sampler.  Output ordering is deterministic everywhere (eigenvalues by
index or ascending value, basis vectors by family then shift) so runs
are diffable.  Exit codes are documented in --help.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Any

from . import __version__, eigenbasis, integer_eigs, survey
from .errors import (
    CircpowError,
    CompleteGraphError,
    DomainError,
    EigenvalueAbsentError,
)
from .graphs import CircuitPower
from .spectrum import (
    DEFAULT_GROUP_TOL,
    circuit_power_spectrum,
    dirichlet_ratio,
    group_spectrum,
    mult_two_bound,
)

EXIT_OK = 0
EXIT_SCAN_FAILURES = 1
EXIT_USAGE = 2
EXIT_COMPLETE = 3
EXIT_ABSENT = 4
EXIT_INTERNAL = 5


@dataclass(frozen=True)
class OutputEnvelope:
    command: str
    params: dict[str, Any]
    result: Any
    version: str = __version__

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _emit(envelope: OutputEnvelope, fmt: str, text_body: str, csv_body: str | None = None) -> None:
    if fmt == "json":
        print(envelope.to_json())
    elif fmt == "csv":
        print(csv_body if csv_body is not None else text_body)
    else:
        print(text_body)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


# --- spectrum ----------------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = CircuitPower(args.n, args.d)
    values = circuit_power_spectrum(g)
    params = {"n": args.n, "d": args.d, "grouped": args.grouped, "tol": args.tol}
    if args.grouped:
        grouped = group_spectrum(values, tol=args.tol)
        result: Any = {
            "groups": [
                {"value": grp.value, "multiplicity": grp.multiplicity, "indices": list(grp.indices)}
                for grp in grouped.groups
            ]
        }
        text = "\n".join(
            f"{grp.value:.12g} x{grp.multiplicity}  (r = {', '.join(map(str, grp.indices))})"
            for grp in grouped.groups
        )
        csv_body = "value,multiplicity\n" + "\n".join(
            f"{grp.value:.17g},{grp.multiplicity}" for grp in grouped.groups
        )
    else:
        result = {"values": [float(v) for v in values]}
        text = "\n".join(f"lambda_{r} = {v:.12g}" for r, v in enumerate(values))
        csv_body = "r,value\n" + "\n".join(f"{r},{v:.17g}" for r, v in enumerate(values))
    if g.complete:
        result["complete"] = True
        text = f"note: C_{g.n}^({g.d}) is the complete graph K_{g.n}\n" + text

    envelope = OutputEnvelope("spectrum", params, result)
    _emit(envelope, args.format, text, csv_body)
    if args.png:
        from . import figures

        figures.save_spectrum_plot(args.n, args.d, values, args.png)
        print(f"wrote {args.png}", file=sys.stderr)
    return EXIT_COMPLETE if g.complete else EXIT_OK


# --- int-eigs ------------------------------------------------------------------


def cmd_int_eigs(args: argparse.Namespace) -> int:
    reports = integer_eigs.integer_spectrum(args.n, args.d)
    result = [
        {
            "eigenvalue": rep.eigenvalue,
            "multiplicity": rep.multiplicity,
            "case": rep.case_tag,
            "params": asdict(rep.params),
        }
        for rep in reports
    ]
    text = "\n".join(
        f"{rep.eigenvalue:>4d}: multiplicity {rep.multiplicity}  [{rep.case_tag}]"
        f"  (g={rep.params.g}, h={rep.params.h}, ord2: n={rep.params.ord2_n},"
        f" d={rep.params.ord2_d}, d+1={rep.params.ord2_d1})"
        for rep in reports
    )
    envelope = OutputEnvelope("int-eigs", {"n": args.n, "d": args.d}, result)
    _emit(envelope, args.format, text)
    return EXIT_OK


# --- basis ----------------------------------------------------------------------


def cmd_basis(args: argparse.Namespace) -> int:
    report = eigenbasis.basis_for_eigenvalue(args.n, args.d, args.eigenvalue)
    result = eigenbasis.report_to_json(report)
    result["verified"] = True  # construction raises if exact verification fails
    envelope = OutputEnvelope(
        "basis", {"n": args.n, "d": args.d, "eigenvalue": args.eigenvalue}, result
    )
    _emit(envelope, args.format, eigenbasis.format_report_text(report))
    return EXIT_OK


# --- scan ------------------------------------------------------------------------


def cmd_scan(args: argparse.Namespace) -> int:
    checks = frozenset(args.checks.split(",")) if args.checks else frozenset(survey.SCAN_KINDS)
    cfg = survey.ScanConfig(
        n_range=_parse_range(args.n),
        d_range=_parse_range(args.d) if args.d else None,
        checks=checks,
        int_tol=args.int_tol,
        path_int_tol=args.path_int_tol,
        jobs=args.jobs,
    )
    all_records: list[survey.ScanRecord] = []
    jsonl_stream = open(args.jsonl, "w") if args.jsonl else sys.stdout
    try:
        for kind in survey.SCAN_KINDS:
            if kind not in cfg.checks:
                continue
            records = survey.SCAN_FUNCTIONS[kind](cfg)
            survey.write_jsonl(records, jsonl_stream)
            all_records.extend(records)
    finally:
        if args.jsonl:
            jsonl_stream.close()

    if args.csv:
        with open(args.csv, "w", newline="") as f:
            survey.write_csv_summary(all_records, f)
    if args.png:
        from . import figures

        figures.save_scan_grid(all_records, args.png, title=f"scan {','.join(sorted(cfg.checks))}")
        print(f"wrote {args.png}", file=sys.stderr)

    fails = [rec for rec in all_records if rec.failed_theorem_checks()]
    n_cells = len(all_records)
    print(
        f"scanned {n_cells} cells; theorem-validation failures: {len(fails)}",
        file=sys.stderr,
    )
    if "path-conjectures" in cfg.checks:
        conj_bad = [
            rec
            for rec in all_records
            for name, res in rec.checks.items()
            if name in ("path_eig_one", "path_simple") and res.outcome == "fail"
        ]
        msg = (
            "conjecture counterexamples found: "
            + ", ".join(f"({r.n},{r.d})" for r in conj_bad)
            if conj_bad
            else "no counterexample in range (conjectures remain open)"
        )
        print(msg, file=sys.stderr)
    return EXIT_SCAN_FAILURES if fails else EXIT_OK


# --- fplot -----------------------------------------------------------------------


def cmd_fplot(args: argparse.Namespace) -> int:
    d, k = args.d, args.samples
    if k < 2:
        raise DomainError(f"need at least 2 samples, got {k}")
    bounds = mult_two_bound(d)
    lines = [
        f"# d={d}",
        f"# sharp_bound={bounds.sharp:.17g}",
        f"# relaxed_bound={bounds.relaxed:.17g}",
        "phi,f_d",
    ]
    for i in range(k):
        phi = 2.0 * math.pi * i / (k - 1)
        lines.append(f"{phi:.17g},{dirichlet_ratio(d, phi):.17g}")
    body = "\n".join(lines)
    if args.out and args.out != "-":
        with open(args.out, "w") as f:
            f.write(body + "\n")
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(body)
    if args.png:
        from . import figures

        figures.save_kernel_plot(d, k, args.png)
        print(f"wrote {args.png}", file=sys.stderr)
    return EXIT_OK


# --- parser ------------------------------------------------------------------------


_EXIT_CODE_HELP = """Exit codes:
  0  success
  1  a scan reported at least one theorem-validation failure
  2  usage error (bad arguments or ranges)
  3  complete-graph special case (for `spectrum` the K_n spectrum is still printed)
  4  requested eigenvalue is absent (multiplicity zero)
  5  internal error
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circpow",
        description="Spectra, integer eigenvalues and sign-vector eigenspace bases "
        "of circuit distance powers.",
        epilog=_EXIT_CODE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form eigenvalues of C_n^(d)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--grouped", action="store_true", help="merge into (value, multiplicity) groups")
    p.add_argument("--tol", type=float, default=DEFAULT_GROUP_TOL, help="grouping tolerance")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--png", metavar="PATH", help="also render the spectrum to a figure")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("int-eigs", help="integer-eigenvalue multiplicity reports")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_int_eigs)

    p = sub.add_parser("basis", help="{-1,0,1} eigenspace basis for an integer eigenvalue")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("eigenvalue", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("scan", help="grid scans emitting JSON lines")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(survey.SCAN_KINDS)}")
    p.add_argument("--n", required=True, help="n range, e.g. 3..200 or a single value")
    p.add_argument("--d", help="d range (default: all valid d per n)")
    p.add_argument("--jsonl", metavar="PATH", help="write records here instead of stdout")
    p.add_argument("--csv", metavar="PATH", help="also write a CSV summary")
    p.add_argument("--png", metavar="PATH", help="also render an outcome grid figure")
    p.add_argument("--jobs", type=int, default=0,
                   help="worker threads (default: $CIRCPOW_JOBS or 1)")
    p.add_argument("--int-tol", type=float, default=1e-7,
                   help="numeric tolerance for integer detection and grouping")
    p.add_argument("--path-int-tol", type=float, default=1e-6,
                   help="pre-certificate tolerance for path-power integer hits")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fplot", help="sample the kernel ratio f_d as CSV (and optionally a figure)")
    p.add_argument("d", type=int)
    p.add_argument("--samples", type=int, default=513)
    p.add_argument("--out", metavar="PATH", help="CSV destination ('-' or omit for stdout)")
    p.add_argument("--png", metavar="PATH", help="also render the curve with its bounds")
    p.set_defaults(func=cmd_fplot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CompleteGraphError as exc:
        print(f"complete graph: {exc}", file=sys.stderr)
        return EXIT_COMPLETE
    except EigenvalueAbsentError as exc:
        print(f"eigenvalue absent: {exc}", file=sys.stderr)
        return EXIT_ABSENT
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CircpowError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
