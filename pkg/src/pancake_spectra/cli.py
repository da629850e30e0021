"""Command-line front end.

Subcommands
-----------
build      write the graph's edge list (header ``m n vcount degree``)
spectrum   eigenvalues from one of four routes (graph, quotient,
           decomposed, gsw) as CSV or JSON
quotient   the quotient matrix as integer CSV (formula or counted)
verify     run one check suite: gap, containment, multiplicity, or
           lemma-circ (counted quotient equals the closed form);
           exit status is nonzero iff a check fails
scan       report-only trend tables: conjecture2, gap-trend

All numbers are printed with 12 significant digits and every output is
byte-deterministic for a fixed invocation.  Exit codes: 0 success,
1 check failure, 2 usage error, 3 capacity exceeded, 4 numeric failure.
Caps may also be set via PANCAKE_SPECTRA_{VERTEX,DENSE,EXACT}_CAP.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .cayley_graph import DEFAULT_VERTEX_CAP, build_graph, edge_list_text
from .coloured_permutations import GroupParams
from .equitable_partition import (
    build_partition,
    quotient_csv,
    quotient_empirical,
    quotient_formula,
)
from .errors import CapacityError, NumericError
from .quotient_spectra import (
    block_circulant_spectrum,
    gsw_spectrum,
    symmetric_spectrum,
)
from .spectral_verification import (
    DEFAULT_DENSE_CAP,
    DEFAULT_EXACT_CAP,
    full_spectrum,
    conjecture2_scan,
    gap_trend,
    report_rows,
    rows_csv,
    verify_gap,
    verify_multiplicity,
    verify_quotient_containment,
    verify_quotient_structure,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_NUMERIC = 4

_ENV_PREFIX = "PANCAKE_SPECTRA_"


@dataclass(frozen=True)
class RunConfig:
    command: str
    which: Optional[str]
    m: Optional[int]
    n: Optional[int]
    n_max: Optional[int]
    out: Optional[str]
    fmt: str
    vertex_cap: int
    dense_cap: int
    exact_cap: int
    tol: Optional[float]
    empirical: bool
    source: Optional[str]

    def __post_init__(self) -> None:
        for name, cap in (("vertex", self.vertex_cap), ("dense", self.dense_cap),
                          ("exact", self.exact_cap)):
            if cap < 1:
                raise ValueError(f"{name} cap must be positive, got {cap}")
        if self.tol is not None and not 0.0 < self.tol < 1e-2:
            raise ValueError(f"tolerance must lie in (0, 1e-2), got {self.tol}")
        if self.fmt not in ("csv", "json", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")


def _fmt_num(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return f"{float(x):.12g}"


def _cap(flag_value: Optional[int], env_suffix: str, default: int) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(_ENV_PREFIX + env_suffix)
    if env is not None:
        return int(env)
    return default


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _add_caps(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--vertex-cap", type=int, default=None,
                        help=f"max vertices for graph construction (default {DEFAULT_VERTEX_CAP})")
    parser.add_argument("--dense-cap", type=int, default=None,
                        help=f"max vertices for dense eigensolves (default {DEFAULT_DENSE_CAP})")
    parser.add_argument("--exact-cap", type=int, default=None,
                        help=f"max vertices for exact integer nullity (default {DEFAULT_EXACT_CAP})")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pancake-spectra",
        description="Flip graphs of coloured permutations: spectra, quotients, "
                    "and spectral verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="write the graph edge list")
    p_build.add_argument("--m", type=int, required=True)
    p_build.add_argument("--n", type=int, required=True)
    p_build.add_argument("--out", default=None)
    _add_caps(p_build)

    p_spec = sub.add_parser("spectrum", help="eigenvalues by one of four routes")
    p_spec.add_argument("--m", type=int, default=None)
    p_spec.add_argument("--n", type=int, required=True)
    p_spec.add_argument("--source", choices=("graph", "quotient", "decomposed", "gsw"),
                        default="graph")
    p_spec.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p_spec.add_argument("--out", default=None)
    _add_caps(p_spec)

    p_quot = sub.add_parser("quotient", help="quotient matrix as integer CSV")
    p_quot.add_argument("--m", type=int, required=True)
    p_quot.add_argument("--n", type=int, required=True)
    p_quot.add_argument("--empirical", action="store_true",
                        help="count on the actual graph instead of using the closed form")
    p_quot.add_argument("--out", default=None)
    _add_caps(p_quot)

    p_ver = sub.add_parser("verify", help="run one verification suite")
    p_ver.add_argument("which", choices=("gap", "containment", "multiplicity", "lemma-circ"))
    p_ver.add_argument("--m", type=int, required=True)
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--format", dest="fmt", choices=("text", "csv"), default="text")
    p_ver.add_argument("--tol", type=float, default=None)
    p_ver.add_argument("--out", default=None)
    _add_caps(p_ver)

    p_scan = sub.add_parser("scan", help="report-only trend tables (always exit 0)")
    p_scan.add_argument("which", choices=("conjecture2", "gap-trend"))
    p_scan.add_argument("--m", type=int, required=True)
    p_scan.add_argument("--n-max", type=int, required=True)
    p_scan.add_argument("--tol", type=float, default=None)
    p_scan.add_argument("--out", default=None)
    _add_caps(p_scan)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        which=getattr(args, "which", None),
        m=getattr(args, "m", None),
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        out=getattr(args, "out", None),
        fmt=getattr(args, "fmt", "csv"),
        vertex_cap=_cap(getattr(args, "vertex_cap", None), "VERTEX_CAP", DEFAULT_VERTEX_CAP),
        dense_cap=_cap(getattr(args, "dense_cap", None), "DENSE_CAP", DEFAULT_DENSE_CAP),
        exact_cap=_cap(getattr(args, "exact_cap", None), "EXACT_CAP", DEFAULT_EXACT_CAP),
        tol=getattr(args, "tol", None),
        empirical=getattr(args, "empirical", False),
        source=getattr(args, "source", None),
    )


def _cmd_build(cfg: RunConfig) -> int:
    g = build_graph(GroupParams(cfg.m, cfg.n), vertex_cap=cfg.vertex_cap)
    _emit(edge_list_text(g), cfg.out)
    return EXIT_OK


def _spectrum_for(cfg: RunConfig):
    if cfg.source == "gsw":
        if cfg.m is not None:
            raise ValueError("--source gsw takes only --n; drop the --m flag")
        return gsw_spectrum(cfg.n)
    if cfg.m is None:
        raise ValueError(f"--source {cfg.source} requires --m")
    p = GroupParams(cfg.m, cfg.n)
    if cfg.source == "graph":
        g = build_graph(p, vertex_cap=cfg.vertex_cap)
        return full_spectrum(g, dense_cap=cfg.dense_cap)
    if cfg.source == "quotient":
        return symmetric_spectrum(quotient_formula(p))
    return block_circulant_spectrum(p)


def _cmd_spectrum(cfg: RunConfig) -> int:
    spectrum = _spectrum_for(cfg)
    if cfg.fmt == "json":
        payload = [{"index": i, "eigenvalue": float(f"{v:.12g}"), "source": spectrum.source}
                   for i, v in enumerate(spectrum.values)]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = ["index,eigenvalue,source"]
        lines.extend(f"{i},{_fmt_num(float(v))},{spectrum.source}"
                     for i, v in enumerate(spectrum.values))
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return EXIT_OK


def _cmd_quotient(cfg: RunConfig) -> int:
    p = GroupParams(cfg.m, cfg.n)
    if cfg.empirical:
        g = build_graph(p, vertex_cap=cfg.vertex_cap)
        q = quotient_empirical(g, build_partition(g))
    else:
        q = quotient_formula(p)
    _emit(quotient_csv(q, p), cfg.out)
    return EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    p = GroupParams(cfg.m, cfg.n)
    if cfg.which == "gap":
        report = verify_gap(p, vertex_cap=cfg.vertex_cap, dense_cap=cfg.dense_cap)
        rows = report_rows(report)
        text_lines = [
            f"flip graph m={p.m} n={p.n}: lambda1={_fmt_num(report.lambda1)} "
            f"lambda2={_fmt_num(report.lambda2)} gap={_fmt_num(report.gap)} "
            f"bound={_fmt_num(report.bound)} margin={_fmt_num(report.margin)} "
            f"{'PASS' if report.passed else 'FAIL'}"
        ]
    elif cfg.which == "containment":
        ok, unmatched = verify_quotient_containment(
            p, vertex_cap=cfg.vertex_cap, dense_cap=cfg.dense_cap,
            tol=cfg.tol if cfg.tol is not None else 1e-7)
        rows = [(p.m, p.n, "containment", len(unmatched), 0, ok)]
        text_lines = [
            f"flip graph m={p.m} n={p.n}: all {p.m * p.n} quotient eigenvalues "
            f"matched {'PASS' if ok else 'FAIL'}"
        ]
        if not ok:
            text_lines.append("unmatched: " + " ".join(_fmt_num(u) for u in unmatched))
    elif cfg.which == "multiplicity":
        report = verify_multiplicity(
            p, vertex_cap=cfg.vertex_cap, dense_cap=cfg.dense_cap,
            exact_cap=cfg.exact_cap,
            cluster_tol=cfg.tol if cfg.tol is not None else 1e-6)
        rows = report_rows(report)
        text_lines = [
            f"flip graph m={p.m} n={p.n}: eigenvalue {c.eigenvalue} has "
            f"multiplicity {c.computed} (required >= {c.required}, {c.method}) "
            f"{'PASS' if c.passed else 'FAIL'}"
            for c in report.cases
        ]
    else:  # lemma-circ
        ok, diff = verify_quotient_structure(p, vertex_cap=cfg.vertex_cap)
        rows = [(p.m, p.n, "quotient-structure", diff, 0, ok)]
        text_lines = [
            f"flip graph m={p.m} n={p.n}: counted quotient vs closed form, "
            f"max entry difference {diff} {'PASS' if ok else 'FAIL'}"
        ]
    if cfg.fmt == "csv":
        _emit(rows_csv(rows), cfg.out)
    else:
        _emit("\n".join(text_lines) + "\n", cfg.out)
    return EXIT_OK if all(r[5] for r in rows) else EXIT_CHECK_FAILED


def _cmd_scan(cfg: RunConfig) -> int:
    if cfg.which == "conjecture2":
        scan = conjecture2_scan(cfg.m, cfg.n_max, vertex_cap=cfg.vertex_cap,
                                dense_cap=cfg.dense_cap,
                                tol=cfg.tol if cfg.tol is not None else 1e-6)
        lines = ["m,n,graph_gap,quotient_gap,abs_difference,equal_within_tol"]
        for r in scan.records:
            if r.quotient_gap is None:
                lines.append(f"{r.m},{r.n},{_fmt_num(r.graph_gap)},,,")
            else:
                lines.append(
                    f"{r.m},{r.n},{_fmt_num(r.graph_gap)},{_fmt_num(r.quotient_gap)},"
                    f"{_fmt_num(r.difference)},{_fmt_num(r.equal_within_tol)}")
        if scan.note:
            lines.append(f"# note: {scan.note}")
    else:  # gap-trend
        rows = gap_trend(cfg.m, cfg.n_max)
        lines = ["m,n,quotient_gap,bound,bound_minus_gap,nondecreasing"]
        lines.extend(
            f"{cfg.m},{r.n},{_fmt_num(r.gap)},{_fmt_num(r.bound)},"
            f"{_fmt_num(r.distance)},{_fmt_num(r.nondecreasing)}"
            for r in rows)
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


_DISPATCH = {
    "build": _cmd_build,
    "spectrum": _cmd_spectrum,
    "quotient": _cmd_quotient,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        return _DISPATCH[cfg.command](cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
