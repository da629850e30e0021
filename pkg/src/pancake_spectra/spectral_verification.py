"""Full-graph spectra, exact multiplicities, and the verification suites.

The checks here instantiate, at desk scale, the spectral statements the
quotient machinery supports:

* ``verify_gap`` -- the spectral gap of the flip graph is strictly below
  1 (m = 2) or 2 (m >= 3), with the top eigenvalue equal to the degree;
* ``verify_quotient_containment`` -- every quotient eigenvalue appears
  among the graph eigenvalues (the quotient characteristic polynomial
  divides the graph's);
* ``verify_multiplicity`` -- for m divisible by 4, each even integer 2k
  (1 <= k <= n-1) is a graph eigenvalue with multiplicity at least 3,
  or at least 2 when k = floor(n/2), checked by exact integer nullity
  where feasible;
* ``verify_quotient_structure`` -- the counted quotient matrix equals
  the block-circulant closed form entry-for-entry;
* ``conjecture2_scan`` / ``gap_trend`` -- report-only scans of the
  graph-gap-equals-quotient-gap question and of the gap's approach to
  its bound as n grows.  Scans record, never assert.

Multiplicities are computed two ways on purpose: numeric clustering of
the dense spectrum, and exact fraction-free nullity of A - lam*I over
the integers.  The exact route is authoritative whenever both run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse.linalg as spla

from .cayley_graph import (
    CayleyGraph,
    DEFAULT_VERTEX_CAP,
    adjacency_matrix,
    build_graph,
    sparse_adjacency,
)
from .coloured_permutations import GroupParams
from .equitable_partition import build_partition, quotient_empirical, quotient_formula
from .errors import CapacityError, NumericError
from .exact_nullity import integer_nullity
from .quotient_spectra import (
    RealSpectrum,
    SOURCE_DIRECT,
    is_sub_multiset,
    symmetric_spectrum,
)

__all__ = [
    "DEFAULT_DENSE_CAP",
    "DEFAULT_EXACT_CAP",
    "GapReport",
    "MultiplicityCase",
    "MultiplicityReport",
    "ConjectureRecord",
    "Conjecture2Scan",
    "TrendRow",
    "full_spectrum",
    "top_two_eigenvalues",
    "exact_integer_multiplicity",
    "numeric_multiplicity",
    "verify_gap",
    "verify_quotient_containment",
    "verify_multiplicity",
    "verify_quotient_structure",
    "conjecture2_scan",
    "gap_trend",
    "report_rows",
    "rows_csv",
    "rows_text",
]

DEFAULT_DENSE_CAP = 10**4
DEFAULT_EXACT_CAP = 10**3

# Below this many vertices the extremal pair comes from the dense solve;
# above it a Lanczos iteration on the sparse adjacency is used.
_LANCZOS_THRESHOLD = 1500


def full_spectrum(g: CayleyGraph, *, dense_cap: int = DEFAULT_DENSE_CAP) -> RealSpectrum:
    """All adjacency eigenvalues, sorted nonincreasing (dense eigensolve)."""
    n = g.vertex_count
    if n > dense_cap:
        raise CapacityError(
            f"dense spectrum of {n} vertices exceeds the dense cap {dense_cap}; "
            f"use top_two_eigenvalues for the extremal pair"
        )
    vals = np.sort(np.linalg.eigvalsh(adjacency_matrix(g)))[::-1]
    return RealSpectrum(np.ascontiguousarray(vals), SOURCE_DIRECT,
                        1e-9 * max(1, g.degree))


def top_two_eigenvalues(g: CayleyGraph, *, dense_cap: int = DEFAULT_DENSE_CAP,
                        lanczos_maxiter: Optional[int] = None) -> tuple[float, float]:
    """The two largest adjacency eigenvalues.

    Small graphs reuse the dense solve; larger ones run a Lanczos
    iteration on the sparse adjacency.  Raises
    :class:`~pancake_spectra.errors.NumericError` if the iteration
    budget is exhausted before convergence.
    """
    n = g.vertex_count
    if n < 2:
        raise ValueError("a second eigenvalue needs at least two vertices")
    if n <= min(_LANCZOS_THRESHOLD, dense_cap):
        vals = full_spectrum(g, dense_cap=dense_cap).values
        return float(vals[0]), float(vals[1])
    a = sparse_adjacency(g)
    try:
        vals = spla.eigsh(a, k=2, which="LA", maxiter=lanczos_maxiter,
                          return_eigenvectors=False)
    except spla.ArpackNoConvergence as exc:
        converged = len(exc.eigenvalues) if exc.eigenvalues is not None else 0
        raise NumericError(
            f"Lanczos did not converge on {n} vertices within the iteration "
            f"budget ({lanczos_maxiter or 'default'}): {converged} of 2 "
            f"eigenvalues converged"
        ) from exc
    vals = np.sort(vals)[::-1]
    return float(vals[0]), float(vals[1])


def exact_integer_multiplicity(g: CayleyGraph, lam: int, *,
                               exact_cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact multiplicity of an integer ``lam`` in the adjacency spectrum.

    Computes the rational nullity of A - lam*I by fraction-free integer
    elimination; exact, but cubic with big-integer growth, hence capped.
    """
    n = g.vertex_count
    if n > exact_cap:
        raise CapacityError(
            f"exact nullity on {n} vertices exceeds the exact cap {exact_cap}; "
            f"use numeric clustering of full_spectrum instead"
        )
    if not isinstance(lam, (int, np.integer)):
        raise ValueError(f"eigenvalue must be an integer, got {lam!r}")
    lam = int(lam)
    rows = [[0] * n for _ in range(n)]
    for v in range(n):
        for w in g.neighbors(v):
            rows[v][int(w)] = 1
        rows[v][v] -= lam
    return integer_nullity(rows)


def numeric_multiplicity(values, lam: float, *, tol: float = 1e-6) -> int:
    """Number of eigenvalues within ``tol`` of ``lam``."""
    vals = np.asarray(getattr(values, "values", values), dtype=np.float64)
    return int(np.count_nonzero(np.abs(vals - lam) <= tol))


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class GapReport:
    """Spectral gap of one flip graph against its strict bound."""

    m: int
    n: int
    lambda1: float
    lambda2: float
    gap: float
    bound: float
    margin: float            # bound - gap
    passed: bool             # gap < bound (the strict inequality itself)
    passed_with_margin: bool  # gap < bound - 1e-6


@dataclass(frozen=True)
class MultiplicityCase:
    k: int
    eigenvalue: int          # 2k
    required: int            # lower bound: 3, or 2 when k = floor(n/2)
    computed: int
    method: str              # "exact-nullity" | "numeric-cluster"
    passed: bool


@dataclass(frozen=True)
class MultiplicityReport:
    m: int
    n: int
    cases: tuple[MultiplicityCase, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)


@dataclass(frozen=True)
class ConjectureRecord:
    """One scan point comparing graph gap and quotient gap (never asserted)."""

    m: int
    n: int
    graph_gap: float
    quotient_gap: Optional[float]
    difference: Optional[float]
    equal_within_tol: Optional[bool]
    tolerance: float


@dataclass(frozen=True)
class Conjecture2Scan:
    records: tuple[ConjectureRecord, ...]
    note: Optional[str]      # set when capacity truncated the scan


@dataclass(frozen=True)
class TrendRow:
    n: int
    gap: float
    bound: float
    distance: float          # bound - gap
    nondecreasing: bool      # gap >= previous row's gap


# ---------------------------------------------------------------------------
# Verification suites


def verify_gap(p: GroupParams, *, vertex_cap: int = DEFAULT_VERTEX_CAP,
               dense_cap: int = DEFAULT_DENSE_CAP) -> GapReport:
    """Check the strict spectral-gap bound: gap < 1 for m = 2, < 2 for m >= 3."""
    if p.m < 2:
        raise ValueError("the gap bound is stated for m >= 2")
    g = build_graph(p, vertex_cap=vertex_cap)
    lam1, lam2 = top_two_eigenvalues(g, dense_cap=dense_cap)
    bound = 1.0 if p.m == 2 else 2.0
    gap = lam1 - lam2
    return GapReport(p.m, p.n, lam1, lam2, gap, bound, bound - gap,
                     gap < bound, gap < bound - 1e-6)


def verify_quotient_containment(p: GroupParams, *,
                                vertex_cap: int = DEFAULT_VERTEX_CAP,
                                dense_cap: int = DEFAULT_DENSE_CAP,
                                tol: float = 1e-7) -> tuple[bool, list[float]]:
    """Match every quotient eigenvalue injectively into the graph spectrum.

    Returns (all matched, unmatched quotient eigenvalues).
    """
    if p.m < 2:
        raise ValueError("the quotient is defined for m >= 2")
    g = build_graph(p, vertex_cap=vertex_cap)
    graph_vals = full_spectrum(g, dense_cap=dense_cap).values
    quotient_vals = symmetric_spectrum(quotient_formula(p)).values
    return is_sub_multiset(quotient_vals, graph_vals, tol=tol)


def verify_multiplicity(p: GroupParams, *, vertex_cap: int = DEFAULT_VERTEX_CAP,
                        dense_cap: int = DEFAULT_DENSE_CAP,
                        exact_cap: int = DEFAULT_EXACT_CAP,
                        cluster_tol: float = 1e-6) -> MultiplicityReport:
    """Check the eigenvalue-multiplicity lower bounds for m divisible by 4.

    For each k in 1..n-1 the even integer 2k must have multiplicity at
    least 3, except at k = floor(n/2) where at least 2 is required.
    Uses exact integer nullity within the exact cap, numeric clustering
    of the dense spectrum otherwise.
    """
    if p.m % 4 != 0:
        raise ValueError(f"multiplicity bounds require m divisible by 4, got m={p.m}")
    if p.n < 2:
        raise ValueError(f"multiplicity bounds require n >= 2, got n={p.n}")
    g = build_graph(p, vertex_cap=vertex_cap)
    use_exact = g.vertex_count <= exact_cap
    spectrum = None if use_exact else full_spectrum(g, dense_cap=dense_cap)
    half = p.n // 2
    cases = []
    for k in range(1, p.n):
        required = 2 if k == half else 3
        if use_exact:
            computed = exact_integer_multiplicity(g, 2 * k, exact_cap=exact_cap)
            method = "exact-nullity"
        else:
            computed = numeric_multiplicity(spectrum, float(2 * k), tol=cluster_tol)
            method = "numeric-cluster"
        cases.append(MultiplicityCase(k, 2 * k, required, computed, method,
                                      computed >= required))
    return MultiplicityReport(p.m, p.n, tuple(cases))


def verify_quotient_structure(p: GroupParams, *,
                              vertex_cap: int = DEFAULT_VERTEX_CAP) -> tuple[bool, int]:
    """Compare the counted quotient matrix against the block-circulant
    closed form; returns (equal, max absolute entry difference)."""
    g = build_graph(p, vertex_cap=vertex_cap)
    counted = quotient_empirical(g, build_partition(g))
    formula = quotient_formula(p)
    diff = int(np.max(np.abs(counted - formula)))
    return diff == 0, diff


def conjecture2_scan(m: int, n_max: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP,
                     dense_cap: int = DEFAULT_DENSE_CAP,
                     tol: float = 1e-6) -> Conjecture2Scan:
    """Record |graph gap - quotient gap| for n = 2..n_max (report-only).

    For m = 1 there is no quotient closed form, so only the graph gap
    is recorded.  The scan stops with a note once the vertex count
    exceeds the cap; it never asserts anything.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    records = []
    note = None
    for n in range(2, n_max + 1):
        p = GroupParams(m, n)
        if p.order > vertex_cap:
            note = (f"scan truncated at n={n}: {p.order} vertices exceed "
                    f"the vertex cap {vertex_cap}")
            break
        g = build_graph(p, vertex_cap=vertex_cap)
        lam1, lam2 = top_two_eigenvalues(g, dense_cap=dense_cap)
        graph_gap = lam1 - lam2
        if m >= 2:
            qvals = symmetric_spectrum(quotient_formula(p)).values
            quotient_gap = float(qvals[0] - qvals[1])
            difference = abs(graph_gap - quotient_gap)
            equal = difference <= tol
        else:
            quotient_gap = difference = equal = None
        records.append(ConjectureRecord(m, n, graph_gap, quotient_gap,
                                        difference, equal, tol))
    return Conjecture2Scan(tuple(records), note)


def gap_trend(m: int, n_max: int) -> list[TrendRow]:
    """Quotient gaps for n = 2..n_max as a proxy for the graph gap's
    approach to its bound; flags per-row monotonicity, asserts nothing."""
    if m < 2:
        raise ValueError("the gap trend uses the quotient, defined for m >= 2")
    bound = 1.0 if m == 2 else 2.0
    rows = []
    prev = None
    for n in range(2, n_max + 1):
        vals = symmetric_spectrum(quotient_formula(GroupParams(m, n))).values
        gap = float(vals[0] - vals[1])
        nondecreasing = prev is None or gap >= prev - 1e-12
        rows.append(TrendRow(n, gap, bound, bound - gap, nondecreasing))
        prev = gap
    return rows


# ---------------------------------------------------------------------------
# Report rendering (CSV rows: m,n,check,value,bound,passed)


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.12g}"


def report_rows(report) -> list[tuple]:
    """Flatten a report object into (m, n, check, value, bound, passed) rows."""
    if isinstance(report, GapReport):
        return [(report.m, report.n, "gap", report.gap, report.bound, report.passed)]
    if isinstance(report, MultiplicityReport):
        return [(report.m, report.n, f"mult_{c.eigenvalue}", c.computed, c.required,
                 c.passed) for c in report.cases]
    raise TypeError(f"no row form for {type(report).__name__}")


def rows_csv(rows) -> str:
    lines = ["m,n,check,value,bound,passed"]
    lines.extend(",".join((_fmt(r[0]), _fmt(r[1]), r[2], _fmt(r[3]), _fmt(r[4]),
                           _fmt(r[5]))) for r in rows)
    return "\n".join(lines) + "\n"


def rows_text(rows) -> str:
    lines = []
    for m, n, check, value, bound, passed in rows:
        status = "PASS" if passed else "FAIL"
        lines.append(f"m={_fmt(m)} n={_fmt(n)} {check}: value={_fmt(value)} "
                     f"bound={_fmt(bound)} {status}")
    return "\n".join(lines) + "\n"
