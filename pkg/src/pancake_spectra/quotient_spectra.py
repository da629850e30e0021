"""Spectra of the quotient matrix by three independent routes.

The block-circulant structure of the quotient matrix diagonalises along
roots of unity: its spectrum is the multiset union of the spectra of
the real symmetric n x n matrices

* ``diag +- anti``                      (m = 2), and
* ``2*diag + 2*cos(2*pi*k/m) * anti``   (k = 0, ..., m-1, m >= 3),

where ``diag``/``anti`` are the structural blocks of
:mod:`~pancake_spectra.equitable_partition`.  When 4 divides m the
cosine coefficient vanishes exactly at k = m/4 and k = 3m/4, so two
copies of Spec(2*diag) plus Spec(2*diag + 2*anti) are guaranteed
sub-multisets of the quotient spectrum; the latter spectrum has the
closed form {0, 2, 4, ..., 2n} minus {2*floor(n/2)}.

``symmetric_spectrum`` is the direct dense route used to cross-check
the decomposition; ``submatrix_gap_bound`` is the closed-form largest
eigenvalue of the 2 x 2 principal submatrix of ``2*diag + t*anti`` on
its first and last index, which exceeds 2n - 2 for every nonzero t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coloured_permutations import GroupParams
from .equitable_partition import structural_blocks

__all__ = [
    "SOURCE_DIRECT",
    "SOURCE_DECOMPOSED",
    "SOURCE_CLOSED_FORM",
    "RealSpectrum",
    "CosineCoefficient",
    "symmetric_spectrum",
    "cosine_coefficients",
    "block_circulant_spectrum",
    "gsw_spectrum",
    "mod4_guaranteed_sublist",
    "submatrix_gap_bound",
    "spectra_match",
    "max_spectral_difference",
    "is_sub_multiset",
    "cluster_multiplicities",
    "interlaces",
]

SOURCE_DIRECT = "direct"
SOURCE_DECOMPOSED = "decomposed"
SOURCE_CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class RealSpectrum:
    """Eigenvalues sorted nonincreasing, with provenance and accuracy."""

    values: np.ndarray
    source: str
    tolerance: float

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.float64)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def multiplicities(self, gap_tol: float = 1e-6) -> list[tuple[float, int]]:
        """Clustered (value, multiplicity) pairs; see :func:`cluster_multiplicities`."""
        return cluster_multiplicities(self.values, gap_tol=gap_tol)


@dataclass(frozen=True)
class CosineCoefficient:
    """The k-th circulant coefficient 2*cos(2*pi*k/m)."""

    k: int
    value: float


def _sorted_desc(values: np.ndarray) -> np.ndarray:
    out = np.sort(np.asarray(values, dtype=np.float64))[::-1]
    return np.ascontiguousarray(out)


def symmetric_spectrum(matrix, *, symmetry_tol: float = 1e-12) -> RealSpectrum:
    """All eigenvalues of a real symmetric matrix, sorted nonincreasing.

    Rejects matrices whose max entrywise asymmetry exceeds
    ``symmetry_tol``.  Backed by a dense symmetric eigensolver; each
    eigenvalue is accurate to about 1e-9 * max(1, inf-norm), recorded
    in the result's ``tolerance``.
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > symmetry_tol:
        raise ValueError(
            f"matrix is not symmetric: max asymmetry {asym:.3e} exceeds {symmetry_tol:.1e}"
        )
    vals = _sorted_desc(np.linalg.eigvalsh(a))
    scale = max(1.0, float(np.abs(a).sum(axis=1).max())) if a.size else 1.0
    return RealSpectrum(vals, SOURCE_DIRECT, 1e-9 * scale)


def cosine_coefficients(m: int) -> tuple[CosineCoefficient, ...]:
    """2*cos(2*pi*k/m) for k = 0..m-1, with exact zeros at k = m/4 and 3m/4.

    The exact zeroing keeps the guaranteed copies of Spec(2*diag) free
    of 1e-17-level cosine noise when 4 divides m.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    out = []
    for k in range(m):
        if 4 * k == m or 4 * k == 3 * m:
            c = 0.0
        else:
            c = 2.0 * math.cos(2.0 * math.pi * k / m)
        out.append(CosineCoefficient(k, c))
    return tuple(out)


def block_circulant_spectrum(p: GroupParams) -> RealSpectrum:
    """Quotient spectrum via the circulant decomposition into n x n blocks."""
    if p.m < 2:
        raise ValueError("the block decomposition is defined for m >= 2")
    blocks = structural_blocks(p.n)
    diag = blocks.diagonal.astype(np.float64)
    anti = blocks.anti_triangular.astype(np.float64)
    if p.m == 2:
        parts = [diag + anti, diag - anti]
    else:
        parts = [2.0 * diag + coeff.value * anti for coeff in cosine_coefficients(p.m)]
    vals = _sorted_desc(np.concatenate([np.linalg.eigvalsh(b) for b in parts]))
    scale = max(1.0, max(float(np.abs(b).sum(axis=1).max()) for b in parts))
    return RealSpectrum(vals, SOURCE_DECOMPOSED, 1e-9 * scale)


def gsw_spectrum(n: int) -> RealSpectrum:
    """Closed-form spectrum of ``2*diag + 2*anti`` (after GSW):
    the even integers {0, 2, ..., 2n} with 2*floor(n/2) removed."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    drop = 2 * (n // 2)
    vals = np.array([float(v) for v in range(2 * n, -1, -2) if v != drop])
    return RealSpectrum(vals, SOURCE_CLOSED_FORM, 0.0)


def mod4_guaranteed_sublist(p: GroupParams) -> RealSpectrum:
    """The 3n eigenvalues guaranteed in the quotient spectrum when 4 | m:
    {0, 2, ..., 2(n-1)} twice plus :func:`gsw_spectrum`."""
    if p.m % 4 != 0:
        raise ValueError(f"guaranteed sublist requires m divisible by 4, got m={p.m}")
    doubled = [float(2 * k) for k in range(p.n)] * 2
    vals = _sorted_desc(np.array(doubled + list(gsw_spectrum(p.n).values)))
    return RealSpectrum(vals, SOURCE_CLOSED_FORM, 0.0)


def submatrix_gap_bound(n: int, t: float) -> float:
    """Largest eigenvalue of [[t, t], [t, 2n-2]], the principal submatrix
    of ``2*diag + t*anti`` on its first and last rows/columns.

    By interlacing this lower-bounds the largest eigenvalue of the full
    block, and it is strictly greater than 2n - 2 for every nonzero t.
    """
    if n < 2:
        raise ValueError(f"the bound needs n >= 2, got n={n}")
    if t == 0:
        raise ValueError("t must be nonzero")
    corner = 2.0 * n - 2.0
    return (t + corner + math.sqrt((corner - t) ** 2 + 4.0 * t * t)) / 2.0


def _values(spectrum) -> np.ndarray:
    return np.asarray(getattr(spectrum, "values", spectrum), dtype=np.float64)


def max_spectral_difference(a, b) -> float:
    """Max elementwise gap between two sorted-nonincreasing spectra."""
    va, vb = _values(a), _values(b)
    if va.shape != vb.shape:
        raise ValueError(f"spectra have different lengths {len(va)} and {len(vb)}")
    if len(va) == 0:
        return 0.0
    return float(np.max(np.abs(va - vb)))


def spectra_match(a, b, *, tol: float = 1e-8) -> bool:
    """Sorted elementwise agreement within an absolute tolerance."""
    va, vb = _values(a), _values(b)
    return va.shape == vb.shape and (len(va) == 0 or max_spectral_difference(va, vb) <= tol)


def is_sub_multiset(sub, full, *, tol: float = 1e-8) -> tuple[bool, list[float]]:
    """Injectively match each value of ``sub`` to a value of ``full``.

    Both inputs are treated as sorted-nonincreasing multisets; matching
    is greedy on the sorted order, which is optimal for interval
    matching.  Returns (all matched, unmatched witnesses).
    """
    vs, vf = _values(sub), _values(full)
    unmatched: list[float] = []
    j = 0
    for s in vs:
        while j < len(vf) and vf[j] > s + tol:
            j += 1
        if j < len(vf) and abs(vf[j] - s) <= tol:
            j += 1
        else:
            unmatched.append(float(s))
    return not unmatched, unmatched


def cluster_multiplicities(values, *, gap_tol: float = 1e-6) -> list[tuple[float, int]]:
    """Group sorted eigenvalues whose consecutive gaps are below ``gap_tol``;
    returns (cluster mean, cluster size) pairs in nonincreasing order."""
    vals = _values(values)
    out: list[tuple[float, int]] = []
    start = 0
    for idx in range(1, len(vals) + 1):
        if idx == len(vals) or abs(vals[idx - 1] - vals[idx]) > gap_tol:
            chunk = vals[start:idx]
            out.append((float(chunk.mean()), len(chunk)))
            start = idx
    return out


def interlaces(outer, inner, *, tol: float = 1e-10) -> bool:
    """Whether ``inner`` interlaces ``outer`` as the spectrum of a principal
    submatrix must: outer_i >= inner_i >= outer_{N-M+i} (1-based, both
    sorted nonincreasing), up to a numeric slack ``tol``."""
    vo, vi = _values(outer), _values(inner)
    big, small = len(vo), len(vi)
    if small > big:
        raise ValueError("inner spectrum is longer than outer spectrum")
    for i in range(small):
        if not (vo[i] >= vi[i] - tol and vi[i] >= vo[big - small + i] - tol):
            return False
    return True
