"""Flip graphs of coloured permutations.

Vertices are all m-coloured permutations on n letters, indexed by
:func:`~pancake_spectra.coloured_permutations.rank`; two vertices are
adjacent when one is a prefix reversal of the other.  The graph is
simple and regular: 2n flips per vertex for m >= 3, n for m = 2 (the
two colour shifts coincide), n-1 for m = 1 (the length-1 flip fixes
every element and is dropped).

Construction enumerates the vertex range directly (unrank, flip, rank)
rather than exploring, so the adjacency structure is deterministic and
the work splits trivially across workers.  The result is an immutable
CSR adjacency table.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, TextIO, Union

import numpy as np
import scipy.sparse as sp

from .coloured_permutations import GroupParams, prefix_reversal, rank, unrank
from .errors import CapacityError

__all__ = [
    "Generator",
    "CayleyGraph",
    "DEFAULT_VERTEX_CAP",
    "generators",
    "build_graph",
    "is_connected",
    "adjacency_matrix",
    "sparse_adjacency",
    "edge_list_lines",
    "edge_list_text",
    "write_edge_list",
]

# A generator is a (prefix length k, colour shift +1/-1) pair.
Generator = tuple[int, int]

DEFAULT_VERTEX_CAP = 10**6


def generators(p: GroupParams) -> tuple[Generator, ...]:
    """The prefix-flip generating set, ordered by k ascending, +1 before -1.

    For m = 1 the length-1 flip is the identity and is excluded; for
    m = 2 the +1 and -1 flips coincide, so only +1 is listed; for
    m >= 3 both signs appear.  The set is closed under inversion: the
    inverse of flip (k, eps) is (k, -eps), which is the same flip when
    m <= 2.
    """
    if p.m == 1:
        return tuple((k, 1) for k in range(2, p.n + 1))
    if p.m == 2:
        return tuple((k, 1) for k in range(1, p.n + 1))
    return tuple((k, s) for k in range(1, p.n + 1) for s in (1, -1))


@dataclass(frozen=True)
class CayleyGraph:
    """Immutable CSR adjacency view of a flip graph."""

    params: GroupParams
    degree: int
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return int(self.indices.size) // 2

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbour row of vertex ``v`` (read-only view)."""
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex index {v} out of range [0, {self.vertex_count})")
        return self.indices[self.indptr[v]:self.indptr[v + 1]]


def build_graph(p: GroupParams, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> CayleyGraph:
    """Build the flip graph on all m**n * n! coloured permutations.

    Every vertex index is unranked, each generator applied, and the
    image reranked; neighbour rows are sorted ascending.  Distinctness
    of the images and absence of self-loops are asserted during the
    build rather than assumed.
    """
    count = p.order
    if count > vertex_cap:
        raise CapacityError(
            f"flip graph for (m={p.m}, n={p.n}) needs {count} vertices, "
            f"exceeding the vertex cap {vertex_cap}"
        )
    gens = generators(p)
    degree = len(gens)
    indices = np.empty(count * degree, dtype=np.int64)
    for v in range(count):
        sigma = unrank(v, p)
        row = sorted(rank(prefix_reversal(sigma, k, s, p), p) for k, s in gens)
        if len(set(row)) != degree or v in row:
            raise RuntimeError(
                f"generator images of vertex {v} are not {degree} distinct "
                f"non-loop vertices: {row}"
            )
        indices[v * degree:(v + 1) * degree] = row
    indices.setflags(write=False)
    indptr = np.arange(count + 1, dtype=np.int64) * degree
    indptr.setflags(write=False)
    return CayleyGraph(p, degree, indptr, indices)


def is_connected(g: CayleyGraph) -> bool:
    """Whether every vertex is reachable from vertex 0."""
    n = g.vertex_count
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            w = int(w)
            if not seen[w]:
                seen[w] = True
                reached += 1
                stack.append(w)
    return reached == n


def adjacency_matrix(g: CayleyGraph, dtype=np.float64) -> np.ndarray:
    """Dense adjacency matrix of ``g``."""
    n = g.vertex_count
    a = np.zeros((n, n), dtype=dtype)
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(g.indptr))
    a[rows, g.indices] = 1
    return a


def sparse_adjacency(g: CayleyGraph) -> sp.csr_matrix:
    """Sparse (CSR) adjacency matrix of ``g``."""
    data = np.ones(g.indices.size, dtype=np.float64)
    return sp.csr_matrix((data, g.indices, g.indptr),
                         shape=(g.vertex_count, g.vertex_count))


def edge_list_lines(g: CayleyGraph) -> Iterator[str]:
    """Lines of the edge-list format: header ``m n vcount degree`` then
    one ``u v`` pair per edge with u < v, in ascending lexicographic order."""
    yield f"{g.params.m} {g.params.n} {g.vertex_count} {g.degree}"
    for u in range(g.vertex_count):
        for w in g.neighbors(u):
            if u < w:
                yield f"{u} {w}"


def edge_list_text(g: CayleyGraph) -> str:
    """The complete newline-terminated edge-list file contents."""
    return "\n".join(edge_list_lines(g)) + "\n"


def write_edge_list(g: CayleyGraph, target: Union[str, Path, TextIO]) -> None:
    """Write the edge-list format to a path or text stream (deterministic bytes)."""
    if isinstance(target, (str, Path)):
        with open(target, "w", newline="\n") as fh:
            fh.write(edge_list_text(g))
    else:
        target.write(edge_list_text(g))
