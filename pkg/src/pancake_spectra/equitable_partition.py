"""The letter-1 partition of a flip graph and its quotient matrix.

Vertices are grouped by where the letter 1 sits and which colour it
carries: cell (i, j) holds the coloured permutations with letter 1 at
position j bearing colour i.  Listing the m*n cells lexicographically
by (i, j) makes the quotient matrix of this partition a block-circulant
matrix built from two n x n integer blocks:

* a diagonal block ``diag(0, 1, ..., n-1)`` counting the flips that fix
  the letter 1 (doubled when m >= 3, where each prefix admits two
  colour shifts), and
* a 0/1 block with ones where (row j, column j') satisfies
  j + j' <= n + 1, marking the position pairs connected by one flip
  that moves the letter 1.

``quotient_empirical`` counts neighbours cell-by-cell on the actual
graph and fails loudly if the partition is not equitable;
``quotient_formula`` assembles the closed form.  Their equality is an
exact integer statement and is checked entry-for-entry in the tests.
Everything here is integer arithmetic; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley_graph import CayleyGraph
from .coloured_permutations import ColouredPermutation, GroupParams, unrank
from .errors import NotEquitableError

__all__ = [
    "StructuralBlocks",
    "Partition",
    "structural_blocks",
    "cell_index",
    "build_partition",
    "trivial_partition",
    "quotient_empirical",
    "quotient_formula",
    "quotient_blocks",
    "quotient_csv",
]


@dataclass(frozen=True)
class StructuralBlocks:
    """The two n x n integer blocks the quotient matrix is assembled from."""

    diagonal: np.ndarray        # diag(0, 1, ..., n-1)
    anti_triangular: np.ndarray  # 0/1, ones where (1-based) row + col <= n + 1


def structural_blocks(n: int) -> StructuralBlocks:
    if n < 1:
        raise ValueError(f"block order must be positive, got {n}")
    diagonal = np.diag(np.arange(n, dtype=np.int64))
    anti = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        anti[a, : n - a] = 1
    diagonal.setflags(write=False)
    anti.setflags(write=False)
    return StructuralBlocks(diagonal, anti)


def cell_index(sigma: ColouredPermutation) -> tuple[int, int]:
    """Cell label (i, j) of ``sigma``: colour i and position j of letter 1."""
    j = sigma.psi.index(1) + 1
    return sigma.chi[j - 1], j


@dataclass(frozen=True)
class Partition:
    """An ordered list of vertex-index cells."""

    cells: tuple[np.ndarray, ...]

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def cell_sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def membership(self, vertex_count: int) -> np.ndarray:
        """Cell id per vertex; raises if the cells do not partition 0..vertex_count-1."""
        cell_of = np.full(vertex_count, -1, dtype=np.int64)
        total = 0
        for c, verts in enumerate(self.cells):
            cell_of[verts] = c
            total += len(verts)
        if total != vertex_count or (cell_of < 0).any():
            raise ValueError("cells do not partition the vertex set")
        return cell_of


def build_partition(g: CayleyGraph) -> Partition:
    """The letter-1 partition, cells ordered lexicographically by (i, j).

    Cell (i, j) sits at list index i*n + (j-1) and has exactly
    m**(n-1) * (n-1)! vertices.  Needs m >= 2: with a single colour the
    cells degenerate and the closed form below does not apply.
    """
    p = g.params
    if p.m < 2:
        raise ValueError("the letter-1 partition is defined for m >= 2")
    cells: list[list[int]] = [[] for _ in range(p.m * p.n)]
    for v in range(g.vertex_count):
        i, j = cell_index(unrank(v, p))
        cells[i * p.n + (j - 1)].append(v)
    return Partition(tuple(np.asarray(c, dtype=np.int64) for c in cells))


def trivial_partition(g: CayleyGraph) -> Partition:
    """The single-cell partition of the whole vertex set."""
    return Partition((np.arange(g.vertex_count, dtype=np.int64),))


def quotient_empirical(g: CayleyGraph, partition: Partition) -> np.ndarray:
    """Count neighbours per cell pair, verifying constancy over every vertex.

    Returns the integer quotient matrix; raises
    :class:`~pancake_spectra.errors.NotEquitableError` naming the
    offending cell pair and two witnesses if any vertex of a cell sees
    a different count.
    """
    k = partition.cell_count
    cell_of = partition.membership(g.vertex_count)
    q = np.zeros((k, k), dtype=np.int64)
    for c, verts in enumerate(partition.cells):
        if len(verts) == 0:
            raise ValueError(f"cell {c} is empty")
        ref = None
        ref_u = -1
        for u in verts:
            u = int(u)
            counts = np.bincount(cell_of[g.neighbors(u)], minlength=k)
            if ref is None:
                ref, ref_u = counts, u
            elif not np.array_equal(counts, ref):
                d = int(np.nonzero(counts != ref)[0][0])
                raise NotEquitableError(c, d, ref_u, u, int(ref[d]), int(counts[d]))
        q[c] = ref
    return q


def quotient_formula(p: GroupParams) -> np.ndarray:
    """Closed-form quotient matrix of the letter-1 partition.

    Block circulant of order m*n: diagonal blocks are the flip-count
    diagonal (doubled for m >= 3), the blocks at circulant offsets +-1
    are the anti-triangular 0/1 block, and all other blocks vanish.
    For m = 2 the two offsets coincide in the single off-diagonal block.
    """
    if p.m < 2:
        raise ValueError("the quotient closed form is defined for m >= 2")
    blocks = structural_blocks(p.n)
    m, n = p.m, p.n
    diag = blocks.diagonal if m == 2 else 2 * blocks.diagonal
    q = np.zeros((m * n, m * n), dtype=np.int64)

    def put(bi: int, bj: int, block: np.ndarray) -> None:
        q[bi * n:(bi + 1) * n, bj * n:(bj + 1) * n] = block

    for i in range(m):
        put(i, i, diag)
        put(i, (i + 1) % m, blocks.anti_triangular)
        put(i, (i - 1) % m, blocks.anti_triangular)
    return q


def quotient_blocks(q: np.ndarray, p: GroupParams) -> np.ndarray:
    """View of a quotient matrix as an m x m grid of n x n blocks."""
    m, n = p.m, p.n
    if q.shape != (m * n, m * n):
        raise ValueError(f"matrix of shape {q.shape} does not match order {m * n}")
    return q.reshape(m, n, m, n).swapaxes(1, 2)


def quotient_csv(q: np.ndarray, p: GroupParams) -> str:
    """CSV of integers, row-major, with a header comment line."""
    lines = [f"# Q m={p.m} n={p.n} order={q.shape[0]}"]
    lines.extend(",".join(str(int(x)) for x in row) for row in q)
    return "\n".join(lines) + "\n"
