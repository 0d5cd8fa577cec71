"""Lights-out on rectangular grids over GF(2).

Pressing a cell flips its closed neighborhood; clearing a board state b is
exactly solving A·x = b where A is the closed-neighborhood matrix.  The
first row of an r×c grid (c <= r) is a zero forcing set, and the forcing
pass is light chasing row by row.  One chase step is a fixed linear map on
(current row, next row) pairs, so the whole chase telescopes into the
(r-1)th power of a 2c×2c step matrix, computed by repeated squaring; the
grid core matrix falls out of that power without ever running the generic
per-column construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fields import FieldSpec
from .forcing import forcing_plan, pattern_graph
from .linalg import (DenseMatrix, SparseMatrix, Vector, dense_from, dense_mul,
                     factorize, matpow, spmv)
from .solver import CoreMatrix, SolverHandle, solve

GF2 = FieldSpec.gf2()


@dataclass(frozen=True)
class GridSpec:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid dimensions must be positive")

    @property
    def n_cells(self) -> int:
        return self.rows * self.cols

    def index(self, row: int, col: int) -> int:
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise IndexError(f"cell ({row}, {col}) out of range")
        return row * self.cols + col


@dataclass(frozen=True)
class BoardState:
    """Light states, row-major; 1 = on."""

    spec: GridSpec
    cells: Vector

    def __post_init__(self):
        if self.cells.spec != GF2 or len(self.cells) != self.spec.n_cells:
            raise ValueError("board cells must be a GF(2) vector of rows*cols")

    @classmethod
    def from_values(cls, spec: GridSpec, values) -> "BoardState":
        return cls(spec, Vector(GF2, values))

    @classmethod
    def all_on(cls, spec: GridSpec) -> "BoardState":
        return cls(spec, Vector(GF2, np.ones(spec.n_cells, dtype=np.int64)))

    @classmethod
    def all_off(cls, spec: GridSpec) -> "BoardState":
        return cls(spec, Vector.zeros(GF2, spec.n_cells))

    def grid(self) -> np.ndarray:
        return self.cells.values.reshape(self.spec.rows, self.spec.cols)

    def is_off(self) -> bool:
        return not self.cells.values.any()


def grid_matrix(g: GridSpec) -> SparseMatrix:
    """Closed-neighborhood matrix of the grid: identity plus 4-adjacency."""
    r, c = g.rows, g.cols
    indptr = np.zeros(r * c + 1, dtype=np.int64)
    cols: list[int] = []
    for i in range(r):
        for j in range(c):
            here = []
            if i > 0:
                here.append((i - 1) * c + j)
            if j > 0:
                here.append(i * c + j - 1)
            here.append(i * c + j)
            if j < c - 1:
                here.append(i * c + j + 1)
            if i < r - 1:
                here.append((i + 1) * c + j)
            cols.extend(here)
            indptr[i * c + j + 1] = len(cols)
    indices = np.array(cols, dtype=np.int64)
    return SparseMatrix(GF2, r * c, r * c, indptr, indices,
                        np.ones(len(cols), dtype=np.int64))


def chase_step_matrix(width: int) -> DenseMatrix:
    """One light-chasing step as a 2w×2w GF(2) block matrix [[T, I], [I, 0]],
    where T is tridiagonal ones (a press touches itself and its row
    neighbors)."""
    if width < 1:
        raise ValueError("width must be positive")
    w = width
    tri = (np.abs(np.arange(w)[:, None] - np.arange(w)[None, :]) <= 1)
    block = np.zeros((2 * w, 2 * w), dtype=np.int64)
    block[:w, :w] = tri
    block[:w, w:] = np.eye(w, dtype=np.int64)
    block[w:, :w] = np.eye(w, dtype=np.int64)
    return DenseMatrix(GF2, block)


def _chase_core_values(width: int, height: int) -> np.ndarray:
    """Core matrix entries for a height×width grid with the first row as the
    ZFS, via the (height-1)th power of the chase step matrix.

    A ZFS column restricted to the first two rows stacks to [tri; I], so all
    k columns are chased at once with one 2w×w product.
    """
    w = width
    if height == 1:
        # ZFS is the whole vertex set; the core is the matrix itself
        return dense_from(grid_matrix(GridSpec(1, w))).array
    step_power = matpow(chase_step_matrix(w), height - 1)
    stack = np.zeros((2 * w, w), dtype=np.int64)
    stack[:w, :] = chase_step_matrix(w).array[:w, :w]
    stack[w:, :] = np.eye(w, dtype=np.int64)
    chased = dense_mul(step_power, DenseMatrix(GF2, stack))
    return chased.array[:w, :]


def grid_core(n: int) -> CoreMatrix:
    """Core matrix of the n×n grid (ZFS = first row) by the chase-power
    route; bit-identical to compute_core on the grid matrix."""
    if n < 2:
        raise ValueError("grid_core requires n >= 2")
    values = _chase_core_values(n, n)
    terminals = tuple(range(n * (n - 1), n * n))
    return CoreMatrix(DenseMatrix(GF2, values), terminals, tuple(range(n)))


@dataclass(frozen=True)
class GridHandle:
    """Solver handle for a lights-out grid.  The matrix inside is stored with
    the short side as the ZFS row; boards are reoriented on the way in/out,
    so callers always see the grid they asked for."""

    grid: GridSpec
    handle: SolverHandle
    transposed: bool

    @property
    def k(self) -> int:
        return self.handle.k


def lightsout_preprocess(g: GridSpec) -> GridHandle:
    """Build the repeated-solve handle for a grid, chasing along the longer
    dimension: the core costs O(log(long)) products of order 2·short."""
    transposed = g.cols > g.rows
    internal = GridSpec(g.cols, g.rows) if transposed else g
    a = grid_matrix(internal)
    plan = forcing_plan(pattern_graph(a), range(internal.cols))
    core_values = _chase_core_values(internal.cols, internal.rows)
    core = CoreMatrix(DenseMatrix(GF2, core_values), plan.terminals, plan.zfs)
    handle = SolverHandle(a, plan, core, factorize(core.matrix))
    return GridHandle(g, handle, transposed)


def _to_internal(gh: GridHandle, values: np.ndarray) -> np.ndarray:
    if not gh.transposed:
        return values
    return values.reshape(gh.grid.rows, gh.grid.cols).T.reshape(-1)


def _to_user(gh: GridHandle, values: np.ndarray) -> np.ndarray:
    if not gh.transposed:
        return values
    return values.reshape(gh.grid.cols, gh.grid.rows).T.reshape(-1)


def solve_board(gh: GridHandle, board: BoardState) -> Optional[BoardState]:
    """Press pattern clearing the board, or None if it cannot be cleared.

    The returned pattern is canonical: free press choices are 0."""
    if board.spec != gh.grid:
        raise ValueError("board does not match the handle's grid")
    b = Vector(GF2, _to_internal(gh, board.cells.values))
    x = solve(gh.handle, b)
    if x is None:
        return None
    return BoardState.from_values(gh.grid, _to_user(gh, x.values))


def press(board: BoardState, cell: tuple[int, int]) -> BoardState:
    """Flip the closed neighborhood of (row, col); pressing twice undoes."""
    r, c = cell
    g = board.spec
    g.index(r, c)
    values = board.cells.values.copy()
    for rr, cc in ((r - 1, c), (r, c - 1), (r, c), (r, c + 1), (r + 1, c)):
        if 0 <= rr < g.rows and 0 <= cc < g.cols:
            values[rr * g.cols + cc] ^= 1
    return BoardState.from_values(g, values)


def apply_presses(board: BoardState, pattern: BoardState) -> BoardState:
    """Simulate pressing every set cell of the pattern, one press at a time."""
    if pattern.spec != board.spec:
        raise ValueError("pattern does not match board")
    out = board
    for r in range(board.spec.rows):
        for c in range(board.spec.cols):
            if pattern.cells[r * board.spec.cols + c]:
                out = press(out, (r, c))
    return out


def random_solvable(g: GridSpec, seed: int) -> BoardState:
    """Board reachable from all-off by pressing: b = A·x for random x."""
    rng = np.random.default_rng(seed)
    x = rng.integers(0, 2, size=g.n_cells, dtype=np.int64)
    b = spmv(grid_matrix(g), Vector(GF2, x))
    return BoardState(g, b)
