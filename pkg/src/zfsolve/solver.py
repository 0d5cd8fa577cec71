"""Preprocess a matrix with a known zero forcing set, then solve Ax=b
repeatedly against a small condensed system.

The pipeline: a forcing pass (forward substitution along the forcing order)
costs O(m) and leaves a residual supported on the terminal vertices only.
Collecting that residual for each ZFS column yields the k×k core matrix B;
each later right-hand side then needs two forcing passes plus one O(k²)
solve against B's factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .forcing import ForcingPlan, forcing_plan, pattern_graph
from .linalg import (CoreFactorization, DenseMatrix, SparseMatrix, Vector,
                     column, factorize, fact_solve)


@dataclass(frozen=True)
class CoreMatrix:
    """The k×k condensed system: rows labeled by terminals (ascending),
    columns by the ZFS vertices (input order)."""

    matrix: DenseMatrix
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.matrix.n_rows

    def __post_init__(self):
        if self.matrix.n_rows != self.matrix.n_cols:
            raise ValueError("core matrix must be square")
        if len(self.row_labels) != self.k or len(self.col_labels) != self.k:
            raise ValueError("label count must match core size")


@dataclass(frozen=True)
class SolverHandle:
    """Everything needed for O(k² + m) solves: the matrix, its forcing plan,
    the core matrix, and the core's factorization.  Auxiliary field-element
    storage beyond A is O(k²)."""

    matrix: SparseMatrix
    plan: ForcingPlan
    core: CoreMatrix
    factorization: CoreFactorization

    @property
    def k(self) -> int:
        return self.plan.k

    @property
    def n(self) -> int:
        return self.matrix.n_rows

    def aux_field_elements(self) -> int:
        return self.core.matrix.array.size + self.factorization.field_element_count()


def _check_plan(a: SparseMatrix, plan: ForcingPlan) -> None:
    if a.n_rows != a.n_cols:
        raise ValueError("matrix must be square")
    if plan.n != a.n_rows:
        raise ValueError("plan size does not match matrix")


def _forcing_values(a: SparseMatrix, plan: ForcingPlan,
                    b: np.ndarray) -> np.ndarray:
    x = np.zeros(a.n_rows, dtype=np.int64)
    status = _kernels.csr_forcing(a.indptr, a.indices, a.data,
                                  plan.order_array, plan.parent_array,
                                  b, a.spec.modulus, x)
    if status != 0:
        raise ValueError("plan does not match the matrix pattern")
    return x


def _matvec_values(a: SparseMatrix, x: np.ndarray) -> np.ndarray:
    out = np.empty(a.n_rows, dtype=np.int64)
    _kernels.csr_matvec(a.indptr, a.indices, a.data, x, a.spec.modulus, out)
    return out


def forcing(a: SparseMatrix, plan: ForcingPlan, b: Vector) -> Vector:
    """Forward forcing pass: x starts at 0, and each forced vertex u gets
    x[u] = (b[parent] - row(parent)·x) / A[parent, u] in plan order.

    The result vanishes on the ZFS; every parent row's equation holds
    exactly.  Total cost O(m): each parent row is consumed once.
    """
    _check_plan(a, plan)
    if a.spec != b.spec or len(b) != a.n_rows:
        raise ValueError("dimension mismatch in forcing")
    return Vector(a.spec, _forcing_values(a, plan, b.values))


def forcing_residual(a: SparseMatrix, plan: ForcingPlan, b: Vector) -> Vector:
    """b - A·forcing(b): a linear map of b, supported on the terminals."""
    _check_plan(a, plan)
    if a.spec != b.spec or len(b) != a.n_rows:
        raise ValueError("dimension mismatch in forcing_residual")
    x = _forcing_values(a, plan, b.values)
    r = (b.values - _matvec_values(a, x)) % a.spec.modulus
    return Vector(a.spec, r)


def terminal_residual(a: SparseMatrix, plan: ForcingPlan, b: Vector) -> Vector:
    """forcing_residual restricted to the terminals, in core-row order."""
    r = forcing_residual(a, plan, b)
    return Vector(a.spec, r.values[plan.terminal_array])


def compute_core(a: SparseMatrix, plan: ForcingPlan) -> CoreMatrix:
    """Condense A to its k×k core: column v is the terminal residual of A's
    column v, for each ZFS vertex v.  One forcing pass and one sparse
    product per column: O(mk) total, O(k²) output.
    """
    _check_plan(a, plan)
    p = a.spec.modulus
    k = plan.k
    t_idx = plan.terminal_array
    b_arr = np.empty((k, k), dtype=np.int64)
    for col_pos, v in enumerate(plan.zfs):
        a_v = column(a, v).values
        x = _forcing_values(a, plan, a_v)
        r = (a_v - _matvec_values(a, x)) % p
        b_arr[:, col_pos] = r[t_idx]
    return CoreMatrix(DenseMatrix(a.spec, b_arr), plan.terminals, plan.zfs)


def preprocess(a: SparseMatrix, z: Iterable[int]) -> SolverHandle:
    """Build the solve-many handle for a matrix and one of its ZFSs.

    O(mk) build; raises NotZeroForcingSetError if z does not force.
    """
    plan = forcing_plan(pattern_graph(a), z)
    core = compute_core(a, plan)
    return SolverHandle(a, plan, core, factorize(core.matrix))


def solve(h: SolverHandle, b: Vector) -> Optional[Vector]:
    """One O(k² + m) solve of A·x = b; None when there is no solution.

    The ZFS coordinates of the answer come from the core system (free
    unknowns fixed to 0), the rest from a forcing pass; the result is
    residual-checked against A before being returned.
    """
    a = h.matrix
    if a.spec != b.spec or len(b) != a.n_rows:
        raise ValueError("dimension mismatch in solve")
    p = a.spec.modulus
    plan = h.plan
    z = _forcing_values(a, plan, b.values)
    b_core = (b.values - _matvec_values(a, z))[plan.terminal_array] % p
    y = fact_solve(h.factorization, Vector(a.spec, b_core))
    if y is None:
        return None
    x_part = np.zeros(a.n_rows, dtype=np.int64)
    x_part[plan.zfs_array] = y.values
    rest = (b.values - _matvec_values(a, x_part)) % p
    x = (x_part + _forcing_values(a, plan, rest)) % p
    if np.any((_matvec_values(a, x) - b.values) % p):
        return None
    return Vector(a.spec, x)
