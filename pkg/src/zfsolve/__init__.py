"""zfsolve: preprocess a sparse matrix over a finite field with a zero
forcing set, then solve Ax=b repeatedly in O(k²+m); includes a fast core
construction for lights-out grids and a playground service.
"""

from .fields import FieldElement, FieldSpec, is_prime, pack_bits, popcount, unpack_bits
from .forcing import (ClosureResult, ForcingPlan, NotZeroForcingSetError,
                      PatternGraph, closure, forcing_plan, greedy_find_zfs,
                      is_zfs, pattern_graph, random_instance)
from .grid import (BoardState, GridHandle, GridSpec, apply_presses,
                   chase_step_matrix, grid_core, grid_matrix,
                   lightsout_preprocess, press, random_solvable, solve_board)
from .linalg import (CoreFactorization, DenseMatrix, SparseMatrix, Vector,
                     column, dense_from, dense_gaussian_solve,
                     dense_gaussian_solve_many, dense_matvec, dense_mul,
                     fact_solve, factorize, kernel_basis, matpow, rank,
                     row_submatrix, spmv)
from .solver import (CoreMatrix, SolverHandle, compute_core, forcing,
                     forcing_residual, preprocess, solve, terminal_residual)

__all__ = [
    "BoardState", "ClosureResult", "CoreFactorization", "CoreMatrix",
    "DenseMatrix", "FieldElement", "FieldSpec", "ForcingPlan", "GridHandle",
    "GridSpec", "NotZeroForcingSetError", "PatternGraph", "SolverHandle",
    "SparseMatrix", "Vector", "apply_presses", "chase_step_matrix", "closure",
    "column", "compute_core", "dense_from", "dense_gaussian_solve",
    "dense_gaussian_solve_many", "dense_matvec", "dense_mul", "fact_solve",
    "factorize", "forcing", "forcing_plan", "forcing_residual", "greedy_find_zfs",
    "grid_core", "grid_matrix", "is_prime", "is_zfs", "kernel_basis",
    "lightsout_preprocess", "matpow", "pack_bits", "pattern_graph", "popcount",
    "preprocess", "press", "random_instance", "random_solvable", "rank",
    "row_submatrix", "solve", "solve_board", "spmv", "terminal_residual",
    "unpack_bits",
]
