"""Vectors and matrices over a FieldSpec, plus the factorize-once /
solve-many kernel used for the condensed core system.

Internal storage is int64 canonical residues.  The dense Gaussian solver at
the bottom is the test oracle for everything else in the package; it is a
separate numpy elimination path, deliberately not sharing code with the
numba LU kernels it is used to check.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .fields import FieldSpec, pack_bits, unpack_bits


def _as_residues(spec: FieldSpec, values: Iterable[int]) -> np.ndarray:
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                     dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= spec.modulus):
        raise ValueError(f"entries must be canonical residues mod {spec.modulus}")
    return arr


class Vector:
    """Fixed-length vector of canonical residues."""

    def __init__(self, spec: FieldSpec, values: Iterable[int]):
        self.spec = spec
        self.values = _as_residues(spec, values).reshape(-1)
        self.values.flags.writeable = False

    @classmethod
    def zeros(cls, spec: FieldSpec, n: int) -> "Vector":
        return cls(spec, np.zeros(n, dtype=np.int64))

    def __len__(self) -> int:
        return self.values.size

    def __getitem__(self, i: int) -> int:
        return int(self.values[i])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Vector) and self.spec == other.spec
                and np.array_equal(self.values, other.values))

    def __add__(self, other: "Vector") -> "Vector":
        self._conform(other)
        return Vector(self.spec, (self.values + other.values) % self.spec.modulus)

    def __sub__(self, other: "Vector") -> "Vector":
        self._conform(other)
        return Vector(self.spec, (self.values - other.values) % self.spec.modulus)

    def _conform(self, other: "Vector") -> None:
        if self.spec != other.spec or len(self) != len(other):
            raise ValueError("vector mismatch")

    def __repr__(self) -> str:
        return f"Vector(GF({self.spec.modulus}), {self.values.tolist()})"


class SparseMatrix:
    """CSR matrix; stored values are nonzero and column indices are sorted."""

    def __init__(self, spec: FieldSpec, n_rows: int, n_cols: int,
                 indptr: np.ndarray, indices: np.ndarray, data: np.ndarray):
        if n_rows < 1 or n_cols < 1:
            raise ValueError("matrix dimensions must be positive")
        self.spec = spec
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.data = np.asarray(data, dtype=np.int64)
        for a in (self.indptr, self.indices, self.data):
            a.flags.writeable = False

    @classmethod
    def from_triplets(cls, spec: FieldSpec, n_rows: int, n_cols: int,
                      triplets: Iterable[tuple[int, int, int]]) -> "SparseMatrix":
        """Build from (row, col, value) triplets, 0-based.  Duplicate (row, col)
        pairs are rejected; zero values are dropped.
        """
        items = [(int(i), int(j), int(v)) for i, j, v in triplets]
        for i, j, v in items:
            if not (0 <= i < n_rows and 0 <= j < n_cols):
                raise IndexError(f"entry ({i}, {j}) out of range")
            spec.validate(v)
        seen = set()
        for i, j, _ in items:
            if (i, j) in seen:
                raise ValueError(f"duplicate entry at ({i}, {j})")
            seen.add((i, j))
        items = sorted((i, j, v) for i, j, v in items if v != 0)
        indptr = np.zeros(n_rows + 1, dtype=np.int64)
        for i, _, _ in items:
            indptr[i + 1] += 1
        np.cumsum(indptr, out=indptr)
        indices = np.array([j for _, j, _ in items], dtype=np.int64)
        data = np.array([v for _, _, v in items], dtype=np.int64)
        return cls(spec, n_rows, n_cols, indptr, indices, data)

    def nnz(self) -> int:
        return int(self.data.size)

    def triplets(self) -> list[tuple[int, int, int]]:
        out = []
        for i in range(self.n_rows):
            for j in range(self.indptr[i], self.indptr[i + 1]):
                out.append((i, int(self.indices[j]), int(self.data[j])))
        return out

    @cached_property
    def _by_column(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        # CSC view: (col_indptr, row indices, values), used for column extraction
        rows = np.repeat(np.arange(self.n_rows, dtype=np.int64),
                         np.diff(self.indptr))
        order = np.lexsort((rows, self.indices))
        col_indptr = np.zeros(self.n_cols + 1, dtype=np.int64)
        np.add.at(col_indptr, self.indices + 1, 1)
        np.cumsum(col_indptr, out=col_indptr)
        return col_indptr, rows[order], self.data[order]

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix) and self.spec == other.spec
                and self.n_rows == other.n_rows and self.n_cols == other.n_cols
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices)
                and np.array_equal(self.data, other.data))

    def __repr__(self) -> str:
        return (f"SparseMatrix(GF({self.spec.modulus}), "
                f"{self.n_rows}x{self.n_cols}, nnz={self.nnz()})")


class DenseMatrix:
    """Row-major dense matrix of canonical residues."""

    def __init__(self, spec: FieldSpec, array: np.ndarray):
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("dense matrix must be 2-D with positive dimensions")
        if arr.size and (arr.min() < 0 or arr.max() >= spec.modulus):
            raise ValueError(f"entries must be canonical residues mod {spec.modulus}")
        self.spec = spec
        self.array = arr.copy()
        self.array.flags.writeable = False

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "DenseMatrix":
        return cls(spec, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, spec: FieldSpec, n_rows: int, n_cols: int) -> "DenseMatrix":
        return cls(spec, np.zeros((n_rows, n_cols), dtype=np.int64))

    @property
    def n_rows(self) -> int:
        return self.array.shape[0]

    @property
    def n_cols(self) -> int:
        return self.array.shape[1]

    def __eq__(self, other) -> bool:
        return (isinstance(other, DenseMatrix) and self.spec == other.spec
                and np.array_equal(self.array, other.array))

    def __repr__(self) -> str:
        return f"DenseMatrix(GF({self.spec.modulus}), {self.n_rows}x{self.n_cols})"


# -- basic products ----------------------------------------------------------

def _matmul_mod(x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    """Exact (x @ y) % p for int64 residue arrays, chunking the inner axis so
    no partial sum overflows int64 (chunk * (p-1)**2 < 2**62).
    """
    chunk = max(1, (1 << 62) // ((p - 1) * (p - 1))) if p > 2 else 1 << 40
    inner = x.shape[1]
    if inner <= chunk:
        return (x @ y) % p
    acc = np.zeros((x.shape[0],) + y.shape[1:], dtype=np.int64)
    for lo in range(0, inner, chunk):
        hi = min(lo + chunk, inner)
        acc = (acc + x[:, lo:hi] @ y[lo:hi]) % p
    return acc


def spmv(a: SparseMatrix, x: Vector) -> Vector:
    """Sparse matrix-vector product; O(nnz) field operations."""
    if a.spec != x.spec or a.n_cols != len(x):
        raise ValueError("dimension mismatch in spmv")
    out = np.empty(a.n_rows, dtype=np.int64)
    _kernels.csr_matvec(a.indptr, a.indices, a.data, x.values,
                        a.spec.modulus, out)
    return Vector(a.spec, out)


def row_submatrix(a: SparseMatrix, rows: Sequence[int]) -> SparseMatrix:
    """Extract the given rows (0-based, in the given order) as a new matrix."""
    rows = [int(r) for r in rows]
    for r in rows:
        if not 0 <= r < a.n_rows:
            raise IndexError(f"row {r} out of range")
    indptr = np.zeros(len(rows) + 1, dtype=np.int64)
    chunks_idx, chunks_val = [], []
    for t, r in enumerate(rows):
        s, e = a.indptr[r], a.indptr[r + 1]
        indptr[t + 1] = indptr[t] + (e - s)
        chunks_idx.append(a.indices[s:e])
        chunks_val.append(a.data[s:e])
    indices = np.concatenate(chunks_idx) if chunks_idx else np.empty(0, np.int64)
    data = np.concatenate(chunks_val) if chunks_val else np.empty(0, np.int64)
    return SparseMatrix(a.spec, len(rows), a.n_cols, indptr, indices, data)


def column(a: SparseMatrix, j: int) -> Vector:
    """Extract column j (0-based) as a dense vector."""
    if not 0 <= j < a.n_cols:
        raise IndexError(f"column {j} out of range")
    col_indptr, row_idx, vals = a._by_column
    out = np.zeros(a.n_rows, dtype=np.int64)
    s, e = col_indptr[j], col_indptr[j + 1]
    out[row_idx[s:e]] = vals[s:e]
    return Vector(a.spec, out)


def dense_from(a: SparseMatrix) -> DenseMatrix:
    out = np.zeros((a.n_rows, a.n_cols), dtype=np.int64)
    for i in range(a.n_rows):
        s, e = a.indptr[i], a.indptr[i + 1]
        out[i, a.indices[s:e]] = a.data[s:e]
    return DenseMatrix(a.spec, out)


def dense_mul(x: DenseMatrix, y: DenseMatrix) -> DenseMatrix:
    """Classical cubic product.  GF(2) runs on packed 64-bit words."""
    if x.spec != y.spec or x.n_cols != y.n_rows:
        raise ValueError("dimension mismatch in dense_mul")
    if x.spec.modulus == 2:
        xb = x.array.astype(np.uint8)
        yw = pack_bits(y.array)
        out = np.zeros((x.n_rows, yw.shape[1]), dtype=np.uint64)
        _kernels.gf2_matmul_packed(xb, yw, out)
        return DenseMatrix(x.spec, unpack_bits(out, y.n_cols))
    return DenseMatrix(x.spec, _matmul_mod(x.array, y.array, x.spec.modulus))


def matpow(x: DenseMatrix, e: int) -> DenseMatrix:
    """x**e by repeated squaring; at most 2*ceil(log2(e+1)) multiplications."""
    if x.n_rows != x.n_cols:
        raise ValueError("matpow requires a square matrix")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = DenseMatrix.identity(x.spec, x.n_rows)
    base = x
    while e > 0:
        if e & 1:
            result = dense_mul(result, base)
        e >>= 1
        if e > 0:
            base = dense_mul(base, base)
    return result


# -- factorize once, solve many ----------------------------------------------

class CoreFactorization:
    """Full-pivot LU of a (possibly singular) k×k matrix: O(k²) storage,
    O(k²) work per solve.  `lu` holds unit-lower factors strictly below the
    diagonal and the upper factor on/above; row_perm/col_perm map factored
    positions back to original indices.
    """

    def __init__(self, spec: FieldSpec, lu: np.ndarray, row_perm: np.ndarray,
                 col_perm: np.ndarray, rank: int):
        self.spec = spec
        self.lu = lu
        self.row_perm = row_perm
        self.col_perm = col_perm
        self.rank = rank
        self.k = lu.shape[0]
        self.pivot_cols = tuple(sorted(int(c) for c in col_perm[:rank]))

    def field_element_count(self) -> int:
        return self.lu.size

    def reconstruct(self) -> DenseMatrix:
        """Multiply the factors back together (test support)."""
        k, p = self.k, self.spec.modulus
        lower = np.tril(self.lu, -1) % p
        np.fill_diagonal(lower, 1)
        upper = np.triu(self.lu) % p
        upper[self.rank:, :] = 0
        prod = _matmul_mod(lower, upper, p)
        out = np.zeros((k, k), dtype=np.int64)
        out[np.ix_(self.row_perm, self.col_perm)] = prod
        return DenseMatrix(self.spec, out)


def factorize(b: DenseMatrix) -> CoreFactorization:
    """Eliminate with deterministic full pivoting; singular input is fine."""
    if b.n_rows != b.n_cols:
        raise ValueError("factorize requires a square matrix")
    k = b.n_rows
    w = b.array.copy()
    row_perm = np.arange(k, dtype=np.int64)
    col_perm = np.arange(k, dtype=np.int64)
    rank = _kernels.lu_factorize(w, row_perm, col_perm, b.spec.modulus)
    return CoreFactorization(b.spec, w, row_perm, col_perm, int(rank))


def fact_solve(f: CoreFactorization, c: Vector) -> Optional[Vector]:
    """One back-substitution solve of B·y = c.  Returns None when the system
    is inconsistent; otherwise the unique solution with free unknowns at 0.
    """
    if f.spec != c.spec or len(c) != f.k:
        raise ValueError("dimension mismatch in fact_solve")
    y = np.empty(f.k, dtype=np.int64)
    status = _kernels.lu_solve(f.lu, f.row_perm, f.col_perm, f.rank,
                               c.values, f.spec.modulus, y)
    if status != 0:
        return None
    return Vector(f.spec, y)


# -- dense Gaussian elimination: the independent oracle ----------------------

def _rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p); returns (rref, pivot columns)."""
    m = m.copy()
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        t = r + int(hits[0])
        if t != r:
            m[[r, t]] = m[[t, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = m[r] * inv % p
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def dense_matvec(x: DenseMatrix, v: Vector) -> Vector:
    if x.spec != v.spec or x.n_cols != len(v):
        raise ValueError("dimension mismatch in dense_matvec")
    out = _matmul_mod(x.array, v.values.reshape(-1, 1), x.spec.modulus)
    return Vector(x.spec, out.reshape(-1))


def dense_gaussian_solve_many(a: DenseMatrix,
                              rhs: np.ndarray) -> list[Optional[np.ndarray]]:
    """Solve a·x = rhs[:, i] for every column i by one Gauss-Jordan sweep of
    the augmented block.  Free variables are 0; inconsistent columns map to
    None.  Per-column results match dense_gaussian_solve exactly.
    """
    p = a.spec.modulus
    n_rows, n_cols = a.array.shape
    rhs = np.asarray(rhs, dtype=np.int64).reshape(n_rows, -1)
    aug = np.concatenate([a.array, rhs], axis=1)
    red, pivots = _rref(aug, p)
    pivots_a = [c for c in pivots if c < n_cols]
    r = len(pivots_a)
    out: list[Optional[np.ndarray]] = []
    for t in range(rhs.shape[1]):
        col = red[:, n_cols + t]
        if np.any(col[r:]):
            out.append(None)
            continue
        x = np.zeros(n_cols, dtype=np.int64)
        x[pivots_a] = col[:r]
        residual = (_matmul_mod(a.array, x.reshape(-1, 1), p).reshape(-1)
                    - rhs[:, t]) % p
        if np.any(residual):
            raise AssertionError("oracle produced a non-solution")
        out.append(x)
    return out


def dense_gaussian_solve(a: DenseMatrix, b: Vector) -> Optional[Vector]:
    """Reference solver: plain Gauss-Jordan on [A | b], residual-checked."""
    if a.spec != b.spec or a.n_rows != len(b):
        raise ValueError("dimension mismatch in dense_gaussian_solve")
    x = dense_gaussian_solve_many(a, b.values.reshape(-1, 1))[0]
    return None if x is None else Vector(a.spec, x)


def rank(a: DenseMatrix) -> int:
    """Exact rank over the field."""
    _, pivots = _rref(a.array, a.spec.modulus)
    return len(pivots)


def kernel_basis(a: DenseMatrix) -> list[np.ndarray]:
    """Null-space basis vectors (test support for uniqueness properties)."""
    p = a.spec.modulus
    red, pivots = _rref(a.array, p)
    n = a.n_cols
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = np.zeros(n, dtype=np.int64)
        v[fcol] = 1
        for i, c in enumerate(pivots):
            v[c] = (-red[i, fcol]) % p
        basis.append(v)
    return basis
