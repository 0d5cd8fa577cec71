"""Compiled inner loops. All modular kernels take int64 canonical residues;
moduli stay below 2**31 so a single product never overflows int64.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def powmod(a, e, p):
    a %= p
    r = 1
    while e > 0:
        if e & 1:
            r = (r * a) % p
        a = (a * a) % p
        e >>= 1
    return r


@njit(cache=True)
def csr_matvec(indptr, indices, data, x, p, out):
    n = indptr.size - 1
    for i in range(n):
        acc = 0
        for j in range(indptr[i], indptr[i + 1]):
            acc = (acc + data[j] * x[indices[j]]) % p
        out[i] = acc


@njit(cache=True)
def csr_forcing(indptr, indices, data, order, parents, b, p, x):
    """Forward forcing pass: for each forced vertex u (in order), set
    x[u] = (b[parent] - row(parent)·x) / A[parent, u].  x must start at 0.
    Returns 0 on success, 1 if some A[parent, u] entry is missing.
    """
    for t in range(order.size):
        u = order[t]
        pr = parents[t]
        acc = 0
        piv = 0
        for j in range(indptr[pr], indptr[pr + 1]):
            c = indices[j]
            if c == u:
                piv = data[j]
            acc = (acc + data[j] * x[c]) % p
        if piv == 0:
            return 1
        x[u] = ((b[pr] - acc) % p) * powmod(piv, p - 2, p) % p
    return 0


@njit(cache=True)
def lu_factorize(w, row_perm, col_perm, p):
    """In-place LU with full pivoting on the k×k work matrix w.

    Pivot selection is deterministic: the first nonzero of the active block,
    scanning rows top-down and columns left-right.  Rows/columns are swapped
    physically; row_perm/col_perm record original positions.  After return,
    w holds the unit-lower factors strictly below the diagonal and the upper
    factor on/above it.  Returns the rank.
    """
    k = w.shape[0]
    for s in range(k):
        pr = -1
        pc = -1
        for i in range(s, k):
            for j in range(s, k):
                if w[i, j] != 0:
                    pr = i
                    pc = j
                    break
            if pr >= 0:
                break
        if pr < 0:
            return s
        if pr != s:
            for j in range(k):
                w[s, j], w[pr, j] = w[pr, j], w[s, j]
            row_perm[s], row_perm[pr] = row_perm[pr], row_perm[s]
        if pc != s:
            for i in range(k):
                w[i, s], w[i, pc] = w[i, pc], w[i, s]
            col_perm[s], col_perm[pc] = col_perm[pc], col_perm[s]
        inv_piv = powmod(w[s, s], p - 2, p)
        for i in range(s + 1, k):
            f = (w[i, s] * inv_piv) % p
            w[i, s] = f
            if f != 0:
                for j in range(s + 1, k):
                    w[i, j] = (w[i, j] - f * w[s, j]) % p
    return k


@njit(cache=True)
def lu_solve(lu, row_perm, col_perm, rank, c, p, y):
    """Two substitution passes on an lu_factorize result; O(k²).

    Free (non-pivot) unknowns are fixed to 0.  Returns 0 and fills y with a
    solution, or 1 if the system is inconsistent.
    """
    k = lu.shape[0]
    w = np.empty(k, dtype=np.int64)
    for i in range(k):
        w[i] = c[row_perm[i]]
    for s in range(rank):
        ws = w[s]
        if ws != 0:
            for i in range(s + 1, k):
                f = lu[i, s]
                if f != 0:
                    w[i] = (w[i] - f * ws) % p
    for i in range(rank, k):
        if w[i] % p != 0:
            return 1
    yp = np.zeros(k, dtype=np.int64)
    for s in range(rank - 1, -1, -1):
        acc = w[s]
        for j in range(s + 1, rank):
            acc = (acc - lu[s, j] * yp[j]) % p
        yp[s] = acc * powmod(lu[s, s], p - 2, p) % p
    for s in range(k):
        y[col_perm[s]] = 0
    for s in range(rank):
        y[col_perm[s]] = yp[s]
    return 0


@njit(cache=True)
def gf2_matmul_packed(x_bits, y_words, out_words):
    """out = X·Y over GF(2): X as a 0/1 byte matrix, Y and out packed rows."""
    n, inner = x_bits.shape
    n_words = y_words.shape[1]
    for i in range(n):
        for t in range(inner):
            if x_bits[i, t]:
                for w in range(n_words):
                    out_words[i, w] ^= y_words[t, w]
