"""Shared test fixtures and the tiny brute-force oracles.

The enumeration solver below is the ground truth for everything: it tries
every candidate vector, so it cannot be wrong, only slow.  Expected values
in the test modules marked as brute-forced were produced by it.
"""

from itertools import product

import numpy as np
import pytest

from zfsolve import FieldSpec, SparseMatrix

GF2 = FieldSpec.gf2()
GF5 = FieldSpec.prime(5)
GF257 = FieldSpec.prime(257)


def brute_force_solutions(dense: np.ndarray, b: np.ndarray, p: int) -> list[np.ndarray]:
    """All x with dense·x = b (mod p), by exhaustive enumeration."""
    n = dense.shape[1]
    assert p ** n <= 1 << 20, "instance too large to enumerate"
    out = []
    for cand in product(range(p), repeat=n):
        x = np.array(cand, dtype=np.int64)
        if not np.any((dense @ x - b) % p):
            out.append(x)
    return out


def p3_matrix(spec: FieldSpec = GF2) -> SparseMatrix:
    """Closed-form path matrix [[0,1,0],[1,0,1],[0,1,0]]."""
    one = 1
    return SparseMatrix.from_triplets(
        spec, 3, 3, [(0, 1, one), (1, 0, one), (1, 2, one), (2, 1, one)])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
