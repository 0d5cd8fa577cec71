import numpy as np
import pytest

from zfsolve import (DenseMatrix, SparseMatrix, Vector, column, compute_core,
                     dense_from, dense_gaussian_solve, forcing, forcing_plan,
                     forcing_residual, grid_core, grid_matrix, kernel_basis,
                     pattern_graph, preprocess, random_instance, rank, solve,
                     spmv, terminal_residual)
from zfsolve.grid import GridSpec

from conftest import GF2, GF5, GF257, brute_force_solutions, p3_matrix


def p3_plan():
    return forcing_plan(pattern_graph(p3_matrix()), [0])


def random_handle(rng, n=None, k=None, spec=None, density=0.15):
    n = n or int(rng.integers(2, 30))
    k = k or int(rng.integers(1, min(n, 8) + 1))
    spec = spec or GF5
    seed = int(rng.integers(0, 2**31))
    a, z = random_instance(n, k, density, spec, seed)
    return preprocess(a, z)


# -- the forcing pass -----------------------------------------------------------

def test_forcing_examples():
    plan = p3_plan()
    a = p3_matrix()
    assert forcing(a, plan, Vector(GF2, [1, 0, 1])) == Vector(GF2, [0, 1, 0])
    assert forcing(a, plan, column(a, 0)) == Vector(GF2, [0, 0, 1])

    # Z = V: no forces, x = 0
    plan_all = forcing_plan(pattern_graph(a), [0, 1, 2])
    assert forcing(a, plan_all, Vector(GF2, [1, 1, 1])) == Vector(GF2, [0, 0, 0])


def test_forcing_parent_rows_hold(rng):
    for trial in range(30):
        spec = (GF2, GF5, GF257)[trial % 3]
        n = int(rng.integers(2, 25))
        a, z = random_instance(n, int(rng.integers(1, min(n, 4) + 1)),
                               0.15, spec, seed=trial)
        plan = forcing_plan(pattern_graph(a), z)
        b = Vector(spec, rng.integers(0, spec.modulus, size=a.n_rows))
        x = forcing(a, plan, b)
        assert all(x.values[list(plan.zfs)] == 0)
        ax = spmv(a, x)
        for u in plan.order:
            parent = plan.parent[u]
            assert ax[parent] == b[parent]


def test_forcing_plan_mismatch():
    plan = p3_plan()
    other = SparseMatrix.from_triplets(GF2, 3, 3, [(0, 2, 1), (2, 0, 1)])
    with pytest.raises(ValueError):
        forcing(other, plan, Vector(GF2, [0, 0, 0]))
    with pytest.raises(ValueError):
        forcing(p3_matrix(), plan, Vector(GF2, [0, 0]))


# -- residual operators -----------------------------------------------------------

def test_residual_examples():
    a, plan = p3_matrix(), p3_plan()
    assert forcing_residual(a, plan, Vector(GF2, [1, 0, 1])) == \
        Vector(GF2, [0, 0, 0])
    # columns off the ZFS vanish under the residual map
    assert forcing_residual(a, plan, column(a, 1)) == Vector(GF2, [0, 0, 0])
    assert forcing(a, plan, Vector.zeros(GF2, 3)) == Vector.zeros(GF2, 3)
    assert forcing_residual(a, plan, Vector.zeros(GF2, 3)) == Vector.zeros(GF2, 3)


def test_residual_of_off_zfs_columns_vanishes(rng):
    for trial in range(25):
        spec = (GF2, GF5)[trial % 2]
        n = int(rng.integers(2, 30))
        a, z = random_instance(n, int(rng.integers(1, min(n, 5) + 1)),
                               0.2, spec, seed=1000 + trial)
        plan = forcing_plan(pattern_graph(a), z)
        for v in range(a.n_rows):
            if v not in z:
                r = forcing_residual(a, plan, column(a, v))
                assert not r.values.any()


def test_operators_are_linear(rng):
    for trial in range(20):
        spec = (GF2, GF5, GF257)[trial % 3]
        p = spec.modulus
        n = int(rng.integers(2, 25))
        a, z = random_instance(n, int(rng.integers(1, min(n, 5) + 1)),
                               0.2, spec, seed=2000 + trial)
        plan = forcing_plan(pattern_graph(a), z)
        for _ in range(50):
            b1 = rng.integers(0, p, size=a.n_rows)
            b2 = rng.integers(0, p, size=a.n_rows)
            alpha = int(rng.integers(0, p))
            combo = Vector(spec, (alpha * b1 + b2) % p)
            for op in (forcing, forcing_residual):
                lhs = op(a, plan, combo).values
                rhs = (alpha * op(a, plan, Vector(spec, b1)).values
                       + op(a, plan, Vector(spec, b2)).values) % p
                assert np.array_equal(lhs, rhs)


def test_operator_supports(rng):
    for trial in range(20):
        spec = (GF2, GF5)[trial % 2]
        n = int(rng.integers(2, 30))
        a, z = random_instance(n, int(rng.integers(1, min(n, 5) + 1)),
                               0.2, spec, seed=3000 + trial)
        plan = forcing_plan(pattern_graph(a), z)
        off_zfs = sorted(set(range(a.n_rows)) - set(z))
        terminals = set(plan.terminals)
        for _ in range(20):
            b = Vector(spec, rng.integers(0, spec.modulus, size=a.n_rows))
            x = forcing(a, plan, b)
            assert set(np.nonzero(x.values)[0]) <= set(off_zfs)
            r = forcing_residual(a, plan, b)
            assert set(np.nonzero(r.values)[0]) <= terminals
            t = terminal_residual(a, plan, b)
            assert np.array_equal(t.values, r.values[plan.terminal_array])


# -- core construction --------------------------------------------------------------

def test_compute_core_examples():
    eye2 = SparseMatrix.from_triplets(GF2, 2, 2, [(0, 0, 1), (1, 1, 1)])
    plan = forcing_plan(pattern_graph(eye2), [0, 1])
    core = compute_core(eye2, plan)
    assert core.matrix == DenseMatrix.identity(GF2, 2)
    assert core.row_labels == (0, 1) and core.col_labels == (0, 1)

    core = compute_core(p3_matrix(), p3_plan())
    assert core.matrix.array.tolist() == [[0]]

    g3 = grid_matrix(GridSpec(3, 3))
    plan3 = forcing_plan(pattern_graph(g3), [0, 1, 2])
    assert compute_core(g3, plan3) == grid_core(3)


def test_core_columns_match_residual_map(rng):
    for trial in range(15):
        spec = (GF2, GF5)[trial % 2]
        n = int(rng.integers(2, 20))
        a, z = random_instance(n, int(rng.integers(1, min(n, 4) + 1)),
                               0.2, spec, seed=4000 + trial)
        plan = forcing_plan(pattern_graph(a), z)
        core = compute_core(a, plan)
        for pos, v in enumerate(z):
            expected = terminal_residual(a, plan, column(a, v))
            assert np.array_equal(core.matrix.array[:, pos], expected.values)


def test_preprocess_examples():
    eye2 = SparseMatrix.from_triplets(GF5, 2, 2, [(0, 0, 1), (1, 1, 1)])
    h = preprocess(eye2, [0, 1])
    assert h.k == 2 and h.factorization.rank == 2

    h = preprocess(p3_matrix(), [0])
    assert h.k == 1 and h.factorization.rank == 0

    h = preprocess(grid_matrix(GridSpec(3, 3)), [0, 1, 2])
    assert h.k == 3


def test_preprocess_rejects_non_zfs():
    from zfsolve import NotZeroForcingSetError
    eye2 = SparseMatrix.from_triplets(GF2, 2, 2, [(0, 0, 1), (1, 1, 1)])
    with pytest.raises(NotZeroForcingSetError):
        preprocess(eye2, [0])


def test_handle_storage_is_quadratic_in_k(rng):
    for trial in range(10):
        h = random_handle(rng)
        assert h.aux_field_elements() <= 4 * h.k * h.k


# -- the solver ------------------------------------------------------------------

def test_solve_examples():
    eye2 = SparseMatrix.from_triplets(GF5, 2, 2, [(0, 0, 1), (1, 1, 1)])
    h = preprocess(eye2, [0, 1])
    assert solve(h, Vector(GF5, [1, 4])) == Vector(GF5, [1, 4])

    h = preprocess(p3_matrix(), [0])
    a_dense = dense_from(p3_matrix()).array
    # brute force over GF(2)^3: (1,0,1) is solved by (0,1,0) and (1,1,1)
    sols = brute_force_solutions(a_dense, np.array([1, 0, 1]), 2)
    assert sorted(map(tuple, sols)) == [(0, 1, 0), (1, 1, 1)]
    assert solve(h, Vector(GF2, [1, 0, 1])) == Vector(GF2, [0, 1, 0])
    # brute force: (1,0,0) has no preimage
    assert brute_force_solutions(a_dense, np.array([1, 0, 0]), 2) == []
    assert solve(h, Vector(GF2, [1, 0, 0])) is None

    with pytest.raises(ValueError):
        solve(h, Vector(GF2, [1, 0]))


def test_solution_fixes_zfs_part_from_core(rng):
    for trial in range(20):
        h = random_handle(rng)
        p = h.matrix.spec.modulus
        x_true = rng.integers(0, p, size=h.n)
        b = spmv(h.matrix, Vector(h.matrix.spec, x_true))
        x = solve(h, b)
        assert x is not None
        assert spmv(h.matrix, x) == b


def test_solve_verdict_matches_oracle(rng):
    for trial in range(40):
        spec = (GF2, GF5, GF257)[trial % 3]
        p = spec.modulus
        n = int(rng.integers(2, 30))
        a, z = random_instance(n, int(rng.integers(1, min(n, 6) + 1)),
                               0.15, spec, seed=5000 + trial)
        h = preprocess(a, z)
        dense = dense_from(a)
        for _ in range(10):
            b = Vector(spec, rng.integers(0, p, size=a.n_rows))
            mine = solve(h, b)
            oracle = dense_gaussian_solve(dense, b)
            assert (mine is None) == (oracle is None)
            if mine is not None:
                assert spmv(a, mine) == b


def test_off_zfs_columns_are_independent(rng):
    for trial in range(15):
        spec = (GF2, GF5)[trial % 2]
        n = int(rng.integers(2, 40))
        a, z = random_instance(n, int(rng.integers(1, min(n, 6) + 1)), 0.15,
                               spec, seed=6000 + trial)
        dense = dense_from(a).array
        off = sorted(set(range(n)) - set(z))
        if off:
            sub = DenseMatrix(spec, dense[:, off])
            assert rank(sub) == len(off)


def test_solution_unique_given_zfs_coordinates(rng):
    # enumerate whole kernels of small GF(2) instances: two solutions that
    # agree on Z must be identical
    from itertools import combinations, product
    for trial in range(15):
        n = int(rng.integers(2, 10))
        a, z = random_instance(n, int(rng.integers(1, min(n, 3) + 1)), 0.25,
                               GF2, seed=7000 + trial)
        dense = dense_from(a)
        basis = kernel_basis(dense)
        x0 = rng.integers(0, 2, size=n)
        b = (dense.array @ x0) % 2
        kernel = []
        for coeffs in product([0, 1], repeat=len(basis)):
            v = np.zeros(n, dtype=np.int64)
            for c, k in zip(coeffs, basis):
                v = (v + c * k) % 2
            kernel.append(v)
        solutions = [(x0 + v) % 2 for v in kernel]
        z_list = list(z)
        for s1, s2 in combinations(solutions, 2):
            if np.array_equal(s1[z_list], s2[z_list]):
                assert np.array_equal(s1, s2)
