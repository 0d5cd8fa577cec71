import itertools

import pytest

from zfsolve import (FieldSpec, NotZeroForcingSetError, SparseMatrix, closure,
                     forcing_plan, greedy_find_zfs, grid_matrix, is_zfs,
                     pattern_graph, random_instance)
from zfsolve.grid import GridSpec

from conftest import GF2, GF5, p3_matrix


def randomized_closure(g, seeds, rng) -> frozenset:
    """Order-agnostic reference closure: applies forces in random order."""
    colored = set(seeds)
    while True:
        forceable = []
        for v in sorted(colored):
            nb = [u for u in g.out_neighbors(v) if u not in colored]
            if len(nb) == 1:
                forceable.append(nb[0])
        if not forceable:
            return frozenset(colored)
        colored.add(forceable[int(rng.integers(0, len(forceable)))])


def random_pattern(n, rng, density=0.25):
    trips = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < density:
                trips.append((u, v, 1))
    return pattern_graph(SparseMatrix.from_triplets(GF2, n, n, trips))


def test_pattern_graph_examples():
    eye2 = SparseMatrix.from_triplets(GF2, 2, 2, [(0, 0, 1), (1, 1, 1)])
    assert pattern_graph(eye2).edges() == []
    p3 = pattern_graph(p3_matrix())
    assert p3.edges() == [(0, 1), (1, 0), (1, 2), (2, 1)]
    four_cycle = pattern_graph(grid_matrix(GridSpec(2, 2)))
    assert all(len(four_cycle.out_neighbors(v)) == 2 for v in range(4))
    with pytest.raises(ValueError):
        pattern_graph(SparseMatrix.from_triplets(GF2, 2, 3, []))


def test_closure_examples():
    p3 = pattern_graph(p3_matrix())
    colored, order, parent = closure(p3, [0])
    assert colored == frozenset({0, 1, 2})
    assert order == (1, 2)
    assert parent == {1: 0, 2: 1}

    # two isolated vertices: nothing can be forced from {0}
    eye2 = pattern_graph(SparseMatrix.from_triplets(GF2, 2, 2, [(0, 0, 1)]))
    assert closure(eye2, [0]).colored == frozenset({0})

    colored, order, _ = closure(p3, [2, 0, 1])
    assert colored == frozenset({0, 1, 2}) and order == ()

    with pytest.raises(IndexError):
        closure(p3, [3])
    with pytest.raises(ValueError):
        closure(p3, [0, 0])


def test_is_zfs_examples():
    for n in (2, 3, 5):
        g = pattern_graph(grid_matrix(GridSpec(n, n)))
        assert is_zfs(g, range(n))
    eye2 = pattern_graph(SparseMatrix.from_triplets(GF2, 2, 2, []))
    assert not is_zfs(eye2, [0])
    assert is_zfs(eye2, [0, 1])


def test_forcing_plan_examples():
    p3 = pattern_graph(p3_matrix())
    plan = forcing_plan(p3, [0])
    assert plan.order == (1, 2)
    assert plan.terminals == (2,)
    assert plan.chains == ((0, 1, 2),)

    g3 = pattern_graph(grid_matrix(GridSpec(3, 3)))
    plan = forcing_plan(g3, [0, 1, 2])
    assert plan.order == (3, 4, 5, 6, 7, 8)
    assert plan.parent == {3: 0, 4: 1, 5: 2, 6: 3, 7: 4, 8: 5}
    assert plan.terminals == (6, 7, 8)

    plan = forcing_plan(p3, [2, 0, 1])
    assert plan.order == ()
    assert plan.terminals == (0, 1, 2)
    assert plan.zfs == (2, 0, 1)

    with pytest.raises(NotZeroForcingSetError):
        forcing_plan(pattern_graph(SparseMatrix.from_triplets(GF2, 2, 2, [])), [0])


def test_plan_invariants_on_random_instances(rng):
    for trial in range(50):
        n = int(rng.integers(2, 25))
        k = int(rng.integers(1, n + 1))
        a, z = random_instance(n, k, 0.15, GF5, seed=trial)
        plan = forcing_plan(pattern_graph(a), z)
        assert len(plan.terminals) == len(plan.zfs) == k
        seen = set()
        for chain, z0 in zip(plan.chains, plan.zfs):
            assert chain[0] == z0
            assert not (set(chain) & seen)
            seen |= set(chain)
        assert seen == set(range(n))
        # parents appear before their children in (Z, then order)
        pos = {v: i for i, v in enumerate(plan.zfs + plan.order)}
        for u in plan.order:
            assert pos[plan.parent[u]] < pos[u]


def test_closure_monotone_exhaustive(rng):
    for trial in range(10):
        n = 5
        g = random_pattern(n, rng)
        sets = list(itertools.chain.from_iterable(
            itertools.combinations(range(n), r) for r in range(n + 1)))
        col = {s: closure(g, s).colored for s in sets}
        for s in sets:
            for s2 in sets:
                if set(s) <= set(s2):
                    assert col[s] <= col[s2]


def test_closure_monotone_random(rng):
    for trial in range(100):
        n = int(rng.integers(2, 13))
        g = random_pattern(n, rng)
        small = [v for v in range(n) if rng.random() < 0.4]
        extra = [v for v in range(n) if v not in small and rng.random() < 0.3]
        assert closure(g, small).colored <= closure(g, small + extra).colored


def test_final_coloring_is_order_independent(rng):
    for trial in range(1000):
        n = int(rng.integers(2, 12))
        g = random_pattern(n, rng, density=0.3)
        seeds = [v for v in range(n) if rng.random() < 0.4]
        assert closure(g, seeds).colored == randomized_closure(g, seeds, rng)


def test_greedy_find_zfs():
    edgeless = pattern_graph(SparseMatrix.from_triplets(GF2, 4, 4, []))
    assert greedy_find_zfs(edgeless) == (0, 1, 2, 3)
    path = pattern_graph(p3_matrix())
    z = greedy_find_zfs(path)
    assert len(z) == 1 and is_zfs(path, z)
    g3 = pattern_graph(grid_matrix(GridSpec(3, 3)))
    z = greedy_find_zfs(g3)
    assert len(z) <= 3 and is_zfs(g3, z)


def test_greedy_find_zfs_random(rng):
    for trial in range(20):
        n = int(rng.integers(2, 15))
        g = random_pattern(n, rng)
        assert is_zfs(g, greedy_find_zfs(g))


def test_random_instance_examples():
    a, z = random_instance(5, 5, 0.2, GF5, seed=1)
    assert z == tuple(int(v) for v in z) and len(z) == 5
    assert is_zfs(pattern_graph(a), z)

    a, z = random_instance(5, 1, 0.0, GF2, seed=2)
    assert len(z) == 1
    g = pattern_graph(a)
    assert is_zfs(g, z)
    # density 0 leaves exactly the single covering chain
    assert len(g.edges()) == 4

    a, z = random_instance(40, 6, 0.1, FieldSpec.prime(257), seed=7)
    assert len(z) == 6
    assert is_zfs(pattern_graph(a), z)


def test_random_instance_deterministic():
    a1, z1 = random_instance(30, 4, 0.1, GF5, seed=99)
    a2, z2 = random_instance(30, 4, 0.1, GF5, seed=99)
    assert z1 == z2 and a1 == a2
    a3, _ = random_instance(30, 4, 0.1, GF5, seed=100)
    assert a3 != a1


def test_random_instance_bad_k():
    with pytest.raises(ValueError):
        random_instance(5, 0, 0.1, GF5, seed=0)
    with pytest.raises(ValueError):
        random_instance(5, 6, 0.1, GF5, seed=0)
