"""Zero forcing on the nonzero pattern of a square matrix.

The color-change rule: a blue vertex with exactly one non-blue out-neighbor
forces that neighbor blue.  A set whose closure colors every vertex is a
zero forcing set (ZFS).  The closure here is chronological and fully
deterministic: among all forceable (target, parent) pairs it always applies
the smallest target, breaking ties by smallest parent.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .fields import FieldSpec
from .linalg import SparseMatrix


class NotZeroForcingSetError(ValueError):
    """Raised when a forcing plan is requested for a set that is not a ZFS."""


class PatternGraph:
    """Directed graph on 0..n-1 with edge (u, v) iff A[u, v] != 0 and u != v."""

    def __init__(self, n: int, out_indptr: np.ndarray, out_indices: np.ndarray):
        self.n = n
        self.out_indptr = np.asarray(out_indptr, dtype=np.int64)
        self.out_indices = np.asarray(out_indices, dtype=np.int64)

    def out_neighbors(self, v: int) -> list[int]:
        s, e = self.out_indptr[v], self.out_indptr[v + 1]
        return self.out_indices[s:e].tolist()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out_neighbors(u)]

    @cached_property
    def _in_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u in range(self.n):
            for v in self.out_neighbors(u):
                adj[v].append(u)
        return adj

    def __eq__(self, other) -> bool:
        return (isinstance(other, PatternGraph) and self.n == other.n
                and np.array_equal(self.out_indptr, other.out_indptr)
                and np.array_equal(self.out_indices, other.out_indices))


def pattern_graph(a: SparseMatrix) -> PatternGraph:
    """Off-diagonal nonzero pattern of a square matrix; the diagonal is ignored."""
    if a.n_rows != a.n_cols:
        raise ValueError("pattern graph requires a square matrix")
    indptr = np.zeros(a.n_rows + 1, dtype=np.int64)
    cols = []
    for i in range(a.n_rows):
        s, e = a.indptr[i], a.indptr[i + 1]
        row = a.indices[s:e]
        row = row[row != i]
        cols.append(row)
        indptr[i + 1] = indptr[i] + row.size
    indices = np.concatenate(cols) if cols else np.empty(0, np.int64)
    return PatternGraph(a.n_rows, indptr, indices)


class ClosureResult(NamedTuple):
    colored: frozenset[int]
    order: tuple[int, ...]
    parent: dict[int, int]


def _check_vertices(g: PatternGraph, s: Iterable[int]) -> list[int]:
    out = []
    seen = set()
    for v in s:
        v = int(v)
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range")
        if v in seen:
            raise ValueError(f"duplicate vertex {v}")
        seen.add(v)
        out.append(v)
    return out


def closure(g: PatternGraph, seeds: Iterable[int]) -> ClosureResult:
    """Run the forcing process from `seeds` to its fixed point.

    Returns the final colored set, the chronological order in which vertices
    were forced, and the forcing parent of each forced vertex.
    """
    seeds = _check_vertices(g, seeds)
    n = g.n
    colored = bytearray(n)
    for z in seeds:
        colored[z] = 1
    indptr = g.out_indptr.tolist()
    out_idx = g.out_indices.tolist()
    counts = [0] * n
    for v in range(n):
        c = 0
        for j in range(indptr[v], indptr[v + 1]):
            if not colored[out_idx[j]]:
                c += 1
        counts[v] = c

    heap: list[tuple[int, int]] = []

    def push_candidate(v: int) -> None:
        # v is colored and has exactly one non-colored out-neighbor
        for j in range(indptr[v], indptr[v + 1]):
            u = out_idx[j]
            if not colored[u]:
                heapq.heappush(heap, (u, v))
                return

    for z in seeds:
        if counts[z] == 1:
            push_candidate(z)

    order: list[int] = []
    parent: dict[int, int] = {}
    in_adj = g._in_adjacency
    while heap:
        u, v = heapq.heappop(heap)
        if colored[u]:
            continue
        colored[u] = 1
        order.append(u)
        parent[u] = v
        for w in in_adj[u]:
            counts[w] -= 1
            if counts[w] == 1 and colored[w]:
                push_candidate(w)
        if counts[u] == 1:
            push_candidate(u)

    colored_set = frozenset(v for v in range(n) if colored[v])
    return ClosureResult(colored_set, tuple(order), parent)


def is_zfs(g: PatternGraph, z: Iterable[int]) -> bool:
    return len(closure(g, z).colored) == g.n


@dataclass(frozen=True)
class ForcingPlan:
    """A zero forcing certificate, fixed by the chronological closure.

    zfs keeps its input order; `order` lists the forced vertices V \\ Z in
    forcing order; terminals (vertices that never force) are ascending; the
    chains are the node-disjoint parent->child paths, one per ZFS vertex.
    """

    n: int
    zfs: tuple[int, ...]
    order: tuple[int, ...]
    parent: dict[int, int] = field(repr=False)
    terminals: tuple[int, ...]
    chains: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.zfs)

    @cached_property
    def order_array(self) -> np.ndarray:
        return np.array(self.order, dtype=np.int64)

    @cached_property
    def parent_array(self) -> np.ndarray:
        return np.array([self.parent[u] for u in self.order], dtype=np.int64)

    @cached_property
    def zfs_array(self) -> np.ndarray:
        return np.array(self.zfs, dtype=np.int64)

    @cached_property
    def terminal_array(self) -> np.ndarray:
        return np.array(self.terminals, dtype=np.int64)


def forcing_plan(g: PatternGraph, z: Iterable[int]) -> ForcingPlan:
    """Chronological plan for a zero forcing set; raises if z is not one."""
    zfs = tuple(_check_vertices(g, z))
    colored, order, parent = closure(g, zfs)
    if len(colored) != g.n:
        raise NotZeroForcingSetError(
            f"closure colors {len(colored)} of {g.n} vertices")
    child: dict[int, int] = {}
    for u, v in parent.items():
        assert v not in child, "a vertex forced twice"
        child[v] = u
    chains = []
    for z0 in zfs:
        chain = [z0]
        while chain[-1] in child:
            chain.append(child[chain[-1]])
        chains.append(tuple(chain))
    terminals = tuple(sorted(c[-1] for c in chains))
    return ForcingPlan(g.n, zfs, order, parent, terminals, tuple(chains))


def greedy_find_zfs(g: PatternGraph) -> tuple[int, ...]:
    """Heuristic: grow Z by the vertex whose addition colors the most.

    No minimality guarantee; the result always satisfies is_zfs, and is at
    worst all of V.
    """
    z: list[int] = []
    colored: frozenset[int] = frozenset()
    while len(colored) < g.n:
        best_u, best_gain = -1, -1
        for u in range(g.n):
            if u in colored:
                continue
            gain = len(closure(g, z + [u]).colored)
            if gain > best_gain:
                best_u, best_gain = u, gain
        z.append(best_u)
        colored = closure(g, z).colored
    return tuple(z)


def random_instance(n: int, k: int, density: float, spec: FieldSpec,
                    seed: int) -> tuple[SparseMatrix, tuple[int, ...]]:
    """Random matrix whose pattern admits a ZFS of size k, plus that set.

    Construction: cover the vertices with k node-disjoint chains (heads = Z),
    which force along themselves; then add extra random edges, keeping only
    those that leave every force of the chain plan intact (the target must be
    blue before the edge's source performs its force).  Values are random
    nonzero on edges, random (possibly zero) on the diagonal.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    p = spec.modulus
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    if k > 1:
        cuts = np.sort(rng.choice(n - 1, size=k - 1, replace=False)) + 1
    else:
        cuts = np.array([], dtype=np.int64)
    bounds = [0, *cuts.tolist(), n]
    chains = [perm[bounds[i]:bounds[i + 1]].tolist() for i in range(k)]
    zset = tuple(int(c[0]) for c in chains)

    def rand_nonzero() -> int:
        return 1 if p == 2 else int(rng.integers(1, p))

    edges: dict[tuple[int, int], int] = {}
    child: dict[int, int] = {}
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            edges[(a, b)] = rand_nonzero()
            child[a] = b

    # force_time of the chain-only plan: 0 for Z, else 1 + forcing position
    base = SparseMatrix.from_triplets(
        spec, n, n, [(u, v, w) for (u, v), w in edges.items()])
    plan_order = closure(pattern_graph(base), zset).order
    time = {v: 0 for v in zset}
    for t, u in enumerate(plan_order):
        time[u] = t + 1

    n_extra = int(round(density * n * (n - 1)))
    if n_extra > 0:
        picks = rng.choice(n * (n - 1), size=min(n_extra, n * (n - 1)),
                           replace=False)
        for code in picks.tolist():
            u, t = divmod(code, n - 1)
            v = t if t < u else t + 1
            if (u, v) in edges:
                continue
            # safe iff u never forces, or v is already blue when it does
            if u not in child or time[v] < time[child[u]]:
                edges[(u, v)] = rand_nonzero()

    triplets = [(u, v, w) for (u, v), w in edges.items()]
    for v in range(n):
        d = int(rng.integers(0, p))
        if d != 0:
            triplets.append((v, v, d))
    a = SparseMatrix.from_triplets(spec, n, n, triplets)
    assert is_zfs(pattern_graph(a), zset)
    return a, zset
