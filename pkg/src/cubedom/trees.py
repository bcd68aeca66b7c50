"""Spanning trees of Q_n: materialising them from connected dominating sets,
verifying them, and exhaustive maximum-leaf search for tiny cubes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .domination import is_connected_dominating
from .errors import ParameterError, PreconditionError
from .hypercube import SpanningTree, VertexSet, check_dimension
from .unionfind import UnionFind

MAX_BRUTEFORCE_N = 3


def smallest_adjacent_member(vset: VertexSet) -> np.ndarray:
    """For every vertex, its smallest neighbour in ``vset`` (2^n if none)."""
    n = vset.n
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    best = np.full(size, size, dtype=np.int64)
    for i in range(n):
        nb = idx ^ (1 << i)
        best = np.minimum(best, np.where(vset.bits[nb], nb, size))
    return best


def _bfs_tree_edges(vset: VertexSet) -> np.ndarray:
    """Breadth-first tree of the subgraph induced by ``vset`` from its minimum.

    Processed level by level; within a level the discovery order matches a
    FIFO queue scanning neighbours by increasing flipped bit.
    """
    n = vset.n
    flips = np.int64(1) << np.arange(n, dtype=np.int64)
    seen = np.zeros(1 << n, dtype=bool)
    frontier = np.array([vset.min()], dtype=np.int64)
    seen[frontier] = True
    parts = []
    while frontier.size:
        cand = (frontier[:, None] ^ flips).ravel()
        parent = np.repeat(frontier, n)
        keep = vset.bits[cand] & ~seen[cand]
        cand, parent = cand[keep], parent[keep]
        _, first = np.unique(cand, return_index=True)
        first.sort()
        frontier = cand[first]
        seen[frontier] = True
        parts.append(np.stack([parent[first], frontier], axis=1))
    if not parts:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(parts)


def tree_from_cds(cds: VertexSet) -> SpanningTree:
    """Spanning tree whose internal vertices lie inside ``cds``.

    The members are spanned by a breadth-first tree; every other vertex hangs
    off its smallest neighbour in ``cds``.
    """
    if not is_connected_dominating(cds):
        raise PreconditionError("tree_from_cds needs a connected dominating set")
    inner = _bfs_tree_edges(cds)
    outside = np.flatnonzero(~cds.bits).astype(np.int64)
    attach = smallest_adjacent_member(cds)[outside]
    edges = np.concatenate([inner, np.stack([outside, attach], axis=1)])
    return SpanningTree(cds.n, edges)


@dataclass
class TreeReport:
    n: int
    edge_count: int
    leaf_count: int
    internal_count: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_tree(tree: SpanningTree, max_listed: int = 20) -> TreeReport:
    """Independent re-check of a spanning tree. Never raises on bad trees."""
    n = tree.n
    size = 1 << n
    edges = [(int(u), int(v)) for u, v in tree.edges]
    violations: list[str] = []

    def note(msg: str) -> None:
        if len(violations) < max_listed:
            violations.append(msg)
        elif len(violations) == max_listed:
            violations.append("further violations suppressed")

    if len(edges) != size - 1:
        note(f"edge count {len(edges)} != 2^{n} - 1 = {size - 1}")
    uf = UnionFind(size)
    degree: Counter[int] = Counter()
    for idx, (u, v) in enumerate(edges):
        if not (0 <= u < size and 0 <= v < size):
            note(f"edge {idx} ({u}, {v}) has an endpoint outside Q_{n}")
            continue
        if (u ^ v).bit_count() != 1:
            note(f"edge {idx} ({u}, {v}) is not a cube edge")
        degree[u] += 1
        degree[v] += 1
        if not uf.union(u, v):
            note(f"edge {idx} ({u}, {v}) closes a cycle")
    if uf.components != 1:
        note(f"tree has {uf.components} components")
    leaves = sum(1 for d in degree.values() if d == 1)
    internal = sum(1 for d in degree.values() if d >= 2)
    if leaves != tree.leaf_count:
        note(f"stored leaf_count {tree.leaf_count} != recomputed {leaves}")
    if leaves + internal != size:
        note(f"leaves {leaves} + internal {internal} != 2^{n}")
    return TreeReport(n, len(edges), leaves, internal, violations)


def max_leaf_bruteforce(n: int) -> int:
    """L(Q_n) by enumerating every (2^n - 1)-edge subset. Only for n <= 3."""
    check_dimension(n)
    if n > MAX_BRUTEFORCE_N:
        raise ParameterError(f"brute-force max-leaf search refuses n={n} > {MAX_BRUTEFORCE_N}")
    size = 1 << n
    all_edges = [(u, u | (1 << i)) for u in range(size) for i in range(n) if not u >> i & 1]
    best = 0
    for subset in combinations(all_edges, size - 1):
        uf = UnionFind(size)
        if not all(uf.union(u, v) for u, v in subset):
            continue
        degree = [0] * size
        for u, v in subset:
            degree[u] += 1
            degree[v] += 1
        best = max(best, degree.count(1))
    return best
