"""Domination checks, counting lower bounds, and exact small-cube oracles."""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ParameterError
from .hypercube import VertexSet, check_dimension, dilate, is_connected

DEFAULT_BUDGET_NODES = 10**8
DEFAULT_BUDGET_SECS = 300.0
EXACT_GAMMA_MAX_N = 6
EXACT_GAMMA_C_MAX_N = 5


def is_dominating(vset: VertexSet) -> bool:
    return bool(np.all(dilate(vset.bits, vset.n)))


def is_connected_dominating(vset: VertexSet) -> bool:
    if vset.size() == 0:
        return False
    return is_dominating(vset) and is_connected(vset)


def undominated(vset: VertexSet) -> VertexSet:
    return VertexSet(vset.n, ~dilate(vset.bits, vset.n))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class DominationBounds:
    n: int
    gamma_lower: int
    gamma_c_lower: int | None  # undefined for n = 1


def lower_bounds(n: int) -> DominationBounds:
    """Counting bounds: a vertex dominates at most n + 1 vertices, and a
    connected set of size c dominates at most n*c - 2(c - 1)."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    gamma = _ceil_div(1 << n, n + 1)
    gamma_c = _ceil_div((1 << n) - 2, n - 1) if n >= 2 else None
    return DominationBounds(n, gamma, gamma_c)


def greedy_dominating(n: int) -> VertexSet:
    """Greedy set cover over closed neighbourhoods; ties go to the smaller vertex."""
    check_dimension(n)
    size = 1 << n
    flips = [1 << i for i in range(n)]
    covered = bytearray(size)
    gain = [n + 1] * size
    heap = [(-(n + 1), v) for v in range(size)]
    chosen = []
    remaining = size
    while remaining:
        neg, v = heapq.heappop(heap)
        if -neg != gain[v]:
            heapq.heappush(heap, (-gain[v], v))
            continue
        chosen.append(v)
        for u in [v, *(v ^ f for f in flips)]:
            if covered[u]:
                continue
            covered[u] = 1
            remaining -= 1
            gain[u] -= 1
            for f in flips:
                gain[u ^ f] -= 1
    return VertexSet.from_vertices(n, chosen)


class Status(str, Enum):
    PROVEN = "proven"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass
class ExactResult:
    n: int
    kind: str  # "gamma" or "gamma_c"
    value: int
    witness: VertexSet
    nodes_explored: int
    status: Status
    elapsed: float = 0.0
    lower: int = field(default=0)

    @property
    def proven(self) -> bool:
        return self.status is Status.PROVEN


class _BudgetExceeded(Exception):
    pass


class _Budget:
    def __init__(self, nodes: int, secs: float):
        self.max_nodes = nodes
        self.deadline = time.monotonic() + secs
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if self.nodes & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded


def _closed_masks(n: int) -> list[int]:
    return [(1 << v) | sum(1 << (v ^ (1 << i)) for i in range(n)) for v in range(1 << n)]


def _check_exact_n(n: int, limit: int) -> None:
    check_dimension(n)
    if n > limit:
        raise ParameterError(f"exact search is limited to n <= {limit}, got {n}")


def _dominating_of_size(n, limit, masks, budget, symmetry):
    """Depth-first search for a dominating set with at most ``limit`` members.

    Branches on the uncovered vertex with the fewest still-allowed dominators.
    Candidates tried in earlier sibling branches are excluded afterwards, so
    each set is explored once.
    """
    full = (1 << (1 << n)) - 1
    per_vertex = n + 1

    def search(covered, chosen, excluded):
        budget.tick()
        if covered == full:
            return list(chosen)
        left = limit - len(chosen)
        uncovered = full & ~covered
        if left == 0 or uncovered.bit_count() > left * per_vertex:
            return None
        best_cands = None
        rest = uncovered
        while rest:
            low = rest & -rest
            cands = masks[low.bit_length() - 1] & ~excluded
            if best_cands is None or cands.bit_count() < best_cands.bit_count():
                best_cands = cands
                if cands.bit_count() <= 1:
                    break
            rest ^= low
        if not best_cands:
            return None
        newly_excluded = 0
        c = best_cands
        while c:
            low = c & -c
            v = low.bit_length() - 1
            chosen.append(v)
            found = search(covered | masks[v], chosen, excluded | newly_excluded)
            chosen.pop()
            if found is not None:
                return found
            newly_excluded |= low
            c ^= low
        return None

    if symmetry:
        # Q_n is vertex-transitive, so some minimum set contains vertex 0
        return search(masks[0], [0], 0)
    return search(0, [], 0)


def exact_gamma(
    n: int,
    budget_nodes: int = DEFAULT_BUDGET_NODES,
    budget_secs: float = DEFAULT_BUDGET_SECS,
    symmetry: bool = False,
) -> ExactResult:
    """Domination number of Q_n by iterative deepening from the counting bound."""
    _check_exact_n(n, EXACT_GAMMA_MAX_N)
    start = time.monotonic()
    budget = _Budget(budget_nodes, budget_secs)
    masks = _closed_masks(n)
    incumbent = greedy_dominating(n)
    lower = lower_bounds(n).gamma_lower
    limit = lower
    try:
        while limit < incumbent.size():
            found = _dominating_of_size(n, limit, masks, budget, symmetry)
            if found is not None:
                incumbent = VertexSet.from_vertices(n, found)
                break
            limit += 1
            lower = limit
    except _BudgetExceeded:
        return ExactResult(n, "gamma", incumbent.size(), incumbent, budget.nodes,
                           Status.BUDGET_EXHAUSTED, time.monotonic() - start, lower)
    return ExactResult(n, "gamma", incumbent.size(), incumbent, budget.nodes,
                       Status.PROVEN, time.monotonic() - start, incumbent.size())


def _connected_dominating_of_size(n, limit, masks, budget, symmetry):
    """Enumerate connected vertex sets of size <= limit, each exactly once.

    Every set is grown from its smallest member ``root`` by extension-set
    enumeration: a new vertex may only enter the extension set if it is larger
    than the root and is not already adjacent to the current set.
    """
    size = 1 << n
    full = (1 << size) - 1
    open_masks = [m & ~(1 << v) for v, m in enumerate(masks)]
    gain_per_vertex = max(n - 1, 1)

    def extend(members, covered, member_mask, ext, root):
        budget.tick()
        if covered == full:
            return list(members)
        left = limit - len(members)
        if left == 0:
            return None
        # each added vertex is already adjacent to the set, so it can newly
        # dominate at most n - 1 vertices
        if (full & ~covered).bit_count() > left * gain_per_vertex:
            return None
        ext_rest = ext
        while ext_rest:
            low = ext_rest & -ext_rest
            w = low.bit_length() - 1
            ext_rest ^= low
            exclusive = open_masks[w] & ~covered & ~((1 << (root + 1)) - 1)
            members.append(w)
            found = extend(members, covered | masks[w], member_mask | low,
                           ext_rest | exclusive, root)
            members.pop()
            if found is not None:
                return found
        return None

    roots = [0] if symmetry else range(size)
    for root in roots:
        ext = open_masks[root] & ~((1 << (root + 1)) - 1)
        found = extend([root], masks[root], 1 << root, ext, root)
        if found is not None:
            return found
    return None


def exact_gamma_c(
    n: int,
    budget_nodes: int = DEFAULT_BUDGET_NODES,
    budget_secs: float = DEFAULT_BUDGET_SECS,
    symmetry: bool = False,
    incumbent: VertexSet | None = None,
) -> ExactResult:
    """Connected domination number of Q_n, searching connected sets only."""
    _check_exact_n(n, EXACT_GAMMA_C_MAX_N)
    start = time.monotonic()
    budget = _Budget(budget_nodes, budget_secs)
    masks = _closed_masks(n)
    if incumbent is None:
        if n >= 2:
            from .constructions import auto_construct

            incumbent = auto_construct(n, build=True).cds
        else:
            incumbent = VertexSet.full(n)
    elif not is_connected_dominating(incumbent):
        raise ParameterError("incumbent is not a connected dominating set")
    bounds = lower_bounds(n)
    lower = bounds.gamma_c_lower if bounds.gamma_c_lower is not None else 1
    limit = lower
    try:
        while limit < incumbent.size():
            found = _connected_dominating_of_size(n, limit, masks, budget, symmetry)
            if found is not None:
                incumbent = VertexSet.from_vertices(n, found)
                break
            limit += 1
            lower = limit
    except _BudgetExceeded:
        return ExactResult(n, "gamma_c", incumbent.size(), incumbent, budget.nodes,
                           Status.BUDGET_EXHAUSTED, time.monotonic() - start, lower)
    return ExactResult(n, "gamma_c", incumbent.size(), incumbent, budget.nodes,
                       Status.PROVEN, time.monotonic() - start, incumbent.size())
