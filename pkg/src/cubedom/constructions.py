"""Upper-bound constructions for connected domination in Q_n.

Three machines, each producing an explicit set when n fits under n_max:

* star connection: hang every vertex off a dominating set, then join the stars
  with ``c - 1`` extra cube edges (backbone at most ``3c - 2``);
* doubling: two copies of a (connected) dominating set of Q_n dominate Q_{n+1};
* expansion: replicate a dominating set of Q_N across the ``2^j`` layers of
  Q_{N+j}, link each center's copies by a Gray-code path, and join the stars
  inside layer 0 only (backbone at most ``2^j c + 2(c - 1)``).

Layers are indexed by the top j bits, so the copy of base vertex v in layer L
is ``v | (L << N)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .domination import is_connected_dominating, is_dominating, lower_bounds
from .errors import ExplicitSetTooLarge, ParameterError, PreconditionError
from .hamming import build_hamming, codewords
from .hypercube import (
    SpanningTree,
    VertexSet,
    check_dimension,
    get_nmax,
    gray_code_order,
    is_connected,
)
from .trees import smallest_adjacent_member, tree_from_cds
from .unionfind import UnionFind


# -- formulas ---------------------------------------------------------------


def hamming_k(n: int) -> int | None:
    """k with n = 2^k - 1, or None."""
    k = (n + 1).bit_length() - 1
    return k if n >= 1 and (1 << k) - 1 == n else None


def hamming_floor(n: int) -> int:
    """Largest k with 2^k - 1 <= n."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return (n + 1).bit_length() - 1


def hamming_size(k: int) -> int:
    return 1 << ((1 << k) - 1 - k)


def doubled_hamming_size(n: int) -> int:
    """Size of the Hamming code of the largest Hamming dimension <= n, doubled
    up to dimension n."""
    k = hamming_floor(n)
    return hamming_size(k) << (n - ((1 << k) - 1))


def star_bound(c: int) -> int:
    return 3 * c - 2


def expansion_bound(base_size: int, j: int) -> int:
    return (base_size << j) + 2 * (base_size - 1)


def doubling_bound(k: int, j: int) -> int:
    return star_bound(hamming_size(k)) << j


def ratio_product_bound(k: int, j: int) -> Fraction:
    """Upper bound on cds/(2^n/n) for Hamming-based expansion, n = 2^k - 1 + j."""
    return (1 + Fraction(1, 1 << (j - 1))) * (1 + Fraction(j - 1, 1 << k))


def ratio_to_n(size: int, n: int) -> Fraction:
    """size / (2^n / n)."""
    return Fraction(size * n, 1 << n)


# -- star forests -----------------------------------------------------------


@dataclass(frozen=True)
class StarForest:
    """Every vertex of Q_n assigned to itself (centers) or an adjacent center."""

    n: int
    centers: VertexSet
    assignment: np.ndarray = field(repr=False)

    @property
    def component_count(self) -> int:
        return self.centers.size()

    def star_edges(self) -> np.ndarray:
        leaves = np.flatnonzero(~self.centers.bits).astype(np.int64)
        return np.stack([leaves, self.assignment[leaves]], axis=1)


def star_forest(ds: VertexSet) -> StarForest:
    """Attach each non-center to its numerically smallest adjacent center."""
    if not is_dominating(ds):
        raise PreconditionError("star_forest needs a dominating set")
    assignment = smallest_adjacent_member(ds)
    assignment[ds.bits] = ds.vertices()
    assignment.flags.writeable = False
    return StarForest(ds.n, ds, assignment)


def _connect(forest: StarForest) -> tuple[VertexSet, np.ndarray]:
    """Join the stars of ``forest`` into one tree with ``c - 1`` cube edges.

    Greedy by cost, the number of endpoints not yet in the backbone: an edge
    whose endpoints are both backbone vertices is always taken before one that
    promotes a leaf, which is taken before one that promotes two. Ties go to
    the lexicographically smallest (u, v). Costs only fall as the backbone
    grows, so stale heap entries are skipped on pop.
    """
    n = forest.n
    size = 1 << n
    assign = forest.assignment
    in_backbone = forest.centers.bits.copy()
    uf = UnionFind(size)
    components = forest.component_count

    us, vs = [], []
    idx = np.arange(size, dtype=np.int64)
    for i in range(n):
        low = idx[(idx >> i) & 1 == 0]
        us.append(low)
        vs.append(low | (1 << i))
    u_all, v_all = np.concatenate(us), np.concatenate(vs)
    crossing = assign[u_all] != assign[v_all]
    u_all, v_all = u_all[crossing], v_all[crossing]
    cost = 2 - in_backbone[u_all].astype(np.int64) - in_backbone[v_all]
    heap = list(zip(cost.tolist(), u_all.tolist(), v_all.tolist()))
    heapq.heapify(heap)

    bb = in_backbone.tolist()
    comp = assign.tolist()
    flips = [1 << i for i in range(n)]
    added = []

    def promote(x: int) -> None:
        bb[x] = True
        rx = uf.find(comp[x])
        for f in flips:
            y = x ^ f
            if uf.find(comp[y]) != rx:
                heapq.heappush(heap, (2 - bb[x] - bb[y], min(x, y), max(x, y)))

    while components > 1:
        c, u, v = heapq.heappop(heap)
        if uf.find(comp[u]) == uf.find(comp[v]):
            continue
        if c != 2 - bb[u] - bb[v]:
            continue
        uf.union(comp[u], comp[v])
        components -= 1
        added.append((u, v))
        for x in (u, v):
            if not bb[x]:
                promote(x)

    backbone = VertexSet(n, np.array(bb, dtype=bool))
    return backbone, np.array(added, dtype=np.int64).reshape(-1, 2)


def connect_stars(forest: StarForest) -> VertexSet:
    """Backbone of the star forest joined into a spanning tree: the centers
    plus every star leaf used by a connecting edge."""
    return _connect(forest)[0]


def connected_star_tree(forest: StarForest) -> SpanningTree:
    _, added = _connect(forest)
    return SpanningTree(forest.n, np.concatenate([forest.star_edges(), added]))


# -- doubling ---------------------------------------------------------------


def double_set(vset: VertexSet, connected: bool = False) -> VertexSet:
    """Both copies of ``vset`` inside Q_{n+1}; the new coordinate is the top bit."""
    check_dimension(vset.n + 1)
    if not is_dominating(vset):
        raise PreconditionError("double_set needs a dominating set")
    if connected and not is_connected(vset):
        raise PreconditionError("connected doubling needs a connected input")
    return VertexSet(vset.n + 1, np.concatenate([vset.bits, vset.bits]))


def doubled_hamming(n: int) -> VertexSet:
    """Dominating set of Q_n: the largest Hamming code that fits, doubled up."""
    check_dimension(n)
    k = hamming_floor(n)
    vset = codewords(build_hamming(k))
    while vset.n < n:
        vset = double_set(vset)
    return vset


# -- expansion --------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionParams:
    N: int
    j: int
    k: int | None = None  # set when the base is a Hamming code

    @property
    def n(self) -> int:
        return self.N + self.j


def _expansion(ds: VertexSet, j: int) -> tuple[VertexSet, np.ndarray]:
    if j < 1:
        raise ParameterError(f"expansion needs j >= 1, got {j}")
    N = ds.n
    n = N + j
    check_dimension(n)
    forest = star_forest(ds)
    layer0, added = _connect(forest)
    layers = 1 << j
    bits = np.tile(ds.bits, layers)
    bits[: 1 << N] |= layer0.bits
    backbone = VertexSet(n, bits)

    offsets = np.arange(layers, dtype=np.int64) << N
    star = forest.star_edges()
    star_all = (star[None, :, :] + offsets[:, None, None]).reshape(-1, 2)
    path = gray_code_order(j) << N
    centers = ds.vertices()
    rungs = np.stack(
        [
            (centers[:, None] + path[None, :-1]).ravel(),
            (centers[:, None] + path[None, 1:]).ravel(),
        ],
        axis=1,
    )
    edges = np.concatenate([star_all, rungs, added])
    return backbone, edges


def expand(ds: VertexSet, j: int) -> VertexSet:
    """Connected dominating set of Q_{N+j} from a dominating set of Q_N."""
    return _expansion(ds, j)[0]


def expansion_tree(ds: VertexSet, j: int) -> SpanningTree:
    """The spanning tree the expansion builds: stars in every layer, a Gray
    path through each center's copies, and the connecting edges of layer 0."""
    _, edges = _expansion(ds, j)
    return SpanningTree(ds.n + j, edges)


# -- reports ----------------------------------------------------------------


@dataclass
class ConstructionReport:
    n: int
    method: str
    N: int
    j: int
    k: int | None
    ds_size: int  # |C|, the base dominating set in Q_N
    bound_value: int
    gamma_lower: int
    gamma_c_lower: int | None
    base: str = "hamming"
    cds_size: int | None = None
    leaf_count: int | None = None
    product_bound: Fraction | None = None
    cds: VertexSet | None = field(default=None, repr=False)
    tree: SpanningTree | None = field(default=None, repr=False)

    @property
    def built(self) -> bool:
        return self.cds is not None

    @property
    def size(self) -> int:
        """Built backbone size, or the formula bound when not built."""
        return self.cds_size if self.cds_size is not None else self.bound_value

    @property
    def ratio(self) -> Fraction:
        return ratio_to_n(self.size, self.n)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "base": self.base,
            "N": self.N,
            "j": self.j,
            "k": self.k,
            "ds_size": self.ds_size,
            "cds_size": self.cds_size,
            "leaf_count": self.leaf_count,
            "bound_value": self.bound_value,
            "gamma_lower": self.gamma_lower,
            "gamma_c_lower": self.gamma_c_lower,
            "ratio": float(self.ratio),
            "product_bound": None if self.product_bound is None else float(self.product_bound),
        }


@dataclass(frozen=True)
class Candidate:
    method: str
    N: int
    j: int
    k: int | None
    base: str
    base_size: int
    bound: int


_METHOD_RANK = {"hamming": 0, "expansion": 1, "doubling": 2}


def candidates(n: int) -> list[Candidate]:
    """Every decomposition n = N + j this package can build, with its bound."""
    if n < 2:
        raise ParameterError(f"constructions need n >= 2, got {n}")
    out = []
    k = hamming_k(n)
    if k is not None:
        out.append(Candidate("hamming", n, 0, k, "hamming", hamming_size(k), star_bound(hamming_size(k))))
    for N in range(1, n):
        j = n - N
        kb = hamming_k(N)
        base = "hamming" if kb is not None else "doubled-hamming"
        b = doubled_hamming_size(N)
        out.append(Candidate("expansion", N, j, kb, base, b, expansion_bound(b, j)))
    kd = hamming_floor(n)
    Nd = (1 << kd) - 1
    if Nd < n:
        out.append(Candidate("doubling", Nd, n - Nd, kd, "hamming", hamming_size(kd), doubling_bound(kd, n - Nd)))
    return out


def _report(n, method, N, j, k, base, base_size, bound, cds=None) -> ConstructionReport:
    lb = lower_bounds(n)
    report = ConstructionReport(
        n=n, method=method, N=N, j=j, k=k, ds_size=base_size, bound_value=bound,
        gamma_lower=lb.gamma_lower, gamma_c_lower=lb.gamma_c_lower, base=base,
    )
    if method == "expansion" and k is not None:
        report.product_bound = ratio_product_bound(k, j)
    if cds is not None:
        tree = tree_from_cds(cds)
        report.cds = cds
        report.cds_size = cds.size()
        report.tree = tree
        report.leaf_count = tree.leaf_count
    return report


def _should_build(n: int, build: bool | None) -> bool:
    if build is None:
        return n <= get_nmax()
    if build and n > get_nmax():
        raise ExplicitSetTooLarge(f"n={n} exceeds n_max={get_nmax()}")
    return build


def hamming_construct(n: int, build: bool | None = None) -> ConstructionReport:
    """Star connection on the perfect Hamming partition (n = 2^k - 1)."""
    k = hamming_k(n)
    if k is None or n < 2:
        raise ParameterError(f"n={n} is not a Hamming dimension 2^k - 1 with k >= 2")
    c = hamming_size(k)
    cds = None
    if _should_build(n, build):
        cds = connect_stars(star_forest(codewords(build_hamming(k))))
    return _report(n, "hamming", n, 0, k, "hamming", c, star_bound(c), cds)


def doubling_construct(n: int, build: bool | None = None) -> ConstructionReport:
    """Star-connected Hamming code of the largest Hamming dimension <= n,
    doubled as a connected set up to dimension n."""
    if n < 2:
        raise ParameterError(f"constructions need n >= 2, got {n}")
    k = hamming_floor(n)
    N = (1 << k) - 1
    j = n - N
    cds = None
    if _should_build(n, build):
        ds = codewords(build_hamming(k))
        cds = connect_stars(star_forest(ds)) if ds.size() > 1 else ds
        for _ in range(j):
            cds = double_set(cds, connected=True)
    return _report(n, "doubling", N, j, k, "hamming", hamming_size(k), doubling_bound(k, j), cds)


def expansion_construct(
    n: int, k: int | None = None, j: int | None = None, build: bool | None = None
) -> ConstructionReport:
    """Expansion into Q_n. With ``k`` the base is the Hamming code of
    Q_{2^k-1}; with only ``j`` the base dimension is n - j; with neither the
    best expansion candidate is used."""
    if n < 2:
        raise ParameterError(f"constructions need n >= 2, got {n}")
    if k is not None:
        N = (1 << k) - 1
        if j is not None and N + j != n:
            raise ParameterError(f"2^{k} - 1 + {j} != {n}")
        j = n - N
    elif j is not None:
        N = n - j
    else:
        best = min((c for c in candidates(n) if c.method == "expansion"), key=lambda c: (c.bound, c.j))
        N, j = best.N, best.j
    if j < 1 or N < 1:
        raise ParameterError(f"expansion needs N >= 1 and j >= 1 (got N={N}, j={j})")
    kb = hamming_k(N)
    base = "hamming" if kb is not None else "doubled-hamming"
    b = doubled_hamming_size(N)
    cds = expand(doubled_hamming(N), j) if _should_build(n, build) else None
    return _report(n, "expansion", N, j, kb, base, b, expansion_bound(b, j), cds)


def select_candidate(n: int) -> Candidate:
    return min(candidates(n), key=lambda c: (c.bound, c.j, _METHOD_RANK[c.method]))


def auto_construct(n: int, build: bool | None = None) -> ConstructionReport:
    """Build the candidate with the smallest bound, ties to smaller j."""
    best = select_candidate(n)
    if best.method == "hamming":
        return hamming_construct(n, build)
    if best.method == "doubling":
        return doubling_construct(n, build)
    return expansion_construct(n, j=best.j, build=build)


@dataclass(frozen=True)
class HammingComparison:
    direct: ConstructionReport
    expanded: ConstructionReport


def hamming_cds_for_code_dim(k: int, build: bool | None = None) -> HammingComparison:
    """For n = 2^k - 1, the direct star connection versus expanding the
    Hamming code of Q_{2^(k-1)-1} by j = 2^(k-1)."""
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    n = (1 << k) - 1
    return HammingComparison(
        direct=hamming_construct(n, build),
        expanded=expansion_construct(n, k=k - 1, build=build),
    )


def verify_construction(report: ConstructionReport) -> bool:
    return report.cds is not None and is_connected_dominating(report.cds)
