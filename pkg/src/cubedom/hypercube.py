"""Vertex encoding, bitset vertex sets, adjacency and traversal in the n-cube.

Conventions used everywhere in the package:

* A vertex of Q_n is an int in ``[0, 2**n)``. Coordinate ``a_i`` lives in bit
  ``i - 1``, so coordinate 1 is the least-significant bit.
* The text form of a vertex is an n-character 0/1 string whose leftmost
  character is coordinate n (the most-significant bit); ``int(s, 2)`` reads it.
* Flipping coordinate ``i + 1`` is ``v ^ (1 << i)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import ExplicitSetTooLarge, ParameterError

DEFAULT_NMAX = 24


def get_nmax() -> int:
    """Cap on n for explicit 2^n structures; ``CUBEDOM_NMAX`` overrides it."""
    raw = os.environ.get("CUBEDOM_NMAX")
    if raw is None:
        return DEFAULT_NMAX
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"CUBEDOM_NMAX must be an integer, got {raw!r}") from None
    if value < 1:
        raise ParameterError(f"CUBEDOM_NMAX must be >= 1, got {value}")
    return value


def check_dimension(n: int, nmax: int | None = None) -> None:
    if nmax is None:
        nmax = get_nmax()
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterError(f"dimension must be an integer >= 1, got {n!r}")
    if n > nmax:
        raise ExplicitSetTooLarge(
            f"dimension {n} exceeds n_max={nmax}; raise CUBEDOM_NMAX or use formula mode"
        )


def check_vertex(v: int, n: int) -> None:
    if not 0 <= v < (1 << n):
        raise ParameterError(f"vertex {v} is outside Q_{n}")


def vertex_str(v: int, n: int) -> str:
    return format(int(v), f"0{n}b")


def parse_vertex(text: str, n: int) -> int:
    text = text.strip()
    if len(text) != n or any(ch not in "01" for ch in text):
        raise ParameterError(f"expected a {n}-character 0/1 string, got {text!r}")
    return int(text, 2)


def hamming_distance(u: int, v: int) -> int:
    return (int(u) ^ int(v)).bit_count()


class CubeEdge(NamedTuple):
    """An edge of Q_n, stored with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "CubeEdge":
        a, b = int(a), int(b)
        if (a ^ b).bit_count() != 1:
            raise ParameterError(f"{a} and {b} are not cube-adjacent")
        return cls(a, b) if a < b else cls(b, a)

    @property
    def direction(self) -> int:
        """Index of the flipped bit."""
        return (self.u ^ self.v).bit_length() - 1


def neighbors(v: int, n: int) -> list[int]:
    """The n neighbours of v, ordered by increasing flipped bit."""
    check_dimension(n)
    check_vertex(v, n)
    return [v ^ (1 << i) for i in range(n)]


def flip_bits(bits: np.ndarray, i: int) -> np.ndarray:
    """Permute a 2^n indicator array by ``v -> v ^ (1 << i)``.

    The reshape exposes bit i as its own axis, so reversing that axis swaps the
    two halves of every 2^(i+1) block without any index arithmetic.
    """
    return bits.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(-1)


def dilate(bits: np.ndarray, n: int) -> np.ndarray:
    """Union of the closed neighbourhoods of the members of ``bits``."""
    out = bits.copy()
    for i in range(n):
        out |= flip_bits(bits, i)
    return out


class VertexSet:
    """An immutable subset of V(Q_n) stored as a length-2^n boolean array."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: np.ndarray):
        bits = np.asarray(bits, dtype=bool)
        if bits.shape != (1 << n,):
            raise ParameterError(f"membership array must have length 2^{n}, got {bits.shape}")
        bits = bits.copy()
        bits.flags.writeable = False
        self.n = n
        self.bits = bits

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        check_dimension(n)
        return cls(n, np.zeros(1 << n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        check_dimension(n)
        return cls(n, np.ones(1 << n, dtype=bool))

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        check_dimension(n)
        idx = np.fromiter((int(v) for v in vertices), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= (1 << n)):
            raise ParameterError(f"vertex outside Q_{n}")
        bits = np.zeros(1 << n, dtype=bool)
        bits[idx] = True
        return cls(n, bits)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        """Build from a Python int whose bit v marks vertex v."""
        check_dimension(n)
        return cls.from_vertices(n, (v for v in range(1 << n) if mask >> v & 1))

    def size(self) -> int:
        return int(np.count_nonzero(self.bits))

    def __len__(self) -> int:
        return self.size()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < (1 << self.n) and bool(self.bits[v])

    def vertices(self) -> np.ndarray:
        """Members in increasing order, as an int64 array."""
        return np.flatnonzero(self.bits).astype(np.int64)

    def __iter__(self) -> Iterator[int]:
        return (int(v) for v in self.vertices())

    def min(self) -> int:
        members = np.flatnonzero(self.bits)
        if members.size == 0:
            raise ParameterError("empty set has no minimum")
        return int(members[0])

    def to_mask(self) -> int:
        mask = 0
        for v in self:
            mask |= 1 << v
        return mask

    def _check_same(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet) or other.n != self.n:
            raise ParameterError("vertex sets live in different cubes")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __le__(self, other: "VertexSet") -> bool:
        self._check_same(other)
        return not np.any(self.bits & ~other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        size = self.size()
        if size <= 8:
            body = ", ".join(vertex_str(v, self.n) for v in self)
            return f"VertexSet(n={self.n}, {{{body}}})"
        return f"VertexSet(n={self.n}, size={size})"


def closed_neighborhood(v: int, n: int) -> VertexSet:
    check_dimension(n)
    check_vertex(v, n)
    return VertexSet.from_vertices(n, [v, *neighbors(v, n)])


def is_connected(vset: VertexSet) -> bool:
    """Whether the subgraph of Q_n induced by ``vset`` is connected.

    Level-synchronous breadth-first search from the smallest member, restricted
    to the set.
    """
    members = vset.vertices()
    if members.size == 0:
        raise ParameterError("connectivity of the empty set is undefined")
    n = vset.n
    flips = np.int64(1) << np.arange(n, dtype=np.int64)
    seen = np.zeros(1 << n, dtype=bool)
    frontier = members[:1]
    seen[frontier] = True
    reached = 1
    while frontier.size:
        cand = (frontier[:, None] ^ flips).ravel()
        cand = cand[vset.bits[cand] & ~seen[cand]]
        frontier = np.unique(cand)
        seen[frontier] = True
        reached += frontier.size
    return reached == members.size


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of Q_n given by its edge list.

    ``edges`` is an (m, 2) int64 array with ``u < v`` in every row. Degree-derived
    fields are computed once at construction.
    """

    n: int
    edges: np.ndarray
    leaf_count: int = field(init=False)
    backbone: VertexSet = field(init=False, repr=False)

    def __post_init__(self) -> None:
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        edges = np.sort(edges, axis=1)
        edges.flags.writeable = False
        object.__setattr__(self, "edges", edges)
        degree = np.bincount(edges.ravel(), minlength=1 << self.n)[: 1 << self.n]
        object.__setattr__(self, "leaf_count", int(np.count_nonzero(degree == 1)))
        object.__setattr__(self, "backbone", VertexSet(self.n, degree >= 2))

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=1 << self.n)

    def edge_list(self) -> list[CubeEdge]:
        return [CubeEdge(int(u), int(v)) for u, v in self.edges]


def gray_code_order(n: int) -> np.ndarray:
    """Binary-reflected Gray code: ``g(i) = i ^ (i >> 1)``."""
    i = np.arange(1 << n, dtype=np.int64)
    return i ^ (i >> 1)


def gray_code_path(n: int) -> SpanningTree:
    """The Hamilton path of Q_n that visits vertices in Gray code order."""
    check_dimension(n)
    order = gray_code_order(n)
    return SpanningTree(n, np.stack([order[:-1], order[1:]], axis=1))
