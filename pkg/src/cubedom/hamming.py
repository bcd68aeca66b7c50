"""Binary Hamming codes of length 2^k - 1 and their perfect star partitions.

Codewords live in Q_N with N = 2^k - 1. The generator is in systematic form:
row i has bit i set in the information block (bits ``0 .. N-k-1``) and a k-bit
suffix of weight >= 2 in the check block (bits ``N-k .. N-1``). Suffixes are
assigned to rows in increasing integer order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ExplicitSetTooLarge, IntegrityError, ParameterError
from .hypercube import VertexSet, check_vertex, get_nmax

MAX_K = 5


@dataclass(frozen=True)
class HammingCode:
    k: int
    generator_rows: tuple[int, ...]
    # syndrome -> bit position of the single flipped coordinate
    _error_position: dict[int, int] = field(repr=False, compare=False)

    @property
    def N(self) -> int:
        return (1 << self.k) - 1

    @property
    def info_bits(self) -> int:
        return self.N - self.k

    @property
    def codeword_count(self) -> int:
        return 1 << self.info_bits

    def suffix(self, row: int) -> int:
        return self.generator_rows[row] >> self.info_bits

    def syndrome(self, v: int) -> int:
        """Zero exactly on codewords; otherwise names the flipped coordinate."""
        s = v >> self.info_bits
        for i in range(self.info_bits):
            if v >> i & 1:
                s ^= self.suffix(i)
        return s

    def encode(self, message: int) -> int:
        word = 0
        for i in range(self.info_bits):
            if message >> i & 1:
                word ^= self.generator_rows[i]
        return word

    def nearest_codeword(self, v: int) -> int:
        s = self.syndrome(v)
        if s == 0:
            return v
        return v ^ (1 << self._error_position[s])


def build_hamming(k: int) -> HammingCode:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"Hamming parameter k must be an integer >= 1, got {k!r}")
    if k > MAX_K:
        raise ParameterError(f"k={k} exceeds the supported maximum {MAX_K}")
    n_code = (1 << k) - 1
    info = n_code - k
    suffixes = [s for s in range(1 << k) if s.bit_count() >= 2]
    assert len(suffixes) == info
    rows = tuple((1 << i) | (s << info) for i, s in enumerate(suffixes))
    error_position = {s: i for i, s in enumerate(suffixes)}
    error_position.update({1 << b: info + b for b in range(k)})
    return HammingCode(k, rows, error_position)


def is_codeword(code: HammingCode, v: int) -> bool:
    check_vertex(v, code.N)
    return code.syndrome(v) == 0


def codeword_array(code: HammingCode) -> np.ndarray:
    """All codewords in increasing message order (not sorted by value)."""
    words = np.zeros(1, dtype=np.int64)
    for row in code.generator_rows:
        words = np.concatenate([words, words ^ row])
    return words


def codewords(code: HammingCode) -> VertexSet:
    if code.N > get_nmax():
        raise ExplicitSetTooLarge(
            f"Q_{code.N} exceeds n_max={get_nmax()}; use is_codeword for membership"
        )
    return VertexSet.from_vertices(code.N, codeword_array(code))


def syndromes(code: HammingCode) -> np.ndarray:
    """Syndrome of every vertex of Q_N, computed column-wise."""
    v = np.arange(1 << code.N, dtype=np.int64)
    s = v >> code.info_bits
    for i in range(code.info_bits):
        s ^= ((v >> i) & 1) * code.suffix(i)
    return s


@dataclass(frozen=True)
class StarPartition:
    """Assignment of every vertex of Q_N to the codeword dominating it."""

    code: HammingCode
    center_of: np.ndarray = field(repr=False)

    @property
    def N(self) -> int:
        return self.code.N

    def centers(self) -> VertexSet:
        return VertexSet(self.N, self.center_of == np.arange(1 << self.N))

    def star(self, center: int) -> np.ndarray:
        return np.flatnonzero(self.center_of == center)

    def class_sizes(self) -> dict[int, int]:
        values, counts = np.unique(self.center_of, return_counts=True)
        return {int(c): int(m) for c, m in zip(values, counts)}


def star_partition(code: HammingCode) -> StarPartition:
    words = codewords(code)
    n = code.N
    # coverage count by closed neighbourhoods must be exactly one everywhere
    coverage = words.bits.astype(np.int32)
    for i in range(n):
        coverage += words.bits.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(-1)
    if np.any(coverage != 1):
        bad = int(np.flatnonzero(coverage != 1)[0])
        raise IntegrityError(
            f"vertex {bad} lies in {int(coverage[bad])} codeword neighbourhoods"
        )
    s = syndromes(code)
    flip = np.zeros(1 << code.k, dtype=np.int64)
    for syn, pos in code._error_position.items():
        flip[syn] = 1 << pos
    center_of = np.arange(1 << n, dtype=np.int64) ^ flip[s]
    if not np.all(words.bits[center_of]):
        raise IntegrityError("syndrome decoding produced a non-codeword center")
    center_of.flags.writeable = False
    return StarPartition(code, center_of)
