import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubedom.errors import ExplicitSetTooLarge, ParameterError
from cubedom.hypercube import (
    CubeEdge,
    VertexSet,
    closed_neighborhood,
    flip_bits,
    gray_code_path,
    hamming_distance,
    is_connected,
    neighbors,
    parse_vertex,
    vertex_str,
)
from cubedom.trees import verify_tree
from cubedom.unionfind import UnionFind


def b(s):
    return int(s, 2)


def test_neighbors_examples():
    assert neighbors(b("000"), 3) == [b("001"), b("010"), b("100")]
    assert neighbors(b("101"), 3) == [b("100"), b("111"), b("001")]


def test_neighbors_degree_q4():
    for v in range(16):
        nbs = neighbors(v, 4)
        assert len(nbs) == 4 and len(set(nbs)) == 4
        assert all(hamming_distance(v, u) == 1 for u in nbs)


@pytest.mark.parametrize("n", [0, -1, 25])
def test_neighbors_dimension_range(n):
    with pytest.raises(ParameterError):
        neighbors(0, n)


def test_nmax_env_override(monkeypatch):
    monkeypatch.setenv("CUBEDOM_NMAX", "5")
    with pytest.raises(ExplicitSetTooLarge):
        VertexSet.empty(6)
    assert VertexSet.empty(5).size() == 0


def test_vertex_text_form_is_msb_first():
    assert vertex_str(1, 3) == "001"
    assert parse_vertex("100", 3) == 4
    with pytest.raises(ParameterError):
        parse_vertex("10", 3)


def test_closed_neighborhood():
    assert set(closed_neighborhood(0, 3)) == {b("000"), b("001"), b("010"), b("100")}
    assert set(closed_neighborhood(7, 3)) == {b("111"), b("110"), b("101"), b("011")}
    union = closed_neighborhood(0, 3) | closed_neighborhood(7, 3)
    assert union == VertexSet.full(3)


@given(st.integers(1, 8), st.data())
def test_closed_neighborhood_size(n, data):
    v = data.draw(st.integers(0, (1 << n) - 1))
    assert closed_neighborhood(v, n).size() == n + 1


@given(st.integers(1, 8), st.integers(0, 7))
def test_flip_bits_matches_xor(n, i):
    if i >= n:
        return
    arr = np.arange(1 << n)
    assert np.array_equal(flip_bits(arr, i), arr ^ (1 << i))


def test_cube_edge_normalises_order():
    assert CubeEdge.of(5, 4) == CubeEdge(4, 5)
    assert CubeEdge.of(2, 6).direction == 2
    with pytest.raises(ParameterError):
        CubeEdge.of(0, 3)


def test_is_connected_examples():
    assert not is_connected(VertexSet.from_vertices(3, [0, 7]))
    assert is_connected(VertexSet.from_vertices(3, [b("000"), b("001"), b("011"), b("111")]))
    for v in range(8):
        assert is_connected(VertexSet.from_vertices(3, [v]))
    with pytest.raises(ParameterError):
        is_connected(VertexSet.empty(3))


def uf_connected(n, members):
    members = sorted(members)
    index = {v: i for i, v in enumerate(members)}
    uf = UnionFind(len(members))
    for v in members:
        for i in range(n):
            u = v ^ (1 << i)
            if u in index:
                uf.union(index[v], index[u])
    return uf.components == 1


@settings(max_examples=200)
@given(st.integers(1, 8), st.data())
def test_is_connected_matches_union_find(n, data):
    members = data.draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=1 << n))
    vset = VertexSet.from_vertices(n, members)
    assert is_connected(vset) == uf_connected(n, members)


def test_is_connected_random_walks_are_connected():
    rng = random.Random(7)
    for n in range(2, 9):
        v = rng.randrange(1 << n)
        walk = {v}
        for _ in range(3 * n):
            v ^= 1 << rng.randrange(n)
            walk.add(v)
        assert is_connected(VertexSet.from_vertices(n, walk))


def test_gray_path_n1():
    tree = gray_code_path(1)
    assert tree.edges.tolist() == [[0, 1]]
    assert tree.leaf_count == 2


def test_gray_path_n3_order():
    tree = gray_code_path(3)
    order = ["000", "001", "011", "010", "110", "111", "101", "100"]
    expected = [sorted((b(x), b(y))) for x, y in zip(order, order[1:])]
    assert tree.edges.tolist() == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_gray_path_is_hamilton_path(n):
    tree = gray_code_path(n)
    report = verify_tree(tree)
    assert report.ok, report.violations
    assert len(tree.edges) == (1 << n) - 1
    assert tree.leaf_count == 2
    assert np.all(tree.degrees() <= 2)


def test_vertex_set_is_immutable_and_set_like():
    a = VertexSet.from_vertices(3, [0, 1])
    c = VertexSet.from_vertices(3, [1, 2])
    assert set(a | c) == {0, 1, 2}
    assert set(a & c) == {1}
    assert set(a - c) == {0}
    assert VertexSet.from_vertices(3, [1]) <= a
    assert 0 in a and 5 not in a and 99 not in a
    with pytest.raises(ValueError):
        a.bits[0] = False
    with pytest.raises(ParameterError):
        VertexSet.from_vertices(3, [8])
    assert VertexSet.from_mask(3, 0b10000001) == VertexSet.from_vertices(3, [0, 7])
    assert a.to_mask() == 0b11
