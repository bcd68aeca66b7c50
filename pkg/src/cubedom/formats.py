"""Text formats for vertex sets and spanning trees.

Vertices are written as n-character 0/1 strings, most-significant bit
(coordinate n) first.

Set file: one vertex per line. Blank lines and lines starting with ``#`` are
ignored.

Tree file: a header line ``n=<dim>`` followed by exactly 2^n - 1 lines, each
holding the two endpoints of one edge separated by a single space.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import FormatError
from .hypercube import SpanningTree, VertexSet, check_dimension, vertex_str


def _parse_vertex(token: str, n: int, line: int) -> int:
    if len(token) != n or any(ch not in "01" for ch in token):
        raise FormatError(f"expected a {n}-character 0/1 vertex string, got {token!r}", line)
    return int(token, 2)


def format_set(vset: VertexSet) -> str:
    return "".join(vertex_str(v, vset.n) + "\n" for v in vset)


def parse_set(text: str, n: int) -> VertexSet:
    check_dimension(n)
    vertices = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        vertices.append(_parse_vertex(line, n, lineno))
    return VertexSet.from_vertices(n, vertices)


def write_set(path: str | Path, vset: VertexSet) -> None:
    Path(path).write_text(format_set(vset))


def read_set(path: str | Path, n: int) -> VertexSet:
    return parse_set(Path(path).read_text(), n)


def format_tree(tree: SpanningTree) -> str:
    n = tree.n
    lines = [f"n={n}"]
    lines.extend(f"{vertex_str(u, n)} {vertex_str(v, n)}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


def _edge_lines(lines: Iterable[str], n: int, first_line: int):
    for lineno, raw in enumerate(lines, start=first_line):
        if not raw.strip():
            continue
        parts = raw.strip().split(" ")
        if len(parts) != 2:
            raise FormatError("edge lines hold exactly two vertices separated by one space", lineno)
        yield _parse_vertex(parts[0], n, lineno), _parse_vertex(parts[1], n, lineno)


def parse_tree(text: str, n: int | None = None) -> SpanningTree:
    """Parse a tree file. Adjacency and acyclicity are left to verify_tree;
    only syntax and the edge count are enforced here."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n="):
        raise FormatError("missing 'n=<dim>' header", 1)
    try:
        header_n = int(lines[0][2:])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}", 1) from None
    if n is not None and header_n != n:
        raise FormatError(f"header says n={header_n} but n={n} was expected", 1)
    check_dimension(header_n)
    edges = list(_edge_lines(lines[1:], header_n, 2))
    expected = (1 << header_n) - 1
    if len(edges) != expected:
        raise FormatError(f"expected {expected} edge lines, found {len(edges)}", len(lines))
    return SpanningTree(header_n, np.array(edges, dtype=np.int64).reshape(-1, 2))


def write_tree(path: str | Path, tree: SpanningTree) -> None:
    Path(path).write_text(format_tree(tree))


def read_tree(path: str | Path, n: int | None = None) -> SpanningTree:
    return parse_tree(Path(path).read_text(), n)
