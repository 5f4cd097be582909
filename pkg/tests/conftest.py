"""Shared fixtures: corpus loading and small standard graphs."""

from __future__ import annotations

from pathlib import Path

import pytest

from prismfixer.graphs import Graph, parse_graph6

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def load_corpus(name: str) -> list[Graph]:
    path = CORPUS_DIR / name
    return [parse_graph6(line) for line in path.read_text().splitlines() if line]


def corpus_lines(name: str) -> list[str]:
    path = CORPUS_DIR / name
    return [line for line in path.read_text().splitlines() if line]


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    return Graph(n, [0] * n)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@pytest.fixture(scope="session")
def small_graphs() -> list[Graph]:
    """All graphs on 1..6 vertices, one per isomorphism class."""
    return load_corpus("graphs_n1_6.g6")


@pytest.fixture(scope="session")
def seven_vertex_graphs() -> list[Graph]:
    return load_corpus("graphs_n7.g6")
