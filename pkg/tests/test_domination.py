"""Exact domination solver, enumeration and predicates."""

import random
from itertools import combinations

import pytest

from prismfixer.domination import (
    dominates,
    domination_number,
    enumerate_gamma_sets,
    find_dominating_set_at_most,
    is_2_packing,
    is_dominating,
    is_independent,
    naive_domination_number,
)
from prismfixer.graphs import Graph, mask_of, mask_to_list, parse_graph6

from conftest import complete, corpus_lines, cycle, edgeless, load_corpus, path_graph, star


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def test_is_dominating():
    g = cycle(4)
    assert is_dominating(g, mask_of([0, 2]))
    assert not is_dominating(g, mask_of([0]))
    assert is_dominating(g, g.full)
    assert is_dominating(Graph(0, []), 0)


def test_dominates_is_open():
    g = cycle(4)
    assert dominates(g, mask_of([0]), mask_of([1, 3]))
    # open reading: a vertex does not cover itself
    assert not dominates(g, mask_of([0]), mask_of([0]))
    assert dominates(g, 0, 0)
    assert dominates(g, mask_of([2]), 0)


def test_is_independent():
    g = cycle(4)
    assert is_independent(g, mask_of([0, 2]))
    assert not is_independent(g, mask_of([0, 1]))
    assert is_independent(g, 0)
    assert is_independent(g, mask_of([3]))


def test_is_2_packing():
    c6 = cycle(6)
    assert is_2_packing(c6, mask_of([0, 3]))
    assert not is_2_packing(cycle(4), mask_of([0, 2]))
    assert is_2_packing(cycle(4), mask_of([1]))


def test_2_packing_implies_independent(small_graphs):
    rng = random.Random(7)
    for g in small_graphs:
        for _ in range(8):
            s = rng.getrandbits(g.n) if g.n else 0
            if is_2_packing(g, s):
                assert is_independent(g, s)


# ---------------------------------------------------------------------------
# Oracle (the 2^n scan is the ground truth everything else answers to)
# ---------------------------------------------------------------------------

def test_naive_oracle_frozen_values():
    assert naive_domination_number(cycle(4)).gamma == 2
    assert naive_domination_number(complete(4)).gamma == 1
    assert naive_domination_number(cycle(7)).gamma == 3
    assert naive_domination_number(path_graph(4)).gamma == 2
    assert naive_domination_number(parse_graph6("IheA@GUAo")).gamma == 3  # petersen


def test_naive_oracle_witness_dominates():
    for g in (cycle(7), path_graph(6), star(4)):
        res = naive_domination_number(g)
        assert is_dominating(g, res.witness)
        assert res.witness.bit_count() == res.gamma


def test_naive_oracle_guard():
    with pytest.raises(ValueError, match="n <= 20"):
        naive_domination_number(edgeless(21))


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------

def test_solver_edgeless():
    for n in (0, 1, 5):
        res = domination_number(edgeless(n))
        assert res.gamma == n
        assert res.witness == (1 << n) - 1


def test_solver_frozen_values():
    assert domination_number(path_graph(4)).gamma == 2
    assert domination_number(parse_graph6("IheA@GUAo")).gamma == 3
    assert domination_number(cycle(7)).gamma == 3


def test_solver_witness_is_valid():
    for g in (cycle(9), path_graph(8), star(6), complete(5)):
        res = domination_number(g)
        assert is_dominating(g, res.witness)
        assert res.witness.bit_count() == res.gamma


def test_solver_matches_oracle_on_small_corpus(small_graphs):
    for g in small_graphs:
        assert domination_number(g).gamma == naive_domination_number(g).gamma


def test_solver_matches_oracle_on_random_graphs():
    rng = random.Random(20240201)
    for _ in range(120):
        n = rng.randint(1, 11)
        p = rng.choice([0.2, 0.5, 0.8])
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        assert domination_number(g).gamma == naive_domination_number(g).gamma


def test_adding_edges_never_raises_gamma():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(2, 9)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.3]
        g = Graph.from_edges(n, edges)
        before = domination_number(g).gamma
        missing = [e for e in combinations(range(n), 2) if e not in set(edges)]
        if not missing:
            continue
        extra = rng.choice(missing)
        bigger = Graph.from_edges(n, edges + [extra])
        assert domination_number(bigger).gamma <= before


def test_find_dominating_set_at_most():
    g = cycle(7)
    assert find_dominating_set_at_most(g.closed, g.full, 2) is None
    hit = find_dominating_set_at_most(g.closed, g.full, 3)
    assert hit is not None and is_dominating(g, hit)
    assert find_dominating_set_at_most((), 0, 0) == 0


# ---------------------------------------------------------------------------
# Enumeration of all minimum dominating sets
# ---------------------------------------------------------------------------

def test_enumerate_gamma_sets_c4():
    got = [mask_to_list(m) for m in enumerate_gamma_sets(cycle(4))]
    assert got == [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]]


def test_enumerate_gamma_sets_star_and_edgeless():
    assert enumerate_gamma_sets(star(3)) == [mask_of([0])]
    assert enumerate_gamma_sets(edgeless(2)) == [mask_of([0, 1])]
    assert enumerate_gamma_sets(Graph(0, [])) == [0]


def _oracle_gamma_sets(g: Graph) -> list[int]:
    gamma = naive_domination_number(g).gamma
    out = []
    for combo in combinations(range(g.n), gamma):
        m = mask_of(combo)
        if is_dominating(g, m):
            out.append(m)
    return sorted(out)


def test_enumerate_gamma_sets_matches_oracle(small_graphs):
    for g in small_graphs:
        got = enumerate_gamma_sets(g)
        assert got == _oracle_gamma_sets(g)
        assert got == sorted(got)
        assert domination_number(g).witness in got
        assert all(m.bit_count() == domination_number(g).gamma for m in got)
