"""Separable records, their structural properties, and effectiveness."""

import random
from itertools import permutations

import pytest

from prismfixer.domination import dominates, is_2_packing, is_independent
from prismfixer.graphs import Graph, edges_between, mask_of
from prismfixer.prism import adversary_permutation, identity_permutation
from prismfixer.separable import (
    SeparableSet,
    check_permutation,
    check_separation_properties,
    enumerate_separable,
    exists_effective,
    is_effective,
    permutation_image,
)

from conftest import complete, cycle, edgeless, path_graph, star


def _records_as_tuples(g):
    return [(s.dom_set, s.part1, s.part2) for s in enumerate_separable(g)]


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def test_enumerate_separable_c4():
    # only the two diagonal gamma-sets separate, each in both orientations
    assert _records_as_tuples(cycle(4)) == [
        (mask_of([0, 2]), mask_of([0]), mask_of([2])),
        (mask_of([0, 2]), mask_of([2]), mask_of([0])),
        (mask_of([1, 3]), mask_of([1]), mask_of([3])),
        (mask_of([1, 3]), mask_of([3]), mask_of([1])),
    ]


def test_enumerate_separable_star_empty():
    assert enumerate_separable(star(3)) == []


def test_enumerate_separable_edgeless_vacuous():
    # the whole vertex set is the only gamma-set; with nothing outside,
    # both orientations of the only split qualify vacuously
    assert _records_as_tuples(edgeless(2)) == [
        (0b11, 0b01, 0b10),
        (0b11, 0b10, 0b01),
    ]


def test_enumerate_separable_brute_force(small_graphs):
    from prismfixer.domination import enumerate_gamma_sets

    for g in small_graphs[:80]:
        expected = []
        for dset in enumerate_gamma_sets(g):
            outside = g.full & ~dset
            members = [v for v in range(g.n) if dset >> v & 1]
            subs = sorted(
                mask_of(c)
                for k in range(1, len(members))
                for c in _combos(members, k)
            )
            for part1 in subs:
                if dominates(g, part1, outside):
                    expected.append((dset, part1, dset & ~part1))
        assert _records_as_tuples(g) == expected


def _combos(items, k):
    from itertools import combinations

    return combinations(items, k)


def test_records_satisfy_their_invariants(small_graphs):
    for g in small_graphs:
        for sep in enumerate_separable(g):
            sep.check(g)  # raises on violation


def test_separable_set_check_rejects_bad_records():
    g = cycle(4)
    with pytest.raises(ValueError, match="nonempty"):
        SeparableSet(mask_of([0, 2]), mask_of([0, 2]), 0).check(g)
    with pytest.raises(ValueError, match="partition"):
        SeparableSet(mask_of([0, 2]), mask_of([0]), mask_of([1])).check(g)
    with pytest.raises(ValueError, match="dominate the graph"):
        SeparableSet(mask_of([0, 1]), mask_of([0]), mask_of([1])).check(path_graph(4))
    with pytest.raises(ValueError, match="minimum"):
        SeparableSet(mask_of([0, 1, 2]), mask_of([0]), mask_of([1, 2])).check(cycle(4))
    with pytest.raises(ValueError, match="open-dominate"):
        SeparableSet(mask_of([0, 1]), mask_of([0]), mask_of([1])).check(cycle(4))


# ---------------------------------------------------------------------------
# Separation properties (computed, not assumed)
# ---------------------------------------------------------------------------

def test_separation_properties_singletons():
    g = cycle(4)
    rep = check_separation_properties(g, SeparableSet(mask_of([0, 2]), mask_of([0]), mask_of([2])))
    assert rep.part2_independent and rep.no_cross_edges and rep.part2_is_2_packing
    assert rep.all_hold()


def test_separation_properties_p6():
    g = path_graph(6)
    # {1, 4} is the unique gamma-set of the 6-path
    from prismfixer.domination import enumerate_gamma_sets

    assert enumerate_gamma_sets(g) == [mask_of([1, 4])]
    rep = check_separation_properties(g, SeparableSet(mask_of([1, 4]), mask_of([1]), mask_of([4])))
    assert rep.all_hold()


def test_separation_properties_falsify_corrupted_record():
    # adjacent pair crammed into part2, bypassing enumerate_separable
    g = path_graph(4)
    fake = SeparableSet(mask_of([1, 2]), mask_of([1]), mask_of([2]))
    rep = check_separation_properties(g, fake)
    assert not rep.part2_independent or not rep.no_cross_edges
    assert not rep.all_hold()


def test_separation_properties_hold_universally(small_graphs):
    for g in small_graphs:
        for sep in enumerate_separable(g):
            assert check_separation_properties(g, sep).all_hold()


# ---------------------------------------------------------------------------
# Effectiveness
# ---------------------------------------------------------------------------

def test_is_effective_identity_c4():
    g = cycle(4)
    sep = SeparableSet(mask_of([0, 2]), mask_of([0]), mask_of([2]))
    wit = is_effective(g, sep, identity_permutation(4))
    assert wit is not None
    assert wit.image1 == mask_of([0]) and wit.image2 == mask_of([2])


def test_is_effective_adversary_c4():
    g = cycle(4)
    sep = SeparableSet(mask_of([0, 2]), mask_of([0]), mask_of([2]))
    assert is_effective(g, sep, adversary_permutation(g, 0)) is None


def test_is_effective_rejects_non_bijection():
    g = cycle(4)
    sep = SeparableSet(mask_of([0, 2]), mask_of([0]), mask_of([2]))
    with pytest.raises(ValueError, match="not a permutation"):
        is_effective(g, sep, (0, 0, 1, 2))


def test_non_dominating_image_is_never_effective():
    g = path_graph(4)
    sep = SeparableSet(mask_of([1, 2]), mask_of([2]), mask_of([1]))
    sep.check(g)
    # send the set onto {0, 3}, which does not dominate the 4-path's middle
    pi = (1, 0, 3, 2)
    assert permutation_image(pi, sep.dom_set) == mask_of([0, 3])
    assert is_effective(g, sep, pi) is None


def test_exists_effective_c4():
    g = cycle(4)
    assert exists_effective(g, identity_permutation(4)) is not None
    assert exists_effective(g, adversary_permutation(g, 0)) is None
    assert exists_effective(star(3), identity_permutation(4)) is None


def test_effective_image_inherits_separation_properties(small_graphs):
    # whenever a record is effective, the image with roles swapped is itself
    # a separable record, so its part structure must pass the same checks
    rng = random.Random(5150)
    for g in small_graphs:
        if g.n < 2:
            continue
        perms = [tuple(rng.sample(range(g.n), g.n)) for _ in range(6)]
        perms.append(identity_permutation(g.n))
        for pi in perms:
            for sep in enumerate_separable(g):
                wit = is_effective(g, sep, pi)
                if wit is None:
                    continue
                assert is_independent(g, wit.image1)
                assert not edges_between(g, wit.image1, wit.image2)
                assert is_2_packing(g, wit.image1)


def test_effective_under_identity_means_swapped_record_exists(small_graphs):
    for g in small_graphs:
        records = enumerate_separable(g)
        keys = {(s.dom_set, s.part1, s.part2) for s in records}
        for sep in records:
            if is_effective(g, sep, identity_permutation(g.n)) is not None:
                assert (sep.dom_set, sep.part2, sep.part1) in keys


def test_check_permutation():
    check_permutation((2, 0, 1), 3)
    with pytest.raises(ValueError):
        check_permutation((0, 1), 3)
    with pytest.raises(ValueError):
        check_permutation((0, 0, 2), 3)
