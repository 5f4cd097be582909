"""Separable minimum dominating sets and the effectiveness predicate.

A separable set is a minimum dominating set split into two nonempty parts
where part 1 open-dominates everything outside the set.  Splits are
ordered: (part1, part2) and (part2, part1) are distinct records because the
parts play asymmetric roles, both here and under permutation images.

Effectiveness of a record under a permutation asks whether the image of
the whole set is again a minimum dominating set whose part-2 image
open-dominates the outside.  The image lives in the second prism copy,
which is a relabeled twin of the base graph, so everything is evaluated
directly in base-graph indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .domination import (
    dominates,
    domination_number,
    enumerate_gamma_sets,
    is_2_packing,
    is_dominating,
    is_independent,
)
from .graphs import Graph, edges_between, iter_bits, mask_to_list


@dataclass(frozen=True)
class SeparableSet:
    """A gamma-set `dom_set` split as part1 | part2, part1 covering outside.

    Invariants: part1 and part2 are nonempty, disjoint, union to dom_set,
    and part1 open-dominates the complement of dom_set.
    """

    dom_set: int
    part1: int
    part2: int

    def check(self, g: Graph) -> None:
        """Raise ValueError unless the structural invariants hold for g."""
        if self.part1 == 0 or self.part2 == 0:
            raise ValueError("both parts must be nonempty")
        if self.part1 & self.part2:
            raise ValueError("parts must be disjoint")
        if self.part1 | self.part2 != self.dom_set:
            raise ValueError("parts must partition the dominating set")
        if not is_dominating(g, self.dom_set):
            raise ValueError("dom_set does not dominate the graph")
        if self.dom_set.bit_count() != domination_number(g).gamma:
            raise ValueError("dom_set is not a minimum dominating set")
        if not dominates(g, self.part1, g.full & ~self.dom_set):
            raise ValueError("part1 does not open-dominate the outside")


@dataclass(frozen=True)
class SeparationProperties:
    """Independently computed structural facts about a separable record.

    All three are consequences of the definition, so the report exists to
    let tests falsify a broken implementation rather than assume them.
    """

    part2_independent: bool
    no_cross_edges: bool
    part2_is_2_packing: bool

    def all_hold(self) -> bool:
        return self.part2_independent and self.no_cross_edges and self.part2_is_2_packing


@dataclass(frozen=True)
class EffectiveWitness:
    """A record plus its part images under a permutation, all as bitmasks."""

    sep: SeparableSet
    image1: int
    image2: int


def _submasks_ascending(mask: int) -> list[int]:
    """All nonempty proper submasks of `mask`, ascending by bit pattern."""
    positions = mask_to_list(mask)
    k = len(positions)
    out = []
    for c in range(1, (1 << k) - 1):
        sub = 0
        for i in range(k):
            if c & (1 << i):
                sub |= 1 << positions[i]
        out.append(sub)
    return out


def enumerate_separable(g: Graph) -> list[SeparableSet]:
    """Every ordered split of every gamma-set with part1 covering outside.

    Deterministic order: gamma-sets ascending by bit pattern, then part1
    ascending by bit pattern.  Empty whenever gamma(g) = 1; when the whole
    vertex set is the only gamma-set the outside is empty and every split
    qualifies vacuously.
    """
    out = []
    for dom_set in enumerate_gamma_sets(g):
        outside = g.full & ~dom_set
        for part1 in _submasks_ascending(dom_set):
            if dominates(g, part1, outside):
                out.append(SeparableSet(dom_set, part1, dom_set & ~part1))
    return out


def check_separation_properties(g: Graph, sep: SeparableSet) -> SeparationProperties:
    """Compute the three part-2 facts directly, without assuming them."""
    return SeparationProperties(
        part2_independent=is_independent(g, sep.part2),
        no_cross_edges=not edges_between(g, sep.part1, sep.part2),
        part2_is_2_packing=is_2_packing(g, sep.part2),
    )


def permutation_image(images: Sequence[int], vset: int) -> int:
    """Bitmask image of `vset` under the permutation given as an image table."""
    out = 0
    for v in iter_bits(vset):
        out |= 1 << images[v]
    return out


def check_permutation(images: Sequence[int], n: int) -> None:
    """Raise ValueError unless `images` is a bijection on 0..n-1."""
    if len(images) != n or sorted(images) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {tuple(images)}")


def is_effective(
    g: Graph, sep: SeparableSet, pi: Sequence[int]
) -> EffectiveWitness | None:
    """Witness that sep's image under pi is again separable with roles swapped.

    The image of the whole set must dominate, and the image of part2 must
    open-dominate everything outside the image.  Returns None when the
    record is not effective under pi.
    """
    check_permutation(pi, g.n)
    image1 = permutation_image(pi, sep.part1)
    image2 = permutation_image(pi, sep.part2)
    image = image1 | image2
    if not is_dominating(g, image):
        return None
    if not dominates(g, image2, g.full & ~image):
        return None
    return EffectiveWitness(sep, image1, image2)


def exists_effective(g: Graph, pi: Sequence[int]) -> EffectiveWitness | None:
    """First effective record in enumeration order, or None."""
    check_permutation(pi, g.n)
    for sep in enumerate_separable(g):
        witness = is_effective(g, sep, pi)
        if witness is not None:
            return witness
    return None
