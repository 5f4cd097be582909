"""Exact domination: minimum dominating sets, enumeration and predicates.

The solver is an iterative-deepening branch and bound over bitmask state.
At each node it picks an undominated vertex with the fewest possible
dominators and branches on them; one of those vertices must be in any
dominating set, so the search is complete.  A 2^n ascending-cardinality
scan serves as the independent reference oracle at small n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, closed_neighborhood_set, iter_bits, mask_of

_NAIVE_MAX_N = 20


@dataclass(frozen=True)
class GammaResult:
    """Minimum dominating set size plus one witness set (bitmask)."""

    gamma: int
    witness: int


def is_dominating(g: Graph, dset: int) -> bool:
    """True iff every vertex is in `dset` or adjacent to a member."""
    return closed_neighborhood_set(g, dset) == g.full


def dominates(g: Graph, dset: int, aset: int) -> bool:
    """Open domination: every vertex of `aset` has a neighbor in `dset`.

    A vertex never covers itself here, unlike `is_dominating`.
    """
    covered = 0
    for v in iter_bits(dset):
        covered |= g.adj[v]
        if aset & ~covered == 0:
            return True
    return aset & ~covered == 0


def is_independent(g: Graph, vset: int) -> bool:
    """True iff no edge joins two members of `vset`."""
    for v in iter_bits(vset):
        if g.adj[v] & vset:
            return False
    return True


def is_2_packing(g: Graph, vset: int) -> bool:
    """True iff distinct members have pairwise disjoint closed neighborhoods."""
    seen = 0
    for v in iter_bits(vset):
        if g.closed[v] & seen:
            return False
        seen |= g.closed[v]
    return True


# ---------------------------------------------------------------------------
# Branch-and-bound solver (mask-level core shared with the prism sweeps)
# ---------------------------------------------------------------------------

def find_dominating_set_at_most(closed: tuple[int, ...], full: int, k: int) -> int | None:
    """Dominating set of size <= k over closed-neighborhood masks, or None.

    Works on raw masks so prism sweeps can avoid Graph construction.
    """
    if full == 0:
        return 0
    if k <= 0:
        return None
    n = len(closed)
    sizes = [m.bit_count() for m in closed]
    verts = range(n)

    def rec(dominated: int, chosen: int, count: int) -> int | None:
        und = full & ~dominated
        if not und:
            return chosen
        if count == k:
            return None
        # admissible bound: each further pick covers at most best_cover vertices
        best_cover = 0
        for u in verts:
            c = (closed[u] & und).bit_count()
            if c > best_cover:
                best_cover = c
        if best_cover == 0:
            return None
        need = -(-und.bit_count() // best_cover)
        if count + need > k:
            return None
        # pick an undominated vertex with the fewest dominators
        pick = -1
        pick_size = n + 2
        for v in iter_bits(und):
            if sizes[v] < pick_size:
                pick_size = sizes[v]
                pick = v
        branches = sorted(
            iter_bits(closed[pick]),
            key=lambda u: (-(closed[u] & und).bit_count(), u),
        )
        for u in branches:
            hit = rec(dominated | closed[u], chosen | (1 << u), count + 1)
            if hit is not None:
                return hit
        return None

    return rec(0, 0, 0)


def domination_lower_bound(g: Graph) -> int:
    """ceil(n / (max degree + 1)); 0 for the empty graph."""
    if g.n == 0:
        return 0
    biggest = max(m.bit_count() for m in g.closed)
    return -(-g.n // biggest)


def domination_number(g: Graph) -> GammaResult:
    """Exact minimum dominating set via iterative deepening."""
    if g.n == 0:
        return GammaResult(0, 0)
    k = domination_lower_bound(g)
    while True:
        hit = find_dominating_set_at_most(g.closed, g.full, k)
        if hit is not None:
            return GammaResult(hit.bit_count(), hit)
        k += 1


def naive_domination_number(g: Graph) -> GammaResult:
    """Reference oracle: scan all subsets by ascending cardinality.

    Guarded to n <= 20; exists so the solver can be checked against an
    implementation too simple to be wrong.
    """
    if g.n > _NAIVE_MAX_N:
        raise ValueError(f"naive oracle guarded to n <= {_NAIVE_MAX_N}, got {g.n}")
    if g.n == 0:
        return GammaResult(0, 0)
    for k in range(0, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            m = 0
            for v in combo:
                m |= g.closed[v]
            if m == g.full:
                return GammaResult(k, mask_of(combo))
    raise AssertionError("unreachable: the full vertex set always dominates")


def enumerate_gamma_sets(g: Graph) -> list[int]:
    """All dominating sets of size exactly gamma(g), ascending by bit pattern.

    Uses the lexicographic next-bit-permutation trick to walk the size-gamma
    subsets in increasing numeric order.
    """
    gamma = domination_number(g).gamma
    if gamma == 0:
        return [0]
    out = []
    v = (1 << gamma) - 1
    limit = 1 << g.n
    while v < limit:
        if closed_neighborhood_set(g, v) == g.full:
            out.append(v)
        t = (v | (v - 1)) + 1
        v = t | ((((t & -t) // (v & -v)) >> 1) - 1)
    return out
