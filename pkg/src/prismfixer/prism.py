"""Prisms over a graph, adversarial permutations and failure classification.

The prism of a graph under a permutation pi is two copies of the graph
joined by the matching v -- pi(v)'.  Copy vertices live at index v + n.

For a vertex x on no triangle, `adversary_permutation` builds the
permutation that fixes everything outside the closed neighborhood of x,
deranges that neighborhood, and (when it has three or more vertices)
contains no swap inside it.  `classify_failure` then pins down, for any
separable record, the concrete structural reason its image cannot be
effective under that permutation, and verifies the reason before
returning it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .domination import domination_number
from .graphs import (
    Graph,
    closed_neighborhood,
    is_triangle_free_vertex,
    iter_bits,
    mask_to_list,
    popcount,
)
from .separable import (
    SeparableSet,
    check_permutation,
    is_effective,
    permutation_image,
)

FAILURE_TAGS = (
    "Case1_1",
    "Case1_2",
    "Case2_1",
    "Case2_2",
    "Case2_mix_u",
    "Case2_mix_v",
    "Case3",
)


class CounterexampleError(RuntimeError):
    """A record behaved in a way the verified construction rules out.

    Raised loudly instead of guessing: either a separable record is
    effective under an adversary permutation, or a classification
    predicate failed to hold.  Both would falsify the machinery this
    package exists to confirm, so they must never be swallowed.
    """


@dataclass(frozen=True)
class FailureCase:
    """Why one separable record fails under an adversary permutation.

    `detail` names the vertices instantiating the contradiction (keys
    among "v", "u", "w", "z").
    """

    tag: str
    detail: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in FAILURE_TAGS:
            raise ValueError(f"unknown failure tag {self.tag!r}")


# ---------------------------------------------------------------------------
# Permutation helpers
# ---------------------------------------------------------------------------

def identity_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def inverse_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for v, w in enumerate(pi):
        inv[w] = v
    return tuple(inv)


def format_permutation(pi: Sequence[int]) -> str:
    """One-line image notation: "p0 p1 ... p(n-1)"."""
    return " ".join(str(v) for v in pi)


def parse_permutation(text: str, n: int) -> tuple[int, ...]:
    images = tuple(int(tok) for tok in text.split())
    check_permutation(images, n)
    return images


# ---------------------------------------------------------------------------
# Prism construction
# ---------------------------------------------------------------------------

def build_prism(g: Graph, pi: Sequence[int]) -> Graph:
    """The 2n-vertex prism: both copies of g plus the matching v -- pi(v)+n."""
    check_permutation(pi, g.n)
    n = g.n
    inv = inverse_permutation(pi)
    rows = [g.adj[v] | (1 << (n + pi[v])) for v in range(n)]
    rows += [(g.adj[w] << n) | (1 << inv[w]) for w in range(n)]
    return Graph(2 * n, rows)


def prism_closed_masks(g: Graph, pi: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Closed-neighborhood masks of the prism without building a Graph.

    Fast path for permutation sweeps; must agree with build_prism (tested).
    """
    n = g.n
    inv = inverse_permutation(pi)
    masks = [g.closed[v] | (1 << (n + pi[v])) for v in range(n)]
    masks += [(g.closed[w] << n) | (1 << inv[w]) for w in range(n)]
    return tuple(masks), (1 << (2 * n)) - 1


def prism_gamma(g: Graph, pi: Sequence[int]) -> int:
    """Exact domination number of the prism under pi."""
    return domination_number(build_prism(g, pi)).gamma


def copy_vertex_label(v: int, n: int) -> str:
    """Human label: base vertices print plain, copy vertices primed."""
    return f"{v - n}'" if v >= n else str(v)


# ---------------------------------------------------------------------------
# Adversary permutation
# ---------------------------------------------------------------------------

def adversary_permutation(g: Graph, x: int) -> tuple[int, ...]:
    """Canonical adversary for a triangle-free vertex x.

    Rotates the closed neighborhood of x in ascending order (one cycle:
    no fixed points, and no swaps once the neighborhood has 3+ vertices)
    and fixes every other vertex.
    """
    if not is_triangle_free_vertex(g, x):
        raise ValueError(f"vertex {x} is isolated or lies on a triangle")
    cycle = mask_to_list(closed_neighborhood(g, x))
    images = list(range(g.n))
    for i, v in enumerate(cycle):
        images[v] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def random_adversary_permutation(
    g: Graph, x: int, rng: random.Random
) -> tuple[int, ...]:
    """A random permutation satisfying the same three adversary conditions."""
    if not is_triangle_free_vertex(g, x):
        raise ValueError(f"vertex {x} is isolated or lies on a triangle")
    members = mask_to_list(closed_neighborhood(g, x))
    k = len(members)
    while True:
        shuffled = members[:]
        rng.shuffle(shuffled)
        target = dict(zip(members, shuffled))
        if any(target[v] == v for v in members):
            continue
        if k >= 3 and any(target[target[v]] == v for v in members):
            continue
        images = list(range(g.n))
        for v in members:
            images[v] = target[v]
        return tuple(images)


def adversary_condition_violations(
    g: Graph, x: int, pi: Sequence[int]
) -> list[str]:
    """Check the three adversary conditions from first principles.

    Returns human-readable violations; empty means pi conforms.  Kept
    separate from the constructors so tests do not trust them blindly.
    """
    violations = []
    check_permutation(pi, g.n)
    if not is_triangle_free_vertex(g, x):
        violations.append(f"vertex {x} is not a triangle-free vertex")
        return violations
    xmask = closed_neighborhood(g, x)
    members = mask_to_list(xmask)
    for v in range(g.n):
        if not xmask & (1 << v) and pi[v] != v:
            violations.append(f"vertex {v} outside the neighborhood is moved")
    for v in members:
        if pi[v] == v:
            violations.append(f"neighborhood vertex {v} is fixed")
        if not xmask & (1 << pi[v]):
            violations.append(f"neighborhood vertex {v} maps outside")
    if len(members) >= 3:
        for v in members:
            u = pi[v]
            if u != v and xmask & (1 << u) and pi[u] == v:
                violations.append(f"swap between neighborhood vertices {v} and {u}")
    return violations


# ---------------------------------------------------------------------------
# Failure classification
# ---------------------------------------------------------------------------

def _require(condition: bool, context: str) -> None:
    if not condition:
        raise CounterexampleError(f"classification predicate failed: {context}")


def _pair_conflicts(g: Graph, p: int, q: int) -> bool:
    """Two vertices that are adjacent or share a closed neighborhood."""
    return bool(g.adj[p] & (1 << q)) or bool(g.closed[p] & g.closed[q])


def classify_failure(
    g: Graph, sep: SeparableSet, pi: Sequence[int], x: int
) -> FailureCase:
    """Concrete reason sep's image is not effective under the adversary pi.

    Follows the case split on how the record meets the closed neighborhood
    of x, checks the chosen case's contradiction predicate, and raises
    CounterexampleError if the record turns out effective after all.
    """
    sep.check(g)
    bad = adversary_condition_violations(g, x, pi)
    if bad:
        raise ValueError(f"pi is not an adversary permutation for {x}: {bad[0]}")
    if is_effective(g, sep, pi) is not None:
        raise CounterexampleError(
            f"separable record {sep} is effective under adversary {tuple(pi)}: "
            "this contradicts the verified construction"
        )

    xmask = closed_neighborhood(g, x)
    inter = sep.dom_set & xmask
    size = popcount(inter)
    _require(size >= 1, "a dominating set must meet the closed neighborhood of x")
    image1 = permutation_image(pi, sep.part1)
    image2 = permutation_image(pi, sep.part2)
    image = image1 | image2

    if size == 1:
        v = inter.bit_length() - 1
        if sep.part1 & (1 << v):
            # lone meeting vertex sits in part1: part2 is fixed pointwise,
            # v drops out of the image, and nothing in the image of part2
            # can reach it
            _require(image2 == sep.part2, "part2 must be fixed pointwise")
            _require(not image & (1 << v), "v must leave the image")
            _require(not g.adj[v] & image2, "v must have no neighbor in the part2 image")
            return FailureCase("Case1_1", {"v": v})
        # lone meeting vertex sits in part2: its image w is uncovered ground
        # that part1 reaches, producing a cross edge between the part images
        w = pi[v]
        _require(bool(xmask & (1 << w)), "image of v must stay in the neighborhood")
        _require(not sep.dom_set & (1 << w), "image of v must land outside the set")
        candidates = sep.part1 & g.adj[w]
        _require(candidates != 0, "part1 must open-dominate the image of v")
        u = candidates & -candidates
        u = u.bit_length() - 1
        _require(pi[u] == u, "the dominator of w must be fixed by pi")
        _require(bool(image1 & (1 << u)) and bool(image2 & (1 << w)), "cross edge endpoints")
        return FailureCase("Case1_2", {"v": v, "w": w, "u": u})

    if size == 2:
        lo = inter & -inter
        a = lo.bit_length() - 1
        b = (inter ^ lo).bit_length() - 1
        in1 = sep.part1 & inter
        in2 = sep.part2 & inter
        if in2 == 0:
            # both meeting vertices in part1: their images stay inside the
            # neighborhood, where any two vertices are adjacent or share a
            # common neighbor, so the part1 image is no packing
            p, q = pi[a], pi[b]
            _require(p != q and bool(xmask & (1 << p)) and bool(xmask & (1 << q)),
                     "images must be distinct neighborhood vertices")
            _require(_pair_conflicts(g, p, q), "neighborhood pair must conflict")
            return FailureCase("Case2_1", {"u": a, "v": b})
        if in1 == 0:
            # both in part2: already a conflict in the base graph; a genuine
            # record can never reach here, the branch exists to fail loudly
            _require(_pair_conflicts(g, a, b), "neighborhood pair must conflict")
            return FailureCase("Case2_2", {"u": a, "v": b})
        u = (in1 & -in1).bit_length() - 1
        v = (in2 & -in2).bit_length() - 1
        if pi[u] != v:
            # u-branch: u's image z is uncovered neighborhood ground
            z = pi[u]
            tag = "Case2_mix_u"
        else:
            # pi maps u onto v; with no swap allowed, v's image z must be
            # uncovered neighborhood ground instead
            z = pi[v]
            tag = "Case2_mix_v"
            _require(z != u, "swap inside the neighborhood is forbidden")
        _require(bool(xmask & (1 << z)), "z must lie in the neighborhood")
        _require(not sep.dom_set & (1 << z), "z must lie outside the set")
        if z != x:
            # some fixed part1 vertex reaches z, so the prism edge z--w joins
            # two image vertices: both in the part1 image (u-branch, killing
            # independence) or one per part (v-branch, a cross edge)
            candidates = sep.part1 & g.adj[z]
            _require(candidates != 0, "part1 must open-dominate z")
            w = (candidates & -candidates).bit_length() - 1
            _require(pi[w] == w, "the dominator of z must be fixed by pi")
            z_side = image1 if tag == "Case2_mix_u" else image2
            _require(bool(z_side & (1 << z)) and bool(image1 & (1 << w)),
                     "edge endpoints must land in the part images")
            return FailureCase(tag, {"u": u, "v": v, "z": z, "w": w})
        # degenerate ground z = x: x is adjacent to every other neighborhood
        # vertex, so the two meeting images are themselves joined by a cross
        # edge between the part images
        other = pi[v] if tag == "Case2_mix_u" else pi[u]
        _require(bool(xmask & (1 << other)) and other != x,
                 "the other image must be a non-central neighborhood vertex")
        _require(bool(g.adj[x] & (1 << other)), "x must reach the other image")
        return FailureCase(tag, {"u": u, "v": v, "z": z})

    # three or more meeting vertices: at most one can sit in part2 (its part
    # is a packing in the base graph), so part1 meets the neighborhood twice
    # and the Case2_1 conflict applies to those images
    in1 = sep.part1 & inter
    _require(popcount(in1) >= 2, "part1 must meet the neighborhood at least twice")
    lo = in1 & -in1
    a = lo.bit_length() - 1
    b = ((in1 ^ lo) & -(in1 ^ lo)).bit_length() - 1
    p, q = pi[a], pi[b]
    _require(_pair_conflicts(g, p, q), "neighborhood pair must conflict")
    return FailureCase("Case3", {"u": a, "v": b})
