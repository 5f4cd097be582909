#!/usr/bin/env python3
"""Regenerate the graph6 corpus files under corpus/.

Sources:
  * networkx's atlas gives every graph on up to 7 vertices (known class
    counts 1, 2, 4, 11, 34, 156, 1044 for n = 1..7).
  * Connected 8-vertex graphs are produced here by one-vertex augmentation
    of all 7-vertex graphs followed by canonical-form deduplication, and
    the result must match the known class count 11117.
  * A handful of named graphs up to 10 vertices seasons the mixed corpus.

The canonical form is a color-refinement-pruned minimum adjacency string;
it is validated end to end by regenerating all 7-vertex graphs from the
6-vertex atlas tier and comparing against the atlas itself.  Every written
line is also cross-checked against networkx's graph6 encoder.

Usage: python tools/make_corpus.py [--out DIR] [--skip-n8]
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from prismfixer.graphs import Graph, is_connected, parse_graph6, to_graph6

KNOWN_ALL = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


# ---------------------------------------------------------------------------
# Canonical form: iterated color refinement, then min over the orderings
# consistent with the refined cells
# ---------------------------------------------------------------------------

def _refine_colors(n: int, nbrs: list[list[int]]) -> list[int]:
    colors = [len(nbrs[v]) for v in range(n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_key(g: Graph) -> tuple[int, int]:
    """(n, minimum upper-triangle adjacency bits) over refined labelings."""
    n = g.n
    if n <= 1:
        return n, 0
    nbrs = [[u for u in range(n) if g.adj[v] >> u & 1] for v in range(n)]
    colors = _refine_colors(n, nbrs)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    edges = g.edges()
    pairpos = [[0] * n for _ in range(n)]
    for v in range(1, n):
        for u in range(v):
            pairpos[u][v] = pairpos[v][u] = v * (v - 1) // 2 + u
    best = None
    position = [0] * n
    for arrangement in itertools.product(
        *(itertools.permutations(cell) for cell in ordered_cells)
    ):
        idx = 0
        for cell in arrangement:
            for v in cell:
                position[v] = idx
                idx += 1
        key = 0
        for u, v in edges:
            key |= 1 << pairpos[position[u]][position[v]]
        if best is None or key < best:
            best = key
    return n, best


def canonical_graph6(g: Graph) -> str:
    """graph6 of the canonically labeled copy of g."""
    n, key = canonical_key(g)
    rows = [0] * n
    for v in range(1, n):
        for u in range(v):
            if key >> (v * (v - 1) // 2 + u) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return to_graph6(Graph(n, rows))


# ---------------------------------------------------------------------------
# Atlas ingestion and augmentation
# ---------------------------------------------------------------------------

def atlas_by_n() -> dict[int, list[Graph]]:
    out: dict[int, list[Graph]] = {}
    for ag in nx.graph_atlas_g():
        n = ag.number_of_nodes()
        g = Graph.from_edges(n, [tuple(e) for e in ag.edges()])
        out.setdefault(n, []).append(g)
    for n, want in KNOWN_ALL.items():
        if n <= 7 and len(out.get(n, [])) != want:
            raise AssertionError(f"atlas has {len(out.get(n, []))} graphs on {n}, want {want}")
    return out


def augment_classes(
    parents: list[Graph], nonempty_only: bool, connected_only: bool
) -> dict[tuple[int, int], Graph]:
    """One-vertex extensions of `parents`, deduplicated by canonical key."""
    seen: dict[tuple[int, int], Graph] = {}
    for parent in parents:
        n = parent.n
        start = 1 if nonempty_only else 0
        for s in range(start, 1 << n):
            rows = list(parent.adj) + [s]
            for u in range(n):
                if s >> u & 1:
                    rows[u] |= 1 << n
            child = Graph(n + 1, rows)
            if connected_only and not is_connected(child):
                continue
            key = canonical_key(child)
            if key not in seen:
                seen[key] = child
    return seen


def validate_canonicalizer(atlas: dict[int, list[Graph]]) -> None:
    """Regenerate the 7-vertex tier from the 6-vertex one and compare."""
    t0 = time.time()
    regen = augment_classes(atlas[6], nonempty_only=False, connected_only=False)
    atlas_keys = {canonical_key(g) for g in atlas[7]}
    if len(atlas_keys) != KNOWN_ALL[7]:
        raise AssertionError("canonical keys collide on the 7-vertex atlas tier")
    if set(regen) != atlas_keys:
        raise AssertionError("augmented 7-vertex classes do not match the atlas")
    print(f"canonicalizer validated on the 6->7 tier ({time.time() - t0:.1f}s)")


# ---------------------------------------------------------------------------
# Named graphs (> 7 vertices, or classic shapes worth pinning by name)
# ---------------------------------------------------------------------------

def named_graphs() -> dict[str, Graph]:
    def from_nx(ng) -> Graph:
        ng = nx.convert_node_labels_to_integers(ng, ordering="sorted")
        return Graph.from_edges(ng.number_of_nodes(), [tuple(e) for e in ng.edges()])

    return {
        "petersen": from_nx(nx.petersen_graph()),
        "cube_q3": from_nx(nx.hypercube_graph(3)),
        "cycle_8": from_nx(nx.cycle_graph(8)),
        "cycle_9": from_nx(nx.cycle_graph(9)),
        "cycle_10": from_nx(nx.cycle_graph(10)),
        "path_9": from_nx(nx.path_graph(9)),
        "path_10": from_nx(nx.path_graph(10)),
        "grid_3x3": from_nx(nx.grid_2d_graph(3, 3)),
        "star_1_9": from_nx(nx.star_graph(9)),
        "complete_bipartite_5_5": from_nx(nx.complete_bipartite_graph(5, 5)),
        "complete_bipartite_3_4": from_nx(nx.complete_bipartite_graph(3, 4)),
    }


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def crosscheck_graph6(line: str) -> None:
    ours = parse_graph6(line)
    theirs = nx.from_graph6_bytes(line.encode())
    if ours.n != theirs.number_of_nodes() or sorted(ours.edges()) != sorted(
        tuple(sorted(e)) for e in theirs.edges()
    ):
        raise AssertionError(f"graph6 disagreement with networkx on {line!r}")


def write_corpus(path: Path, graphs: list[Graph]) -> None:
    lines = sorted(to_graph6(g) for g in graphs)
    if len(set(lines)) != len(lines):
        raise AssertionError(f"{path.name}: duplicate graph6 lines")
    for line in lines:
        crosscheck_graph6(line)
    path.write_text("".join(line + "\n" for line in lines), encoding="ascii")
    print(f"wrote {path} ({len(lines)} graphs)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=None, help="output directory (default corpus/)")
    parser.add_argument("--skip-n8", action="store_true",
                        help="skip the slow connected 8-vertex tier")
    args = parser.parse_args()
    out_dir = Path(args.out) if args.out else Path(__file__).resolve().parent.parent / "corpus"
    out_dir.mkdir(parents=True, exist_ok=True)

    atlas = atlas_by_n()
    validate_canonicalizer(atlas)

    small = [g for n in range(1, 7) for g in atlas[n]]
    write_corpus(out_dir / "graphs_n1_6.g6", small)
    write_corpus(out_dir / "graphs_n7.g6", atlas[7])

    connected = [g for n in range(2, 8) for g in atlas[n] if is_connected(g)]
    for n in range(2, 8):
        have = sum(1 for g in atlas[n] if is_connected(g))
        if have != KNOWN_CONNECTED[n]:
            raise AssertionError(f"connected count on {n} vertices: {have}")

    if not args.skip_n8:
        t0 = time.time()
        classes = augment_classes(atlas[7], nonempty_only=True, connected_only=True)
        print(f"augmented 7->8 connected tier in {time.time() - t0:.1f}s")
        if len(classes) != KNOWN_CONNECTED[8]:
            raise AssertionError(
                f"connected 8-vertex classes: got {len(classes)}, want {KNOWN_CONNECTED[8]}"
            )
        eight = [parse_graph6(canonical_graph6(g)) for g in classes.values()]
        connected += eight
    write_corpus(out_dir / "connected_n2_8.g6", connected)

    write_corpus(out_dir / "named.g6", list(named_graphs().values()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
