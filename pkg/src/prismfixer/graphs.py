"""Immutable bitset graphs, vertex-set algebra, structural queries and I/O.

Vertices are dense 0-based integers.  A vertex set is a plain Python int
used as a bit vector: bit v set means vertex v is in the set.  Python ints
are arbitrary precision, so sets stay exact for any n; for n <= 64 they fit
a single machine word and all set operations are single instructions.

Graphs are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Malformed graph input; `offset` is the byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


# ---------------------------------------------------------------------------
# Vertex-set (bitmask) helpers
# ---------------------------------------------------------------------------

def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitmask adjacency.

    `adj[v]` is the open neighborhood of v as a bitmask; `closed[v]` adds v
    itself.  Construction validates symmetry, loop-freedom and vertex range.
    """

    __slots__ = ("n", "adj", "closed", "full")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions vertices >= {n}")
            if row & (1 << v):
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in iter_bits(row):
                if not adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self.closed = tuple(row | (1 << v) for v, row in enumerate(adj))
        self.full = full

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, ascending."""
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            for w in iter_bits(higher):
                out.append((u, u + 1 + w))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# Neighborhood operations
# ---------------------------------------------------------------------------

def open_neighborhood(g: Graph, v: int) -> int:
    """N(v): all vertices adjacent to v, excluding v itself."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> int:
    """N[v] = N(v) plus v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.closed[v]


def closed_neighborhood_set(g: Graph, vset: int) -> int:
    """Union of closed neighborhoods over the vertices of `vset`."""
    out = 0
    for v in iter_bits(vset):
        out |= g.closed[v]
    return out


def open_neighborhood_set(g: Graph, vset: int) -> int:
    """Union of open neighborhoods over the vertices of `vset`."""
    out = 0
    for v in iter_bits(vset):
        out |= g.adj[v]
    return out


def edges_between(g: Graph, xset: int, yset: int) -> list[tuple[int, int]]:
    """Edges with one end in `xset` and the other in `yset`, deduplicated.

    Returned as (u, v) pairs with u < v, ascending.  An edge lying inside
    the intersection appears once.
    """
    out = set()
    for u in iter_bits(xset):
        for w in iter_bits(g.adj[u] & yset):
            out.add((u, w) if u < w else (w, u))
    return sorted(out)


def induced_subgraph(g: Graph, vset: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by `vset`, plus the order-preserving index map.

    The map sends new index i to the original vertex `index_map[i]`.
    """
    keep = mask_to_list(vset)
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & vset):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(keep), rows), tuple(keep)


# ---------------------------------------------------------------------------
# Triangle-free vertices and girth
# ---------------------------------------------------------------------------

def is_triangle_free_vertex(g: Graph, x: int) -> bool:
    """True iff x is non-isolated and lies on no triangle.

    Equivalently the closed neighborhood of x induces a star centered at x.
    """
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    nbrs = g.adj[x]
    if not nbrs:
        return False
    for u in iter_bits(nbrs):
        if g.adj[u] & nbrs:
            return False
    return True


def triangle_free_vertices(g: Graph) -> int:
    """Bitmask of all vertices on no triangle (isolated vertices excluded)."""
    out = 0
    for x in range(g.n):
        if is_triangle_free_vertex(g, x):
            out |= 1 << x
    return out


def girth(g: Graph) -> float:
    """Length of a shortest cycle; math.inf for forests.

    BFS from every vertex; the first non-tree edge seen from each root
    bounds the shortest cycle through that root, and the minimum over all
    roots is exact.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # any cycle seen from u has length >= 2*dist[u]
            if 2 * dist[u] >= best:
                break
            for w in iter_bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def is_connected(g: Graph) -> bool:
    """Connectivity via bitmask BFS; the empty graph counts as connected."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full


# ---------------------------------------------------------------------------
# graph6 codec (single-byte size header, n <= 62)
# ---------------------------------------------------------------------------

_G6_MAX_N = 62


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (McKay's format, n <= 62)."""
    text = text.strip()
    if not text:
        raise GraphParseError("empty graph6 string")
    head = ord(text[0])
    if head == 126:
        raise GraphParseError("multi-byte graph6 size header not supported (n > 62)", 0)
    if not 63 <= head <= 125:
        raise GraphParseError(f"bad graph6 header byte {text[0]!r}", 0)
    n = head - 63
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = text[1:]
    if len(body) < need_bytes:
        raise GraphParseError(
            f"truncated graph6 body: need {need_bytes} bytes, got {len(body)}", 1 + len(body)
        )
    if len(body) > need_bytes:
        raise GraphParseError("trailing bytes after graph6 body", 1 + need_bytes)
    bits = 0
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphParseError(f"graph6 byte {ch!r} out of range", 1 + i)
        bits = (bits << 6) | val
    pad = 6 * need_bytes - need_bits
    if bits & ((1 << pad) - 1):
        raise GraphParseError("nonzero padding bits in graph6 body", len(text) - 1)
    bits >>= pad
    rows = [0] * n
    # bits arrive most-significant first in column order (0,1),(0,2),(1,2),...
    k = need_bits
    for v in range(1, n):
        for u in range(v):
            k -= 1
            if bits & (1 << k):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (n <= 62 tier)."""
    if g.n > _G6_MAX_N:
        raise ValueError(f"graph6 single-byte tier supports n <= {_G6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            bits = (bits << 1) | (1 if g.adj[u] & (1 << v) else 0)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    for shift in range(nbits - 6, -1, -6):
        out.append(chr(((bits >> shift) & 63) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse "n" followed by whitespace-separated "u v" pairs, 0-based.

    Duplicate edges collapse silently; loops are an error.
    """
    tokens = text.split()
    if not tokens:
        raise GraphParseError("edge list is empty, expected a vertex count")
    try:
        n = int(tokens[0])
    except ValueError:
        raise GraphParseError(f"bad vertex count {tokens[0]!r}") from None
    if n < 0:
        raise GraphParseError(f"negative vertex count {n}")
    rest = tokens[1:]
    if len(rest) % 2:
        raise GraphParseError("odd number of endpoint tokens in edge list")
    rows = [0] * n
    for i in range(0, len(rest), 2):
        try:
            u, v = int(rest[i]), int(rest[i + 1])
        except ValueError:
            raise GraphParseError(f"bad endpoint near {rest[i]!r} {rest[i+1]!r}") from None
        if u == v:
            raise GraphParseError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (line_number, stripped_line) for nonempty lines, 1-based."""
    for i, line in enumerate(lines, start=1):
        line = line.strip()
        if line:
            yield i, line
