"""Small immutable graphs on bitset adjacency, plus the graph-theoretic
predicates the homological computations lean on.

Vertices are 0-based ids; vertex sets are int bitmasks (bit v = vertex v).
Everything is deterministic: ties break toward the lowest id, emitted
sequences are sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .combinatorics import subset_str
from .config import DEFAULT_GUARDS, Guards


class Side(Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class SubsetLabel:
    """Optional vertex decoration: which subset of [m] this vertex encodes."""

    mask: int
    m: int
    side: Side

    def __str__(self) -> str:
        return subset_str(self.mask)


def bit_indices(mask: int) -> tuple[int, ...]:
    """0-based set bit positions of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]  # adj[v] = bitmask of neighbours of v
    labels: tuple[SubsetLabel, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Graph: n must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("Graph: adj length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"Graph: adjacency of {v} mentions vertices >= n")
            if row >> v & 1:
                raise ValueError(f"Graph: self-loop at {v}")
        for v, row in enumerate(self.adj):
            for u in bit_indices(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"Graph: adjacency not symmetric at ({v},{u})")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("Graph: labels length must equal n")
            seen = set()
            for lab in self.labels:
                key = (lab.side, lab.mask)
                if key in seen:
                    raise ValueError(f"Graph: duplicate label {lab} on side {lab.side.value}")
                seen.add(key)

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1) << (v + 1)
            for u in bit_indices(higher):
                out.append((v, u))
        return tuple(sorted(out))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph(g.n, adj, g.labels)


def induced(g: Graph, w: int) -> Graph:
    """Induced subgraph on the vertices of mask w, re-indexed ascending."""
    if w & ~g.full_mask:
        raise ValueError("induced: w mentions vertices outside the graph")
    verts = bit_indices(w)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in bit_indices(g.adj[v] & w):
            row |= 1 << index[u]
        adj.append(row)
    labels = tuple(g.labels[v] for v in verts) if g.labels is not None else None
    return Graph(len(verts), tuple(adj), labels)


def neighborhood(g: Graph, x: int) -> int:
    """Open neighbourhood N(X) of a vertex mask, as a mask."""
    out = 0
    for v in bit_indices(x):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, x: int) -> int:
    return neighborhood(g, x) | x


def components(g: Graph) -> tuple[int, ...]:
    """Connected components as vertex masks, ordered by lowest contained id."""
    out = []
    remaining = g.full_mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bit_indices(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return tuple(out)


# ---------------------------------------------------------------------------
# chordality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Chordality:
    """Outcome of a chordality test, always carrying a checkable witness:
    a perfect elimination order when chordal, a chordless cycle of length
    >= 4 when not.
    """

    chordal: bool
    peo: tuple[int, ...] | None = None
    chordless_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def _mcs_order(g: Graph) -> list[int]:
    # Maximum cardinality search; ties go to the lowest id.
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best_v = -1
        best_w = -1
        for v in range(g.n):
            if not visited >> v & 1 and weight[v] > best_w:
                best_v, best_w = v, weight[v]
        visited |= 1 << best_v
        order.append(best_v)
        for u in bit_indices(g.adj[best_v] & ~visited):
            weight[u] += 1
    return order


def _verify_peo(g: Graph, peo) -> tuple[int, int, int] | None:
    """None if peo is a perfect elimination order, else a violating triple
    (v, f, w): f, w are later neighbours of v with f the earliest, f !~ w."""
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    for i, v in enumerate(peo):
        later = [u for u in bit_indices(g.adj[v]) if pos[u] > i]
        if len(later) < 2:
            continue
        f = min(later, key=lambda u: pos[u])
        for w in later:
            if w != f and not g.has_edge(f, w):
                return (v, f, w)
    return None


def _bfs_path(g: Graph, allowed: int, src: int, dst: int) -> list[int] | None:
    # Shortest src-dst path inside the allowed vertex mask; None if disconnected.
    parent = {src: -1}
    frontier = [src]
    seen = 1 << src
    while frontier:
        nxt = []
        for v in frontier:
            for u in bit_indices(g.adj[v] & allowed & ~seen):
                parent[u] = v
                seen |= 1 << u
                if u == dst:
                    path = [u]
                    while parent[path[-1]] != -1:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    return None


def _find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    # Any induced cycle of length >= 4 passes through a vertex v whose two
    # cycle neighbours x, y are nonadjacent, the rest of the cycle avoiding
    # N[v]; scanning all such triples is therefore complete.
    full = g.full_mask
    for v in range(g.n):
        nbrs = bit_indices(g.adj[v])
        for ai in range(len(nbrs)):
            for bi in range(ai + 1, len(nbrs)):
                x, y = nbrs[ai], nbrs[bi]
                if g.has_edge(x, y):
                    continue
                allowed = (full & ~(g.adj[v] | 1 << v)) | 1 << x | 1 << y
                path = _bfs_path(g, allowed, x, y)
                if path is not None:
                    return tuple([v] + path)
    return None


def is_chordal(g: Graph) -> Chordality:
    """Chordality via maximum cardinality search.  The returned order or
    cycle is a witness the caller can re-verify independently."""
    peo = tuple(reversed(_mcs_order(g)))
    if _verify_peo(g, peo) is None:
        return Chordality(True, peo=peo)
    cycle = _find_chordless_cycle(g)
    assert cycle is not None, "MCS order rejected but no chordless cycle found"
    return Chordality(False, chordless_cycle=cycle)


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g)).chordal


# ---------------------------------------------------------------------------
# induced matchings
# ---------------------------------------------------------------------------


def three_disjoint(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True iff edges e and f have disjoint endpoints and the induced
    subgraph on the four endpoints contains no edge besides e and f."""
    for a, b in (e, f):
        if not g.has_edge(a, b):
            raise ValueError(f"three_disjoint: ({a},{b}) is not an edge")
    a, b = e
    c, d = f
    if len({a, b, c, d}) != 4:
        return False
    cross = (g.has_edge(a, c) or g.has_edge(a, d)
             or g.has_edge(b, c) or g.has_edge(b, d))
    return not cross


class InducedMatching(NamedTuple):
    size: int
    edges: tuple[tuple[int, int], ...]


def induced_matching_number(g: Graph, guards: Guards = DEFAULT_GUARDS,
                            max_edges: int = 64) -> InducedMatching:
    """Exact maximum induced matching by branch and bound over the edge
    conflict graph (edges conflict when not pairwise 3-disjoint)."""
    edges = g.edges()
    ne = len(edges)
    if ne > max_edges:
        raise ValueError(
            f"induced_matching_number: {ne} edges exceeds the search cap "
            f"{max_edges}; pass a larger max_edges knowingly")
    conflict = [0] * ne
    for i in range(ne):
        for j in range(i + 1, ne):
            if not three_disjoint(g, edges[i], edges[j]):
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best = 0
    best_set = 0
    nodes = 0

    def expand(cand: int, size: int, chosen: int) -> None:
        nonlocal best, best_set, nodes
        if size > best:
            best, best_set = size, chosen
        while cand:
            if size + cand.bit_count() <= best:
                return
            nodes += 1
            guards.check("max_search_nodes", nodes, "induced_matching_number")
            low = cand & -cand
            cand ^= low
            expand(cand & ~conflict[low.bit_length() - 1], size + 1, chosen | low)

    expand((1 << ne) - 1, 0, 0)
    witness = tuple(edges[i] for i in bit_indices(best_set))
    return InducedMatching(best, witness)


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------


def to_dot(g: Graph, name: str = "G") -> str:
    """Deterministic DOT rendering; subset labels become node labels."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lab = g.labels[v]
            lines.append(f'  v{v} [label="{lab}", side="{lab.side.value}"];')
        else:
            lines.append(f"  v{v};")
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
