"""The bipartite Kneser graph H(m, k) and the subset-indexed families used
as certificates: induced matchings, star and double-star covers, independent
dominating sets, and neighborhood-demand families.

Vertex layout of H(m, k): the left side holds all k-subsets of [m] at ids
0 .. C(m,k)-1 in colex order, the right side all (m-k)-subsets at ids
C(m,k) .. 2C(m,k)-1 in colex order.  {A, B} is an edge iff A is contained
in B.  For m = 2k this degenerates to a ladder: C(2k,k) disjoint rungs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combinatorics import (MAX_GROUND, binom, colex_rank, colex_unrank,
                            elements_of, k_subsets, mask_of, subset_str)
from .config import DEFAULT_GUARDS, Guards
from .graphs import Graph, Side, SubsetLabel

Edge = tuple[int, int]
EdgeSet = tuple[Edge, ...]


@dataclass(frozen=True)
class KneserGraph:
    m: int
    k: int
    graph: Graph

    @property
    def n_left(self) -> int:
        return binom(self.m, self.k)

    @property
    def is_ladder(self) -> bool:
        return self.m == 2 * self.k

    def left_id(self, a_mask: int) -> int:
        if a_mask.bit_count() != self.k or a_mask >> self.m:
            raise ValueError(f"{subset_str(a_mask)} is not a k-subset of [m]")
        return colex_rank(a_mask)

    def right_id(self, b_mask: int) -> int:
        if b_mask.bit_count() != self.m - self.k or b_mask >> self.m:
            raise ValueError(f"{subset_str(b_mask)} is not an (m-k)-subset of [m]")
        return self.n_left + colex_rank(b_mask)

    def subset_of(self, vid: int) -> int:
        if not 0 <= vid < 2 * self.n_left:
            raise ValueError(f"vertex id {vid} out of range")
        if vid < self.n_left:
            return colex_unrank(vid, self.k)
        return colex_unrank(vid - self.n_left, self.m - self.k)

    def side_of(self, vid: int) -> Side:
        return Side.LEFT if vid < self.n_left else Side.RIGHT

    @property
    def left_mask(self) -> int:
        return (1 << self.n_left) - 1

    @property
    def right_mask(self) -> int:
        return ((1 << self.n_left) - 1) << self.n_left


def build(m: int, k: int, guards: Guards = DEFAULT_GUARDS) -> KneserGraph:
    """Construct H(m, k).  Requires 1 <= k, 2k <= m <= 62."""
    if k < 1:
        raise ValueError(f"build: k must be >= 1, got {k}")
    if m < 2 * k:
        raise ValueError(f"build: need m >= 2k, got m={m}, k={k}")
    if m > MAX_GROUND:
        raise ValueError(f"build: m must be <= {MAX_GROUND}, got {m}")
    n_left = binom(m, k)
    guards.check("max_subsets", 2 * n_left, f"build H({m},{k})")
    full = (1 << m) - 1
    labels = []
    lefts = list(k_subsets(m, k))
    for a in lefts:
        labels.append(SubsetLabel(a, m, Side.LEFT))
    for b in k_subsets(m, m - k):
        labels.append(SubsetLabel(b, m, Side.RIGHT))
    edges = []
    for ra, a in enumerate(lefts):
        rest = elements_of(full & ~a)
        for extra in itertools.combinations(rest, m - 2 * k):
            b = a | mask_of(extra)
            edges.append((ra, n_left + colex_rank(b)))
    g = Graph.from_edges(2 * n_left, edges, labels)
    degree = binom(m - k, k)
    assert all(row.bit_count() == degree for row in g.adj), \
        f"H({m},{k}) is not {degree}-regular"
    return KneserGraph(m, k, g)


def _check_spread(kn: KneserGraph, s: int) -> None:
    if s >> kn.m:
        raise ValueError(f"s = {subset_str(s)} is not a subset of [m]")
    if s.bit_count() != kn.m - 2 * kn.k:
        raise ValueError(
            f"s must have exactly m - 2k = {kn.m - 2 * kn.k} elements, "
            f"got {subset_str(s)}")


def e_s_family(kn: KneserGraph, s: int) -> EdgeSet:
    """The induced matching {A, A u s} over all k-subsets A of [m] \\ s.

    s must be an (m-2k)-subset of [m]; the family has C(2k, k) edges.
    For m = 2k, s is empty and the family is the entire (ladder) edge set.
    """
    _check_spread(kn, s)
    avail = (1 << kn.m) - 1 & ~s
    edges = []
    for elems in itertools.combinations(elements_of(avail), kn.k):
        a = mask_of(elems)
        edges.append((kn.left_id(a), kn.right_id(a | s)))
    return tuple(sorted(edges))


def star_cover(kn: KneserGraph) -> tuple[EdgeSet, ...]:
    """One star per left vertex; the C(m,k) stars partition the edge set."""
    g = kn.graph
    out = []
    for ra in range(kn.n_left):
        member = tuple(sorted((ra, rb) for rb in _neighbor_ids(g, ra)))
        out.append(member)
    return tuple(out)


def _neighbor_ids(g: Graph, v: int):
    row = g.adj[v]
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def double_star_cover(kn: KneserGraph, t: int) -> tuple[EdgeSet, ...]:
    """For m = 2k+1: the C(2k,k) unions of the stars at A_i and B_i = A_i u {t},
    where A_i runs over the k-subsets avoiding t.  Their edge sets cover
    E(H); each edge is kept only in the first member that contains it.
    """
    if kn.m != 2 * kn.k + 1:
        raise ValueError(
            f"double_star_cover needs m = 2k + 1, got m={kn.m}, k={kn.k}")
    if not 1 <= t <= kn.m:
        raise ValueError(f"t must be an element of [m], got {t}")
    t_bit = 1 << (t - 1)
    g = kn.graph
    members = []
    seen = set()
    for a in k_subsets(kn.m, kn.k):
        if a & t_bit:
            continue
        ida = kn.left_id(a)
        idb = kn.right_id(a | t_bit)
        union = {(ida, rb) for rb in _neighbor_ids(g, ida)}
        union |= {(ra, idb) for ra in _neighbor_ids(g, idb)}
        member = tuple(e for e in sorted(union) if e not in seen)
        seen.update(member)
        members.append(member)
    return tuple(members)


def dominating_w(kn: KneserGraph, s: int | None = None, j: int | None = None) -> int:
    """An independent dominating set of size C(2k, k), as a vertex mask.

    For m > 2k: with T = s u {j} (s an (m-2k)-subset, j an element outside
    s), take the left k-subsets disjoint from T together with the right
    (m-k)-subsets containing T.  For m = 2k the construction degenerates and
    one full side is returned; s and j must be omitted.
    """
    if kn.is_ladder:
        if s not in (None, 0) or j is not None:
            raise ValueError("dominating_w: for m = 2k pass no s and no j")
        return kn.left_mask
    if s is None or j is None:
        raise ValueError("dominating_w: s and j are required for m > 2k")
    _check_spread(kn, s)
    if not 1 <= j <= kn.m:
        raise ValueError(f"j must be an element of [m], got {j}")
    if s >> (j - 1) & 1:
        raise ValueError(f"j = {j} must lie outside s = {subset_str(s)}")
    t_mask = s | 1 << (j - 1)
    out = 0
    for a in k_subsets(kn.m, kn.k):
        if a & t_mask == 0:
            out |= 1 << kn.left_id(a)
    for b in k_subsets(kn.m, kn.m - kn.k):
        if b & t_mask == t_mask:
            out |= 1 << kn.right_id(b)
    return out


def gamma_demand_family(kn: KneserGraph, q: int, s: int) -> tuple[int, tuple[int, ...]]:
    """The demand set D = {right B : Q subset of B} together with the witness
    family E = {Q u {i} : i in S} that dominates it.

    Q must have k-1 elements, S must have k+1 elements, Q and S disjoint.
    Returns (demand vertex mask, tuple of witness vertex ids).
    """
    if q >> kn.m or s >> kn.m:
        raise ValueError("q and s must be subsets of [m]")
    if q.bit_count() != kn.k - 1:
        raise ValueError(f"q must have k - 1 = {kn.k - 1} elements, got {subset_str(q)}")
    if s.bit_count() != kn.k + 1:
        raise ValueError(f"s must have k + 1 = {kn.k + 1} elements, got {subset_str(s)}")
    if q & s:
        raise ValueError(f"q = {subset_str(q)} and s = {subset_str(s)} must be disjoint")
    demand = 0
    for b in k_subsets(kn.m, kn.m - kn.k):
        if b & q == q:
            demand |= 1 << kn.right_id(b)
    witnesses = tuple(kn.left_id(q | 1 << (i - 1)) for i in elements_of(s))
    return demand, witnesses
