"""Brute-force graded Betti numbers of an edge ideal via Hochster's formula.

For a graph G on n vertices with edge ideal I(G), the (i, j) Betti number of
R/I(G) over a field of the given characteristic is the sum, over all vertex
subsets W of size j, of dim H~_{j-i-1} of the independence complex of G
restricted to W.  This module computes that sum directly: it enumerates
induced independence complexes, builds boundary matrices, and takes exact
ranks.  It shares no code path with the closed-form side, which is the point.

Conventions: the empty face is a face of every nonvoid complex; the complex
{ {} } has dim H~_{-1} = 1 and the void complex contributes nothing anywhere.
A slice whose induced subgraph has an isolated vertex is a cone, hence
acyclic, and is skipped without building matrices.

reduced_homology_dims returns a tuple h with h[c] = dim H~_{c-1}, i.e. the
entry at index 0 is the (-1)-dimensional homology.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb, gcd

from .combinatorics import colex_unrank, _next_same_popcount
from .config import DEFAULT_GUARDS, Guards
from .graphs import Graph, bit_indices

_CHUNK = 32768  # ranks per parallel work item; fixed so chunking never
                # depends on the worker count


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_char(field_char: int) -> None:
    if field_char != 0 and not _is_prime(field_char):
        raise ValueError(f"field characteristic must be 0 or a prime, got {field_char}")


# ---------------------------------------------------------------------------
# linear strand fast path: only H~_0, i.e. counting components
# ---------------------------------------------------------------------------


def _complement_rows(g: Graph) -> list[int]:
    full = g.full_mask
    return [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]


def _component_count(adjc, w: int) -> int:
    comps = 0
    rem = w
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adjc[low.bit_length() - 1]
                f ^= low
            frontier = nxt & w & ~comp
            comp |= frontier
        comps += 1
        rem &= ~comp
    return comps


def reduced_h0(g: Graph, w: int) -> int:
    """dim H~_0 of the independence complex slice on w: one less than the
    number of connected components of the complement of the induced
    subgraph on w."""
    if w == 0:
        raise ValueError("reduced_h0: w must be nonempty")
    if w & ~g.full_mask:
        raise ValueError("reduced_h0: w mentions vertices outside the graph")
    return _component_count(_complement_rows(g), w) - 1


def _strand_range_sum(adjc, start: int, stop: int, size: int) -> int:
    w = colex_unrank(start, size)
    total = 0
    for _ in range(stop - start):
        total += _component_count(adjc, w) - 1
        w = _next_same_popcount(w)
    return total


def linear_strand_oracle(g: Graph, i: int, threads: int = 1,
                         guards: Guards = DEFAULT_GUARDS) -> int:
    """beta_{i, i+1}(R/I(G)) by direct summation of dim H~_0 over all
    (i+1)-subsets of the vertices.  Deterministically chunked, so the result
    is identical for any thread count."""
    if i < 1:
        raise ValueError(f"linear_strand_oracle: i must be >= 1, got {i}")
    size = i + 1
    total_subsets = comb(g.n, size)
    if total_subsets == 0:
        return 0
    guards.check("max_subsets", total_subsets,
                 f"linear strand i={i} on a {g.n}-vertex graph")
    adjc = _complement_rows(g)
    if threads <= 1 or total_subsets <= _CHUNK:
        return _strand_range_sum(adjc, 0, total_subsets, size)
    starts = list(range(0, total_subsets, _CHUNK))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_strand_range_sum, adjc, s,
                               min(s + _CHUNK, total_subsets), size)
                   for s in starts]
        return sum(f.result() for f in futures)


# ---------------------------------------------------------------------------
# full simplicial homology of slices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexSlice:
    """Faces of the independence complex of host restricted to w, stratified
    by cardinality: strata[c] lists the c-element faces as sorted vertex
    masks.  strata[0] is the empty face; a void complex has no strata."""

    host: Graph
    w: int
    strata: tuple[tuple[int, ...], ...]

    def face_count(self) -> int:
        return sum(len(s) for s in self.strata)


def enumerate_faces(g: Graph, w: int, guards: Guards = DEFAULT_GUARDS) -> ComplexSlice:
    """All independent sets of the induced subgraph on w, as masks over the
    host's vertex ids.  Guarded by total face count."""
    if w & ~g.full_mask:
        raise ValueError("enumerate_faces: w mentions vertices outside the graph")
    adj = g.adj
    strata: list[list[int]] = [[0]]
    count = 1
    limit = guards.max_faces
    context = f"enumerate_faces on {w.bit_count()} vertices"

    def rec(cand: int, cur: int, size: int) -> None:
        nonlocal count
        while cand:
            low = cand & -cand
            cand ^= low
            f = cur | low
            count += 1
            if count > limit:
                guards.check("max_faces", count, context)
            if len(strata) <= size + 1:
                strata.append([])
            strata[size + 1].append(f)
            rec(cand & ~adj[low.bit_length() - 1], f, size + 1)

    rec(w, 0, 0)
    return ComplexSlice(g, w, tuple(tuple(sorted(s)) for s in strata))


def _boundary_columns(lower: tuple[int, ...], upper: tuple[int, ...]):
    """Sparse columns of the boundary map from the upper stratum to the
    lower one; entry signs alternate along each face's sorted vertices."""
    index = {mask: r for r, mask in enumerate(lower)}
    cols = []
    for f in upper:
        col = {}
        for pos, v in enumerate(bit_indices(f)):
            facet = f ^ (1 << v)
            col[index[facet]] = 1 if pos % 2 == 0 else -1
        cols.append(col)
    return cols


def _rank_gf2(cols) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in cols:
        v = 0
        for r in col:
            v |= 1 << r
        while v:
            b = v.bit_length() - 1
            p = pivots.get(b)
            if p is None:
                pivots[b] = v
                rank += 1
                break
            v ^= p
    return rank


def _rank_mod_p(cols, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        cur = {r: v % p for r, v in col.items() if v % p}
        while cur:
            low = max(cur)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = cur
                rank += 1
                break
            factor = cur[low] * pow(piv[low], p - 2, p) % p
            for r, v in piv.items():
                nv = (cur.get(r, 0) - factor * v) % p
                if nv:
                    cur[r] = nv
                else:
                    cur.pop(r, None)
        # a column that reduces to zero adds nothing
    return rank


def _rank_exact_q(cols) -> int:
    # Column reduction with integer arithmetic; scaling a column by a
    # nonzero rational and adding multiples of other columns preserve rank
    # over Q, and gcd normalization keeps the entries small.
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        cur = {r: v for r, v in col.items() if v}
        while cur:
            low = max(cur)
            piv = pivots.get(low)
            if piv is None:
                g = 0
                for v in cur.values():
                    g = gcd(g, v)
                if g > 1:
                    cur = {r: v // g for r, v in cur.items()}
                pivots[low] = cur
                rank += 1
                break
            a, b = cur[low], piv[low]
            g = gcd(a, b)
            ca, cb = b // g, a // g
            nxt = {r: ca * v for r, v in cur.items()}
            for r, v in piv.items():
                nv = nxt.get(r, 0) - cb * v
                if nv:
                    nxt[r] = nv
                else:
                    nxt.pop(r, None)
            cur = nxt
    return rank


def _rank(cols, field_char: int) -> int:
    if field_char == 2:
        return _rank_gf2(cols)
    if field_char == 0:
        return _rank_exact_q(cols)
    return _rank_mod_p(cols, field_char)


def reduced_homology_dims(sl: ComplexSlice, field_char: int = 2,
                          guards: Guards = DEFAULT_GUARDS) -> tuple[int, ...]:
    """Reduced homology dimensions of the slice over the given field.
    Returns h with h[c] = dim H~_{c-1}; empty tuple for the void complex."""
    _check_char(field_char)
    strata = sl.strata
    if not strata or not strata[0]:
        return ()
    depth = len(strata)
    ranks = [0] * (depth + 1)
    for c in range(1, depth):
        cells = len(strata[c]) * len(strata[c - 1])
        guards.check("max_matrix_cells", cells,
                     f"boundary matrix between strata {c} and {c - 1}")
        cols = _boundary_columns(strata[c - 1], strata[c])
        ranks[c] = _rank(cols, field_char)
    return tuple(len(strata[c]) - ranks[c] - ranks[c + 1] for c in range(depth))


# ---------------------------------------------------------------------------
# full Betti tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} of R/I(G); absent entries are zero."""

    n: int
    field_char: int
    entries: dict = field(compare=True)

    def __post_init__(self):
        for (i, j), v in self.entries.items():
            if i < 0 or j < i:
                raise ValueError(f"BettiTable: entry ({i},{j}) out of the valid range")
            if v <= 0:
                raise ValueError(f"BettiTable: entry ({i},{j}) must be positive, got {v}")


def _has_isolated(adj, w: int) -> bool:
    rem = w
    while rem:
        low = rem & -rem
        if adj[low.bit_length() - 1] & w == 0:
            return True
        rem ^= low
    return False


def full_betti_oracle(g: Graph, field_char: int = 2,
                      guards: Guards = DEFAULT_GUARDS) -> BettiTable:
    """The whole Betti table by Hochster's formula, every W enumerated.

    Refuses loudly (before doing real work) when 2^n or the face count of
    the full independence complex exceeds the guards."""
    _check_char(field_char)
    n = g.n
    guards.check("max_subsets", 1 << n, f"full Betti table on {n} vertices")
    # The full complex is the largest slice: every W strata is a subset of
    # its strata, and W = V itself is in the loop below.  Probing its face
    # count and boundary shapes first turns an infeasible run into a fast
    # refusal instead of a stuck loop.
    probe = enumerate_faces(g, g.full_mask, guards)
    for c in range(len(probe.strata) - 1):
        cells = len(probe.strata[c]) * len(probe.strata[c + 1])
        guards.check("max_matrix_cells", cells,
                     f"boundary map {c + 1} of the full independence complex")
    adj = g.adj
    entries: dict = {}
    for w in range(1 << n):
        if _has_isolated(adj, w):
            continue
        sl = enumerate_faces(g, w, guards)
        h = reduced_homology_dims(sl, field_char, guards)
        j = w.bit_count()
        for c, hd in enumerate(h):
            if hd:
                key = (j - c, j)
                entries[key] = entries.get(key, 0) + hd
    return BettiTable(n=n, field_char=field_char, entries=entries)


def pd_of(t: BettiTable) -> int:
    """Projective dimension: the largest homological degree with a nonzero entry."""
    return max((i for i, _ in t.entries), default=0)


def reg_of(t: BettiTable) -> int:
    """Castelnuovo-Mumford regularity: the largest j - i over nonzero entries."""
    return max((j - i for i, j in t.entries), default=0)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def betti_table_to_json(t: BettiTable) -> str:
    """Schema: {"char": c, "entries": [{"i": .., "j": .., "value": "<decimal>"}]}.
    Values are decimal strings; they routinely exceed 2^53."""
    payload = {
        "char": t.field_char,
        "entries": [
            {"i": i, "j": j, "value": str(v)}
            for (i, j), v in sorted(t.entries.items())
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def betti_table_from_json(text: str, n: int | None = None) -> BettiTable:
    data = json.loads(text)
    entries = {(e["i"], e["j"]): int(e["value"]) for e in data["entries"]}
    if n is None:
        n = max((j for _, j in entries), default=0)
    return BettiTable(n=n, field_char=data["char"], entries=entries)


def betti_table_triangle(t: BettiTable) -> str:
    """Betti diagram in the Macaulay2 layout: column i, row j - i."""
    pd = pd_of(t)
    reg = reg_of(t)
    cols = list(range(pd + 1))
    totals = [sum(v for (i, _), v in t.entries.items() if i == c) for c in cols]
    grid = []
    for d in range(reg + 1):
        grid.append([t.entries.get((c, c + d)) for c in cols])
    widths = []
    for c in cols:
        cells = [str(c), str(totals[c])] + [str(grid[d][c]) for d in range(reg + 1)
                                            if grid[d][c] is not None]
        widths.append(max(len(s) for s in cells))
    head_label = " " * 7
    lines = [head_label + " ".join(str(c).rjust(widths[c]) for c in cols)]
    lines.append("total: " + " ".join(str(totals[c]).rjust(widths[c]) for c in cols))
    for d in range(reg + 1):
        row = [("." if grid[d][c] is None else str(grid[d][c])).rjust(widths[c])
               for c in cols]
        lines.append(f"{d}: ".rjust(7) + " ".join(row))
    return "\n".join(lines) + "\n"
