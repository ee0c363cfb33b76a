"""Regularity and projective-dimension bounds with checkable certificates.

Bound values come from closed formulas; every structural claim feeding them
(induced matching, co-chordal cover, independent dominating set, demand
domination) is re-verified on the concrete graph before a certificate is
issued.  A Certificate cannot exist with a failed check: construction
raises instead.  Reports keep lower <= upper as a hard invariant and mark
exactness only with a stated justification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .combinatorics import binom, mask_of, subset_str
from .config import DEFAULT_GUARDS, GuardExceeded, Guards
from .graphs import (Graph, bit_indices, closed_neighborhood, induced,
                     induced_matching_number, is_cochordal, neighborhood,
                     three_disjoint)
from .kneser import (KneserGraph, build, double_star_cover, dominating_w,
                     e_s_family, gamma_demand_family, star_cover)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class CertificateError(ValueError):
    """A structural check failed while assembling a certificate."""


@dataclass(frozen=True)
class Certificate:
    """A verified structural witness.  checks maps check names to True;
    construction refuses anything unverified."""

    kind: str
    payload: dict
    checks: tuple[tuple[str, bool], ...]

    def __post_init__(self):
        failed = [name for name, ok in self.checks if not ok]
        if failed:
            raise CertificateError(
                f"certificate {self.kind} failed checks: {', '.join(failed)}")

    def to_obj(self) -> dict:
        return {
            "kind": self.kind,
            "payload": self.payload,
            "checks": {name: ok for name, ok in sorted(self.checks)},
        }


@dataclass(frozen=True)
class BoundReport:
    invariant: str
    params: dict
    lower: int
    upper: int
    exact: int | None = None
    certificates: tuple[Certificate, ...] = ()
    anchors: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(
                f"BoundReport {self.invariant}: lower {self.lower} exceeds "
                f"upper {self.upper}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(
                f"BoundReport {self.invariant}: exact {self.exact} outside "
                f"[{self.lower}, {self.upper}]")

    def to_json(self) -> str:
        payload = {
            "invariant": self.invariant,
            "params": self.params,
            "lower": str(self.lower),
            "upper": str(self.upper),
            "exact": None if self.exact is None else str(self.exact),
            "certificates": [c.to_obj() for c in self.certificates],
            "anchors": list(self.anchors),
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def _check_mk(m: int, k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m < 2 * k:
        raise ValueError(f"need m >= 2k, got m={m}, k={k}")


# ---------------------------------------------------------------------------
# formula-level bounds
# ---------------------------------------------------------------------------


def reg_power_bounds(m: int, k: int, p: int) -> BoundReport:
    """Bounds on reg(R / I(H(m,k))^p): the induced-matching lower bound and
    the star-cover upper bound both shift by 2(p - 1)."""
    _check_mk(m, k)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    lower = 2 * (p - 1) + binom(2 * k, k)
    upper = 2 * (p - 1) + binom(m, k)
    exact = None
    anchors = [
        "regularity lower bound via induced matching, shifted by 2(p-1)",
        "regularity upper bound via co-chordal star cover, shifted by 2(p-1)",
    ]
    if m in (2 * k, 2 * k + 1):
        exact = lower
        anchors.append(f"exact: the lower bound is attained for m = 2k{'' if m == 2 * k else ' + 1'}")
    return BoundReport("regularity_of_power", {"m": m, "k": k, "p": p},
                       lower, upper, exact, (), tuple(anchors))


def reg_bounds(m: int, k: int) -> BoundReport:
    """Bounds on reg(R / I(H(m,k)))."""
    _check_mk(m, k)
    lower = binom(2 * k, k)
    anchors = ["regularity lower bound via induced matching"]
    if m == 2 * k:
        upper = lower
        anchors.append("ladder graph: lower and upper bounds coincide")
    else:
        upper = min(binom(m, k), (2 * binom(m, k) + 1) // 3)
        anchors.append("regularity upper bound via co-chordal star cover")
        anchors.append("regularity upper bound via spanning-path edge count")
    exact = None
    if m in (2 * k, 2 * k + 1):
        exact = lower
        anchors.append(f"exact: the lower bound is attained for m = 2k{'' if m == 2 * k else ' + 1'}")
    return BoundReport("regularity", {"m": m, "k": k}, lower, upper, exact,
                       (), tuple(anchors))


def pd_bounds(m: int, k: int) -> BoundReport:
    """Bounds on pd(R / I(H(m,k))) over 2C(m,k) variables."""
    _check_mk(m, k)
    n = 2 * binom(m, k)
    lower = n - binom(2 * k, k)
    ratio = _ceil_div(binom(m, k), binom(m - k, k))
    upper = n - max(k + 1, ratio)
    anchors = [
        "projective-dimension lower bound via independent dominating set",
        "projective-dimension upper bound via neighborhood-demand covering",
        "projective-dimension upper bound via edge density (ceiling applied)",
    ]
    exact = None
    if lower == upper:
        exact = lower
        anchors.append("exact: lower and upper bounds coincide")
    return BoundReport("projective_dimension", {"m": m, "k": k}, lower, upper,
                       exact, (), tuple(anchors))


# ---------------------------------------------------------------------------
# exact search primitives
# ---------------------------------------------------------------------------


class SearchResult(NamedTuple):
    value: int
    witness: int  # vertex mask


def gamma_of(g: Graph, c: int, guards: Guards = DEFAULT_GUARDS) -> SearchResult:
    """Minimum size of a vertex set X with c contained in N(X), by iterative
    deepening; the witness mask attains it.  Raises if some demanded vertex
    has no neighbor at all."""
    if c & ~g.full_mask:
        raise ValueError("gamma_of: c mentions vertices outside the graph")
    if c == 0:
        return SearchResult(0, 0)
    adj = g.adj
    candidates = [v for v in range(g.n) if adj[v] & c]
    coverage = {v: adj[v] & c for v in candidates}
    for u in bit_indices(c):
        if not any(adj[u] >> v & 1 for v in candidates):
            raise ValueError(f"gamma_of: vertex {u} has no neighbor; demand not coverable")
    max_cover = max(cov.bit_count() for cov in coverage.values())
    nodes = 0

    def dfs(uncovered: int, depth: int, chosen: int) -> int | None:
        nonlocal nodes
        if uncovered == 0:
            return chosen
        if depth == 0 or _ceil_div(uncovered.bit_count(), max_cover) > depth:
            return None
        nodes += 1
        guards.check("max_search_nodes", nodes, "gamma_of")
        # branch on the demanded vertex with the fewest available coverers
        best_u, best_opts = -1, None
        for u in bit_indices(uncovered):
            opts = [v for v in candidates if adj[u] >> v & 1]
            if best_opts is None or len(opts) < len(best_opts):
                best_u, best_opts = u, opts
        for v in best_opts:
            got = dfs(uncovered & ~adj[v], depth - 1, chosen | 1 << v)
            if got is not None:
                return got
        return None

    lb = _ceil_div(c.bit_count(), max_cover)
    depth = lb
    while True:
        got = dfs(c, depth, 0)
        if got is not None:
            return SearchResult(got.bit_count(), got)
        depth += 1


def independent_domination_number(g: Graph, guards: Guards = DEFAULT_GUARDS) -> SearchResult:
    """i(G): minimum size of an independent dominating set (equivalently, the
    smallest maximal independent set), by iterative deepening."""
    if g.n == 0:
        return SearchResult(0, 0)
    adj = g.adj
    full = g.full_mask
    closed = [adj[v] | 1 << v for v in range(g.n)]
    max_closed = max(row.bit_count() for row in closed)
    nodes = 0

    def dfs(chosen: int, dominated: int, allowed: int, depth: int) -> int | None:
        nonlocal nodes
        if dominated == full:
            return chosen
        if depth == 0 or _ceil_div((full & ~dominated).bit_count(), max_closed) > depth:
            return None
        nodes += 1
        guards.check("max_search_nodes", nodes, "independent_domination_number")
        undom = full & ~dominated
        u = (undom & -undom).bit_length() - 1
        for v in bit_indices(closed[u] & allowed):
            got = dfs(chosen | 1 << v, dominated | closed[v],
                      allowed & ~closed[v], depth - 1)
            if got is not None:
                return got
        return None

    depth = _ceil_div(g.n, max_closed)
    while True:
        got = dfs(0, 0, full, depth)
        if got is not None:
            return SearchResult(got.bit_count(), got)
        depth += 1


def _maximal_independent_sets(g: Graph, guards: Guards) -> list[int]:
    # Bron-Kerbosch with pivoting on the complement adjacency.
    nadj = [g.full_mask & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            guards.check("max_search_nodes", len(out), "maximal independent set enumeration")
            return
        pux = p | x
        pivot = max(bit_indices(pux), key=lambda v: (nadj[v] & p).bit_count())
        for v in bit_indices(p & ~nadj[pivot]):
            bk(r | 1 << v, p & nadj[v], x & nadj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.full_mask, 0)
    return sorted(out)


def tau_of(g: Graph, guards: Guards = DEFAULT_GUARDS) -> int:
    """tau(G): the maximum over maximal independent sets C (of the graph with
    isolated vertices removed) of the covering number gamma_of(C)."""
    live = 0
    for v in range(g.n):
        if g.adj[v]:
            live |= 1 << v
    if live == 0:
        return 0
    g0 = induced(g, live)
    best = 0
    for c in _maximal_independent_sets(g0, guards):
        best = max(best, gamma_of(g0, c, guards).value)
    return best


# ---------------------------------------------------------------------------
# certified reports
# ---------------------------------------------------------------------------


def _edge_payload(kn: KneserGraph, edges) -> list:
    out = []
    for u, v in sorted(edges):
        out.append({
            "ids": [u, v],
            "subsets": [subset_str(kn.subset_of(u)), subset_str(kn.subset_of(v))],
        })
    return out


def _default_spread(m: int, k: int) -> int:
    return (1 << (m - 2 * k)) - 1  # the colex-first (m-2k)-subset {1, ..., m-2k}


def certify_induced_matching(m: int, k: int, s: int | None = None,
                             guards: Guards = DEFAULT_GUARDS,
                             max_edges: int = 64) -> BoundReport:
    """Certified induced matching of size C(2k,k), plus the exact induced
    matching number when the exhaustive search fits the guards."""
    _check_mk(m, k)
    kn = build(m, k, guards)
    g = kn.graph
    if s is None:
        s = _default_spread(m, k)
    fam = e_s_family(kn, s)
    expected = binom(2 * k, k)
    pairwise = all(three_disjoint(g, fam[a], fam[b])
                   for a in range(len(fam)) for b in range(a + 1, len(fam)))
    member_set = set(fam)
    maximal = all(
        any(not three_disjoint(g, e, f) for f in fam)
        for e in g.edges() if e not in member_set)
    cert = Certificate(
        kind="induced_matching",
        payload={
            "s": subset_str(s),
            "size": len(fam),
            "edges": _edge_payload(kn, fam),
        },
        checks=(
            ("size_is_central_binomial", len(fam) == expected),
            ("all_edges_present", all(g.has_edge(u, v) for u, v in fam)),
            ("pairwise_three_disjoint", pairwise),
            ("maximal", maximal),
        ),
    )
    exact = None
    anchors = ["induced matching certified edge by edge",
               "upper bound: induced matchings never exceed the regularity"]
    try:
        found = induced_matching_number(g, guards, max_edges)
        exact = found.size
        anchors.append("exact value by exhaustive branch-and-bound search")
    except (GuardExceeded, ValueError):
        anchors.append("exhaustive search skipped: outside the configured guards")
    reg_upper = reg_bounds(m, k).upper
    return BoundReport("induced_matching", {"m": m, "k": k},
                       lower=expected, upper=reg_upper, exact=exact,
                       certificates=(cert,), anchors=tuple(anchors))


STAR_VARIANT = "stars"
DOUBLE_STAR_VARIANT = "double_stars"


def _subgraph_on_support(g: Graph, edges) -> Graph:
    support = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(support)}
    return Graph.from_edges(len(support), [(index[u], index[v]) for u, v in edges])


def certify_cochordal_cover(m: int, k: int, variant: str = STAR_VARIANT,
                            t: int | None = None,
                            guards: Guards = DEFAULT_GUARDS) -> BoundReport:
    """Certified cover of the edge set by co-chordal subgraphs; the member
    count upper-bounds the regularity."""
    _check_mk(m, k)
    kn = build(m, k, guards)
    g = kn.graph
    if variant == STAR_VARIANT:
        members = star_cover(kn)
        kind = "star_cover"
    elif variant == DOUBLE_STAR_VARIANT:
        if t is None:
            t = m
        members = double_star_cover(kn, t)
        kind = "double_star_cover"
    else:
        raise ValueError(f"unknown cover variant {variant!r}")
    all_edges = set(g.edges())
    covered = set()
    for member in members:
        covered.update(member)
    cochordal = all(is_cochordal(_subgraph_on_support(g, member))
                    for member in members if member)
    cert = Certificate(
        kind=kind,
        payload={
            "members": len(members),
            "member_sizes": [len(member) for member in members],
            **({"t": t} if variant == DOUBLE_STAR_VARIANT else {}),
        },
        checks=(
            ("covers_all_edges", covered == all_edges),
            ("members_cochordal", cochordal),
        ),
    )
    lower = binom(2 * k, k)
    upper = len(members)
    exact = lower if lower == upper else None
    anchors = [
        "regularity lower bound via induced matching",
        "regularity upper bound via certified co-chordal edge cover",
    ]
    if exact is not None:
        anchors.append("exact: certified lower and upper bounds coincide")
    return BoundReport("regularity", {"m": m, "k": k, "cover": variant},
                       lower, upper, exact, (cert,), tuple(anchors))


def certify_domination(m: int, k: int, s: int | None = None,
                       j: int | None = None,
                       guards: Guards = DEFAULT_GUARDS) -> BoundReport:
    """Certified independent dominating set of size C(2k,k); the exact
    independent domination number is attached when the search completes."""
    _check_mk(m, k)
    kn = build(m, k, guards)
    g = kn.graph
    if kn.is_ladder:
        w = dominating_w(kn)
        params_extra = {}
    else:
        if s is None:
            s = _default_spread(m, k)
        if j is None:
            j = min(e for e in range(1, m + 1) if not s >> (e - 1) & 1)
        w = dominating_w(kn, s, j)
        params_extra = {"s": subset_str(s), "j": j}
    independent = all(g.adj[v] & w == 0 for v in bit_indices(w))
    dominating = closed_neighborhood(g, w) == g.full_mask
    cert = Certificate(
        kind="independent_dominating_set",
        payload={
            "size": w.bit_count(),
            "vertices": [
                {"id": v, "subset": subset_str(kn.subset_of(v)),
                 "side": kn.side_of(v).value}
                for v in bit_indices(w)
            ],
            **params_extra,
        },
        checks=(
            ("independent", independent),
            ("dominating", dominating),
            ("size_is_central_binomial", w.bit_count() == binom(2 * k, k)),
        ),
    )
    n = g.n
    max_closed = max(row.bit_count() + 1 for row in g.adj)
    lower = _ceil_div(n, max_closed)
    upper = w.bit_count()
    exact = None
    anchors = [
        "domination lower bound via closed neighborhood size",
        "independent domination upper bound via certified set",
    ]
    try:
        found = independent_domination_number(g, guards)
        exact = found.value
        anchors.append("exact value by exhaustive iterative-deepening search")
    except GuardExceeded:
        anchors.append("exhaustive search skipped: outside the configured guards")
    return BoundReport("independent_domination", {"m": m, "k": k, **params_extra},
                       lower, upper, exact, (cert,), tuple(anchors))


def certify_gamma_demand(m: int, k: int, q: int | None = None,
                         s: int | None = None,
                         guards: Guards = DEFAULT_GUARDS) -> BoundReport:
    """Certified demand family: gamma_of(D) for the right-side demand D of
    supersets of a (k-1)-set Q, with the (k+1)-element witness family."""
    _check_mk(m, k)
    kn = build(m, k, guards)
    g = kn.graph
    if q is None:
        q = (1 << (k - 1)) - 1
    if s is None:
        rest = [e for e in range(1, m + 1) if not q >> (e - 1) & 1]
        s = mask_of(rest[:k + 1])
    demand, witnesses = gamma_demand_family(kn, q, s)
    witness_mask = 0
    for v in witnesses:
        witness_mask |= 1 << v
    witness_covers = demand & ~neighborhood(g, witness_mask) == 0
    expected_demand = binom(m - k + 1, m - 2 * k + 1)
    result = gamma_of(g, demand, guards)
    cert = Certificate(
        kind="gamma_demand_family",
        payload={
            "q": subset_str(q),
            "s": subset_str(s),
            "demand_size": demand.bit_count(),
            "witness": [subset_str(kn.subset_of(v)) for v in witnesses],
            "gamma": result.value,
            "gamma_witness": [subset_str(kn.subset_of(v))
                              for v in bit_indices(result.witness)],
        },
        checks=(
            ("demand_size_expected", demand.bit_count() == expected_demand),
            ("witness_family_covers_demand", witness_covers),
            ("witness_size_k_plus_1", len(witnesses) == k + 1),
            ("gamma_not_above_witness_size", result.value <= k + 1),
        ),
    )
    anchors = [
        "covering number of the demand family by exhaustive search",
        "upper witness: the (k+1)-element family covers the demand",
    ]
    return BoundReport("gamma_of_demand", {"m": m, "k": k,
                                           "q": subset_str(q), "s": subset_str(s)},
                       lower=result.value, upper=result.value, exact=result.value,
                       certificates=(cert,), anchors=tuple(anchors))
