"""Binomial arithmetic, colex subset encoding, and the exact-intersection count.

Subsets of the ground set {1, ..., m} are encoded as bitmasks: bit i-1 set
means element i is present.  Colexicographic order on k-subsets coincides
with numeric order on these masks, which makes ranking, unranking, and
streaming enumeration cheap.  All arithmetic is exact (Python integers).
"""

from __future__ import annotations

import itertools
from math import comb

from .config import DEFAULT_GUARDS, Guards

MAX_GROUND = 62  # masks of subsets of [m] must fit comfortably in one word


def binom(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.

    Requires n >= 0; the caller never has a sensible negative n here.
    """
    if n < 0:
        raise ValueError(f"binom: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a subset mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def mask_of(elements) -> int:
    """Mask of a collection of 1-based elements; rejects out-of-range or dupes."""
    mask = 0
    for e in elements:
        if not 1 <= e <= MAX_GROUND:
            raise ValueError(f"element {e} outside 1..{MAX_GROUND}")
        bit = 1 << (e - 1)
        if mask & bit:
            raise ValueError(f"duplicate element {e}")
        mask |= bit
    return mask


def subset_str(mask: int) -> str:
    """Human form of a subset mask, e.g. {1,2,5}."""
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"


def _next_same_popcount(v: int) -> int:
    # Gosper's hack: next larger integer with the same number of set bits.
    c = v & -v
    r = v + c
    return r | ((v ^ r) >> (c.bit_length() + 1))


def k_subsets(m: int, k: int):
    """Yield all k-subsets of [m] as masks, in colex (= numeric) order."""
    if not 0 <= m <= MAX_GROUND:
        raise ValueError(f"k_subsets: need 0 <= m <= {MAX_GROUND}, got m={m}")
    if k < 0 or k > m:
        raise ValueError(f"k_subsets: need 0 <= k <= m, got k={k}, m={m}")
    if k == 0:
        yield 0
        return
    v = (1 << k) - 1
    top = 1 << m
    while v < top:
        yield v
        v = _next_same_popcount(v)


def colex_rank(mask: int) -> int:
    """Rank of a k-subset mask among all k-subsets in colex order (0-based)."""
    rank = 0
    j = 0
    m = mask
    while m:
        low = m & -m
        pos = low.bit_length() - 1  # 0-based position of this element
        j += 1
        rank += binom(pos, j)
        m ^= low
    return rank


def colex_unrank(rank: int, k: int) -> int:
    """Inverse of colex_rank: the k-subset mask with the given colex rank."""
    if rank < 0 or k < 0:
        raise ValueError("colex_unrank: rank and k must be nonnegative")
    mask = 0
    r = rank
    for j in range(k, 0, -1):
        # largest c with C(c, j) <= r, found by upward then binary search
        lo, hi = j - 1, j
        while binom(hi, j) <= r:
            hi *= 2
        while lo < hi - 1:
            mid = (lo + hi) // 2
            if binom(mid, j) <= r:
                lo = mid
            else:
                hi = mid
        mask |= 1 << lo
        r -= binom(lo, j)
    if r != 0:
        raise ValueError(f"colex_unrank: rank {rank} not reachable for k={k}")
    return mask


def n_exact(m: int, q: int, r: int, t: int) -> int:
    """Number of q-element families of r-subsets of [m] whose common
    intersection has size exactly t (the intersection fixed to a given
    t-set; the count does not depend on which one).

    Computed by inclusion-exclusion over forced extra common elements:
        sum_{j=0}^{r-t} (-1)^j C(m-t, j) C( C(m-t-j, r-t-j), q )
    """
    if q < 1:
        raise ValueError(f"n_exact: q must be >= 1, got {q}")
    if not 0 <= t <= r <= m:
        raise ValueError(f"n_exact: need 0 <= t <= r <= m, got t={t}, r={r}, m={m}")
    total = 0
    for j in range(r - t + 1):
        term = binom(m - t, j) * binom(binom(m - t - j, r - t - j), q)
        total += -term if j & 1 else term
    assert total >= 0, f"n_exact({m},{q},{r},{t}) came out negative: {total}"
    return total


def n_exact_oracle(m: int, q: int, r: int, t: int, guards: Guards = DEFAULT_GUARDS) -> int:
    """Brute-force check of n_exact: fix T = {1, ..., t} and enumerate every
    q-element family of r-subsets of [m], counting those whose intersection
    is exactly T.  Exponential; guarded by the total family count.
    """
    if q < 1:
        raise ValueError(f"n_exact_oracle: q must be >= 1, got {q}")
    if not 0 <= t <= r <= m:
        raise ValueError(f"n_exact_oracle: need 0 <= t <= r <= m, got t={t}, r={r}, m={m}")
    families = binom(binom(m, r), q)
    guards.check("max_search_nodes", families, f"n_exact_oracle({m},{q},{r},{t})")
    target = (1 << t) - 1
    count = 0
    universe = list(k_subsets(m, r))
    for family in itertools.combinations(universe, q):
        inter = family[0]
        for s in family[1:]:
            inter &= s
        if inter == target:
            count += 1
    return count
