"""Closed-form linear-strand Betti numbers of H(m, k), no graph built.

beta_{i,i+1} counts the vertex subsets W inducing a complete bipartite join
(then the complement of the induced subgraph splits into exactly two
cliques, contributing one to H~_0; any missing cross edge reconnects it).
Such a W with r left and s right vertices, r + s = i + 1, is fixed by the
exact common intersection T of its right subsets: C(m, t) placements of T,
C(C(t, k), r) left families inside T, n_exact(m, s, m-k, t) right families
with intersection exactly T.  Everything reduces to binomials and n_exact;
this path shares nothing with the brute-force oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import binom, n_exact


@lru_cache(maxsize=None)
def _n_exact_cached(m: int, q: int, r: int, t: int) -> int:
    return n_exact(m, q, r, t)


def _check_params(m: int, k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m < 2 * k:
        raise ValueError(f"need m >= 2k, got m={m}, k={k}")


def betti_linear(m: int, k: int, i: int) -> int:
    """beta_{i, i+1}(R/I(H(m, k))) in exact integer arithmetic.

        sum over r + s = i + 1 (r, s >= 1) and t in [k, m-k] of
        C(C(t,k), r) * C(m, t) * n_exact(m, s, m-k, t)
    """
    _check_params(m, k)
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    total = 0
    for r in range(1, i + 1):
        s = i + 1 - r
        for t in range(k, m - k + 1):
            left_choices = binom(binom(t, k), r)
            if left_choices == 0:
                continue
            total += left_choices * binom(m, t) * _n_exact_cached(m, s, m - k, t)
    return total


@dataclass(frozen=True)
class LinearStrand:
    """Values beta_{i,i+1} for i = 1 .. i_max; support_end is the largest i
    with a nonzero value (0 when the strand is empty)."""

    m: int
    k: int
    values: tuple[int, ...]  # values[i - 1] = beta_{i, i+1}

    @property
    def i_max(self) -> int:
        return len(self.values)

    @property
    def support_end(self) -> int:
        last = 0
        for i, v in enumerate(self.values, start=1):
            if v != 0:
                last = i
        return last

    def value(self, i: int) -> int:
        if not 1 <= i <= self.i_max:
            raise ValueError(f"i must be in 1..{self.i_max}, got {i}")
        return self.values[i - 1]


def linear_strand(m: int, k: int, i_max: int) -> LinearStrand:
    _check_params(m, k)
    if i_max < 1:
        raise ValueError(f"i_max must be >= 1, got {i_max}")
    values = tuple(betti_linear(m, k, i) for i in range(1, i_max + 1))
    return LinearStrand(m, k, values)


def linear_strand_to_json(ls: LinearStrand) -> str:
    payload = {
        "m": ls.m,
        "k": ls.k,
        "support_end": ls.support_end,
        "values": [{"i": i, "value": str(v)}
                   for i, v in enumerate(ls.values, start=1)],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def linear_strand_to_csv(ls: LinearStrand) -> str:
    lines = ["i,betti"]
    for i, v in enumerate(ls.values, start=1):
        lines.append(f"{i},{v}")
    return "\n".join(lines) + "\n"
