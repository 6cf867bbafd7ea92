"""Binomial representations, Kruskal-Katona bounds and rev-lex complexes.

Indexing convention: inside this module an f-vector ``(f_-1, f_0, f_1, ...)``
is read by subset size, so ``seq[k]`` counts faces with ``k`` vertices.  The
bound ``kk_bound(m, k)`` caps the number of (k+1)-sets all of whose k-subsets
lie among ``m`` given k-sets.
"""

from __future__ import annotations

from itertools import islice
from math import comb
from typing import Sequence

from .complex import SimplicialComplex, to_mask
from .errors import NotAnFVector


def binomial_rep(m: int, i: int) -> list[tuple[int, int]]:
    """Greedy ``i``-binomial representation as ``[(a_i, i), (a_{i-1}, i-1), ...]``."""
    if m < 1 or i < 1:
        raise ValueError("binomial_rep needs m >= 1 and i >= 1")
    terms = []
    k = i
    while m > 0 and k >= 1:
        a = k
        while comb(a + 1, k) <= m:
            a += 1
        terms.append((a, k))
        m -= comb(a, k)
        k -= 1
    return terms


def kk_bound(m: int, i: int) -> int:
    if m == 0:
        return 0
    return sum(comb(a, k + 1) for a, k in binomial_rep(m, i))


def first_violation(seq: Sequence[int]) -> tuple[int, int, int] | None:
    """First ``(k, value, bound)`` with ``seq[k+1] > kk_bound(seq[k], k)``."""
    for k in range(1, len(seq) - 1):
        bound = kk_bound(seq[k], k)
        if seq[k + 1] > bound:
            return k, seq[k + 1], bound
    return None


def is_f_vector(seq: Sequence[int]) -> bool:
    if not seq or seq[0] != 1:
        return False
    if any(x <= 0 for x in seq[1:]):
        return False
    return first_violation(seq) is None


def colex_subsets(k: int, n: int):
    """k-subsets of ``range(n)`` in squashed order: S < T iff max(S △ T) ∈ T."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in colex_subsets(k - 1, top):
            yield rest + (top,)


def revlex_complex(f: Sequence[int]) -> SimplicialComplex:
    """Each level holds the first f-many subsets of that size in squashed order."""
    if not is_f_vector(f):
        raise NotAnFVector(f"{tuple(f)} violates the Kruskal-Katona bounds")
    if len(f) == 1:
        return SimplicialComplex(0, (0,))
    n = f[1]
    faces = []
    for size in range(1, len(f)):
        faces.extend(to_mask(s) for s in islice(colex_subsets(size, n), f[size]))
    return SimplicialComplex.from_masks(n, faces)


def is_subcomplex(small: SimplicialComplex, big: SimplicialComplex) -> bool:
    """Label-wise inclusion of every face of ``small`` in ``big``."""
    big_facets = big.labelled_facets()
    return all(any(f <= g for g in big_facets) for f in small.labelled_facets())
