"""Exhaustive enumeration of graphs and simplicial complexes up to isomorphism."""

from __future__ import annotations

from functools import lru_cache

from .canonical import bits, canonical_labeling, permute_mask
from .complex import SimplicialComplex, popcount
from .errors import CapacityExceeded
from .graphs import Graph

MAX_GRAPH_VERTICES = 9
MAX_COMPLEX_VERTICES = 6

# Unlabelled graph counts on n = 0..9 vertices.
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    seen: dict = {}
    for g in _graph_classes(n - 1):
        base = list(g.adj) + [0]
        for nbrs in range(1 << (n - 1)):
            adj = list(base)
            adj[n - 1] = nbrs
            for v in bits(nbrs):
                adj[v] |= 1 << (n - 1)
            h = Graph(n, tuple(adj))
            enc, pos = canonical_labeling(n, h.edge_masks(), 12)
            if enc not in seen:
                seen[enc] = h.relabel(pos)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int):
    """One canonically labelled graph per isomorphism class on ``n`` vertices."""
    if n < 0 or n > MAX_GRAPH_VERTICES:
        raise CapacityExceeded(f"graph enumeration supports n <= {MAX_GRAPH_VERTICES}")
    yield from _graph_classes(n)


def enumerate_complexes(n: int) -> list[SimplicialComplex]:
    """All complexes whose vertex set is exactly ``range(n)``, one per isomorphism class.

    Faces are added in nondecreasing size starting from {∅}; each class is
    kept once by canonical form.
    """
    if n < 0 or n > MAX_COMPLEX_VERTICES:
        raise CapacityExceeded(f"complex enumeration supports n <= {MAX_COMPLEX_VERTICES}")
    return [cx for cx in _all_complexes(n) if cx.n == n]


@lru_cache(maxsize=None)
def _all_complexes(n: int) -> tuple[SimplicialComplex, ...]:
    def key(faces):
        return canonical_labeling(n, tuple(sorted(faces)), 12)[0]

    start = frozenset({0})
    seen = {key(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for faces in frontier:
            top = max(popcount(f) for f in faces)
            for s in range(1, 1 << n):
                if s in faces or popcount(s) < top:
                    continue
                if all(s & ~(1 << v) in faces for v in bits(s)):
                    grown = faces | {s}
                    k = key(grown)
                    if k not in seen:
                        seen[k] = grown
                        nxt.append(grown)
        frontier = nxt
    out = []
    for k in sorted(seen):
        faces = seen[k]
        used = 0
        for f in faces:
            used |= f
        pos = [0] * n
        for i, v in enumerate(bits(used)):
            pos[v] = i
        masks = [permute_mask(f, pos) for f in faces if not f & ~used]
        out.append(SimplicialComplex.from_masks(popcount(used), masks))
    return tuple(out)


def fvectors_by_brute_force(n_max: int) -> set[tuple[int, ...]]:
    """f-vectors of every complex on at most ``n_max`` vertices."""
    out: set[tuple[int, ...]] = set()
    for cx in _all_complexes(n_max):
        out.add(cx.f)
    return out


def flag_complexes(n: int):
    """Independence complexes of all graphs on ``n`` vertices, paired with the graph."""
    from .graphs import independence_complex
    for g in enumerate_graphs(n):
        yield g, independence_complex(g)
