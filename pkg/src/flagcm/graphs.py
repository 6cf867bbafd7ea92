"""Simple graphs on ``range(n)`` with adjacency bit masks.

Covers the graph side of the flag dictionary: independence complexes,
minimal vertex covers, perfect matchings, right edges and the ordered
right-edge matchings used by the structure theorem for complexes on 2d
vertices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import networkx as nx

from .canonical import bits, canonical_labeling
from .complex import SimplicialComplex, empty_complex, popcount
from .errors import CapacityExceeded, NotAnEdge

Matching = list[tuple[int, int]]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n > 63:
            raise CapacityExceeded(f"{n} vertices exceeds the 63-vertex capacity")
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {{{a},{b}}} outside range({n})")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in bits(self.adj[a]) if a < b]

    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sorted((1 << a) | (1 << b) for a, b in self.edges()))

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v] == 0]

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(len(keep), [(pos[a], pos[b]) for a, b in self.edges()
                                            if a in pos and b in pos])

    def relabel(self, perm: Sequence[int]) -> Graph:
        return Graph.from_edges(self.n, [(perm[a], perm[b]) for a, b in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def canonical_graph(g: Graph, limit: int = 12) -> tuple[Graph, tuple[int, tuple[int, ...]]]:
    """Canonically relabelled copy of ``g`` together with its class key."""
    enc, pos = canonical_labeling(g.n, g.edge_masks(), limit)
    return g.relabel(pos) if g.n else g, (g.n, enc)


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.empty_graph(g.n)
    out.add_edges_from(g.edges())
    return out


def graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()


def from_graph6(text: str) -> Graph:
    h = nx.from_graph6_bytes(text.strip().encode())
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def graph_key(g: Graph, limit: int = 12) -> tuple[int, tuple[int, ...]]:
    return g.n, canonical_labeling(g.n, g.edge_masks(), limit)[0]


# -- neighborhoods -------------------------------------------------------------

def neighborhoods(g: Graph, v: int) -> tuple[int, int]:
    """Open and closed neighborhood masks of ``v``."""
    return g.adj[v], g.adj[v] | 1 << v


def neighborhood_of_set(g: Graph, w: int) -> int:
    out = 0
    for v in bits(w):
        out |= g.adj[v]
    return out & ~w


# -- independent sets and covers -----------------------------------------------

def maximal_independent_sets(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    free = [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: popcount(p & free[u]))
        for v in bits(p & ~free[pivot]):
            expand(r | 1 << v, p & free[v], x & free[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return sorted(out)


def independence_complex(g: Graph) -> SimplicialComplex:
    if g.n == 0:
        return empty_complex()
    return SimplicialComplex.from_masks(g.n, maximal_independent_sets(g))


def vertex_covers(g: Graph) -> list[int]:
    """Minimal vertex covers: complements of the maximal independent sets."""
    full = (1 << g.n) - 1
    return sorted(full & ~s for s in maximal_independent_sets(g))


def covering_number(g: Graph) -> int:
    return min(popcount(c) for c in vertex_covers(g))


def is_unmixed(g: Graph) -> bool:
    return len({popcount(c) for c in vertex_covers(g)}) == 1


# -- matchings -------------------------------------------------------------------

def _matchings(g: Graph, allowed: list[int] | None = None):
    adj = list(allowed) if allowed is not None else list(g.adj)
    full = (1 << g.n) - 1
    pairs: Matching = []

    def rec(left: int):
        if left == 0:
            yield list(pairs)
            return
        v = (left & -left).bit_length() - 1
        for w in bits(adj[v] & left):
            pairs.append((v, w))
            yield from rec(left & ~(1 << v) & ~(1 << w))
            pairs.pop()

    if g.n % 2 == 0:
        yield from rec(full)


def perfect_matching(g: Graph) -> Matching | None:
    return next(_matchings(g), None)


def count_perfect_matchings(g: Graph, stop_at: int | None = None) -> int:
    count = 0
    for _ in _matchings(g):
        count += 1
        if stop_at is not None and count >= stop_at:
            break
    return count


def has_unique_perfect_matching(g: Graph) -> bool:
    return count_perfect_matchings(g, stop_at=2) == 1


# -- right edges ---------------------------------------------------------------------

def is_right_edge(g: Graph, a: int, b: int) -> bool:
    """Neighbor-pair rule: every a'~a, b'~b (other than b, a) satisfy a'≠b' and a'~b'."""
    if not g.has_edge(a, b):
        raise NotAnEdge(f"{{{a},{b}}} is not an edge")
    for x in bits(g.adj[a] & ~(1 << b)):
        others = g.adj[b] & ~(1 << a)
        if others >> x & 1 or others & ~g.adj[x]:
            return False
    return True


def is_right_edge_by_covers(g: Graph, a: int, b: int) -> bool:
    if not g.has_edge(a, b):
        raise NotAnEdge(f"{{{a},{b}}} is not an edge")
    e = (1 << a) | (1 << b)
    return all(popcount(c & e) == 1 for c in vertex_covers(g))


def right_edges(g: Graph) -> list[tuple[int, int]]:
    return [(a, b) for a, b in g.edges() if is_right_edge(g, a, b)]


def weak_square_condition(g: Graph) -> bool:
    covered = 0
    for a, b in right_edges(g):
        covered |= (1 << a) | (1 << b)
    return covered == (1 << g.n) - 1


def _topological_order(d: int, after: list[int]) -> list[int] | None:
    indeg = [0] * d
    for a in range(d):
        for b in bits(after[a]):
            indeg[b] += 1
    ready = [a for a in range(d) if indeg[a] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        a = heapq.heappop(ready)
        order.append(a)
        for b in bits(after[a]):
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(ready, b)
    return order if len(order) == d else None


def ordered_right_matching(g: Graph) -> Matching | None:
    """Perfect matching of right edges ``(u_i, v_i)`` with the u-side independent
    and ``u_i ~ v_j`` only when ``i <= j``; ``None`` when no such matching exists.
    """
    if g.n % 2:
        return None
    allowed = [0] * g.n
    for a, b in right_edges(g):
        allowed[a] |= 1 << b
        allowed[b] |= 1 << a
    for matching in _matchings(g, allowed):
        d = len(matching)
        for flips in product((False, True), repeat=d):
            pairs = [(b, a) if flip else (a, b) for (a, b), flip in zip(matching, flips)]
            u_side = 0
            for u, _ in pairs:
                u_side |= 1 << u
            if any(g.adj[u] & u_side for u, _ in pairs):
                continue
            # pair a must precede pair b whenever u_a ~ v_b
            after = [0] * d
            for i, (u, _) in enumerate(pairs):
                for j, (_, v) in enumerate(pairs):
                    if i != j and g.has_edge(u, v):
                        after[i] |= 1 << j
            order = _topological_order(d, after)
            if order is not None:
                return [pairs[i] for i in order]
    return None


def is_ordered_right_matching(g: Graph, pairs: Matching) -> bool:
    """Independent re-check of a witness returned by :func:`ordered_right_matching`."""
    seen = 0
    for u, v in pairs:
        if seen >> u & 1 or seen >> v & 1 or not g.has_edge(u, v):
            return False
        if not is_right_edge_by_covers(g, u, v):
            return False
        seen |= (1 << u) | (1 << v)
    if seen != (1 << g.n) - 1:
        return False
    us = [u for u, _ in pairs]
    if any(g.has_edge(a, b) for a in us for b in us):
        return False
    return all(not g.has_edge(u, pairs[j][1]) or i <= j
               for i, (u, _) in enumerate(pairs) for j in range(len(pairs)))

