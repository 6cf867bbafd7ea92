"""Vertex decomposability: shedding vertices, memoized search, witness trees."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Union

from .canonical import bits
from .complex import (SimplicialComplex, canonical_form, cone_points, delete_mask,
                      h_vector, link_mask)
from .errors import NotPure, PreconditionFailed
from .homology import is_cm

CANONICAL_MEMO_LIMIT = 10


@dataclass(frozen=True)
class Leaf:
    facet: tuple[int, ...]

    def to_json(self) -> dict:
        return {"simplex": list(self.facet)}


@dataclass(frozen=True)
class Node:
    vertex: int
    deletion: "DecompositionTree"
    link: "DecompositionTree"
    cone_points: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"shed": self.vertex, "cone_points": list(self.cone_points),
                "deletion": self.deletion.to_json(), "link": self.link.to_json()}


DecompositionTree = Union[Leaf, Node]


class _Memo:
    """Shared verdict table; entries are written once with deterministic values."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value) -> None:
        with self._lock:
            self._data.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


MEMO = _Memo()


def _strip_cones(cx: SimplicialComplex) -> SimplicialComplex:
    cones = 0
    for v in cone_points(cx):
        cones |= 1 << v
    return link_mask(cx, cones) if cones else cx


def _memo_key(cx: SimplicialComplex):
    core = _strip_cones(cx)
    if core.n <= CANONICAL_MEMO_LIMIT:
        return canonical_form(core, CANONICAL_MEMO_LIMIT)
    return ("labelled", core.n, core.facets)


def is_shedding(cx: SimplicialComplex, v: int) -> bool:
    """No facet of the deletion of ``v`` is a face of its link.

    Equivalently every facet ``G`` through ``v`` has ``G - v`` inside a facet
    avoiding ``v``.
    """
    bit = 1 << v
    avoiding = [g for g in cx.facets if not g & bit]
    return all(any((g & ~bit) & ~h == 0 for h in avoiding)
               for g in cx.facets if g & bit)


def shedding_vertices(cx: SimplicialComplex) -> list[int]:
    if not cx.is_pure():
        raise NotPure("shedding vertices are defined for pure complexes")
    return [v for v in range(cx.n) if is_shedding(cx, v)]


def _decide(cx: SimplicialComplex) -> bool:
    if cx.is_simplex():
        return True
    key = _memo_key(cx)
    hit = MEMO.get(key)
    if hit is not None:
        return hit
    result = False
    for v in range(cx.n):
        if is_shedding(cx, v) and _decide(delete_mask(cx, 1 << v)) \
                and _decide(link_mask(cx, 1 << v)):
            result = True
            break
    MEMO.put(key, result)
    return result


def _build(cx: SimplicialComplex) -> DecompositionTree:
    if cx.is_simplex():
        return Leaf(tuple(cx.labels[v] for v in bits(cx.facets[0])))
    for v in range(cx.n):
        if not is_shedding(cx, v):
            continue
        deletion, lk = delete_mask(cx, 1 << v), link_mask(cx, 1 << v)
        if _decide(deletion) and _decide(lk):
            return Node(cx.labels[v], _build(deletion), _build(lk),
                        tuple(cx.labels[c] for c in cone_points(cx)))
    raise AssertionError("decision and witness construction disagree")


def is_vertex_decomposable(cx: SimplicialComplex) -> tuple[bool, DecompositionTree | None]:
    if not cx.is_pure():
        raise NotPure("vertex decomposability is defined for pure complexes")
    if not _decide(cx):
        return False, None
    return True, _build(cx)


def is_vd(cx: SimplicialComplex) -> bool:
    """Decision only; impure complexes are not vertex decomposable."""
    return cx.is_pure() and _decide(cx)


def replay(cx: SimplicialComplex, tree: DecompositionTree) -> bool:
    """Re-verify a witness from the definition, without the search machinery."""
    if isinstance(tree, Leaf):
        return cx.is_simplex() and \
            frozenset(tree.facet) == frozenset(cx.labels[v] for v in bits(cx.facets[0]))
    if tree.vertex not in cx.labels or not cx.is_pure():
        return False
    v = cx.labels.index(tree.vertex)
    deletion, lk = delete_mask(cx, 1 << v), link_mask(cx, 1 << v)
    link_faces = {frozenset(f) for f in _all_label_faces(lk)}
    if any(f in link_faces for f in deletion.labelled_facets()):
        return False
    return replay(deletion, tree.deletion) and replay(lk, tree.link)


def _all_label_faces(cx: SimplicialComplex):
    for face in cx.faces:
        yield frozenset(cx.labels[v] for v in bits(face))


def shedding_order(tree: DecompositionTree) -> list[int]:
    """Vertices shed along the deletion spine of a witness."""
    out = []
    while isinstance(tree, Node):
        out.append(tree.vertex)
        tree = tree.deletion
    return out


def deletion_link_h_inequality(cx: SimplicialComplex, v: int, field=0) -> bool:
    """Componentwise ``h(link v) <= h(deletion of v)``, both required CM."""
    deletion, lk = delete_mask(cx, 1 << v), link_mask(cx, 1 << v)
    failed = tuple(name for name, sub in (("deletion", deletion), ("link", lk))
                   if not is_cm(sub, field))
    if failed:
        raise PreconditionFailed(f"not Cohen-Macaulay: {', '.join(failed)}", failed)
    h_del = h_vector(deletion.f, deletion.dim + 1)
    h_lk = h_vector(lk.f, lk.dim + 1)
    width = max(len(h_del), len(h_lk))
    h_del = list(h_del) + [0] * (width - len(h_del))
    h_lk = list(h_lk) + [0] * (width - len(h_lk))
    return all(a <= b for a, b in zip(h_lk, h_del))


def h_additivity_holds(cx: SimplicialComplex, v: int) -> bool:
    """``h_i(cx) = h_i(cx - v) + h_{i-1}(link v)`` at a shedding vertex."""
    deletion, lk = delete_mask(cx, 1 << v), link_mask(cx, 1 << v)
    d = cx.dim + 1
    h = h_vector(cx.f, d)
    h_del = h_vector(deletion.f, d)
    h_lk = (0,) + h_vector(lk.f, lk.dim + 1)
    h_lk = h_lk + (0,) * (d + 1 - len(h_lk))
    return all(h[i] == h_del[i] + h_lk[i] for i in range(d + 1))

