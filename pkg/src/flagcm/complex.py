"""Simplicial complexes over bit-mask faces.

A face is an ``int`` whose set bits are its vertices.  A complex stores its
facets (inclusion-maximal faces) sorted by numeric value, so equal complexes
have equal representations.  ``labels[i]`` names internal vertex ``i``; it is
the identity for complexes built with :func:`from_facets` and records the
parent's vertex names for links, deletions and restrictions, which drop the
vertices they no longer cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from .canonical import bits, canonical_labeling, permute_mask
from .errors import (CapacityExceeded, DimensionMismatch, EmptyRestriction,
                     NotAFace, NotASubcomplex, NotFlag, VertexUncovered)

MAX_VERTICES = 63

FVector = tuple[int, ...]
HVector = tuple[int, ...]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: -popcount(x)):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int],
                   labels: Sequence[int] | None = None) -> SimplicialComplex:
        if n > MAX_VERTICES:
            raise CapacityExceeded(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
        facets = _maximal(masks) or (0,)
        covered = 0
        for f in facets:
            covered |= f
        for v in range(n):
            if not covered >> v & 1:
                raise VertexUncovered(v)
        if covered >> n:
            raise ValueError("facet uses a vertex outside range(n)")
        return cls(n, facets, tuple(labels) if labels is not None else tuple(range(n)))

    @classmethod
    def from_label_sets(cls, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Build from faces named by arbitrary integer labels (sorted ascending)."""
        faces = [frozenset(f) for f in faces]
        labels = sorted(set().union(*faces)) if faces else []
        index = {lab: i for i, lab in enumerate(labels)}
        masks = [to_mask(index[x] for x in f) for f in faces]
        return cls.from_masks(len(labels), masks, labels)

    # -- basic statistics -------------------------------------------------

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    @property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @property
    def f(self) -> FVector:
        return f_vector(self)

    @property
    def h(self) -> HVector:
        """h-vector with trailing zeros trimmed."""
        return trim(h_vector(self.f, self.dim + 1))

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) == 1

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def contains(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def labelled_facets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(self.labels[v] for v in bits(f)) for f in self.facets)

    def facet_lists(self) -> list[list[int]]:
        return [bits(f) for f in self.facets]

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={self.facet_lists()})"


def _compress(masks: Iterable[int], labels: Sequence[int]) -> SimplicialComplex:
    masks = list(masks)
    used = 0
    for m in masks:
        used |= m
    keep = bits(used)
    pos = [0] * len(labels)
    for i, v in enumerate(keep):
        pos[v] = i
    return SimplicialComplex.from_masks(
        len(keep), [permute_mask(m, pos) for m in masks], [labels[v] for v in keep])


def from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex on ``range(n)`` generated by ``facets``; every vertex must be covered."""
    facets = list(facets)
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
    masks = []
    for face in facets:
        face = list(face)
        if any(v < 0 or v >= n for v in face):
            raise ValueError(f"face {face} has a vertex outside range({n})")
        masks.append(to_mask(face))
    if not masks:
        raise ValueError("at least one face is required")
    return SimplicialComplex.from_masks(n, masks)


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_masks(n, [(1 << n) - 1])


def empty_complex() -> SimplicialComplex:
    """The complex {∅} with no vertices."""
    return SimplicialComplex(0, (0,))


# -- f- and h-vectors -------------------------------------------------------

def f_vector(cx: SimplicialComplex) -> FVector:
    counts = [0] * (cx.dim + 2)
    for face in cx.faces:
        counts[popcount(face)] += 1
    return tuple(counts)


def h_vector(f: Sequence[int], d: int) -> HVector:
    """Untrimmed h-vector ``(h_0, ..., h_d)`` of an f-vector ``(f_-1, ..., f_{d-1})``."""
    if d < len(f) - 1:
        raise DimensionMismatch(f"d={d} is smaller than dim+1={len(f) - 1}")
    f = list(f) + [0] * (d + 1 - len(f))
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def f_from_h(h: Sequence[int], d: int) -> FVector:
    if d < len(h) - 1:
        raise DimensionMismatch(f"d={d} is smaller than len(h)-1={len(h) - 1}")
    h = list(h) + [0] * (d + 1 - len(h))
    return tuple(
        sum(comb(d - j, i + 1 - j) * h[j] for j in range(i + 2))
        for i in range(-1, d)
    )


def trim(h: Sequence[int]) -> tuple[int, ...]:
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


# -- subcomplex operations --------------------------------------------------

def _face_mask(cx: SimplicialComplex, face: Iterable[int]) -> int:
    m = to_mask(face)
    if m >> cx.n or not cx.contains(m):
        raise NotAFace(f"{sorted(face)} is not a face")
    return m


def link(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """link of ``face``; ``result.labels`` translate back to ``cx.labels``."""
    m = _face_mask(cx, face)
    return _compress([g & ~m for g in cx.facets if g & m == m], cx.labels)


def link_mask(cx: SimplicialComplex, m: int) -> SimplicialComplex:
    return _compress([g & ~m for g in cx.facets if g & m == m], cx.labels)


def delete_face(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """Faces of ``cx`` not containing ``face``."""
    return delete_mask(cx, _face_mask(cx, face))


def delete_mask(cx: SimplicialComplex, m: int) -> SimplicialComplex:
    if m == 0:
        raise NotAFace("cannot delete the empty face")
    out = []
    for g in cx.facets:
        if g & m != m:
            out.append(g)
        else:
            out.extend(g & ~(1 << v) for v in bits(m))
    return _compress(out, cx.labels)


def restrict(cx: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    w = to_mask(vertices) & cx.vertex_mask()
    if w == 0:
        raise EmptyRestriction("restriction to a set containing no vertex")
    return _compress([g & w for g in cx.facets], cx.labels)


def restrict_mask(cx: SimplicialComplex, w: int) -> SimplicialComplex:
    if w == 0:
        return empty_complex()
    return _compress([g & w for g in cx.facets], cx.labels)


def star(base: SimplicialComplex, along: SimplicialComplex,
         other: SimplicialComplex) -> SimplicialComplex:
    """``base ∪ {F ∪ G : F ∈ along, G ∈ other}``, matching vertices by label."""
    base_faces = {frozenset(s) for s in base.labelled_facets()}
    for f in along.labelled_facets():
        if not any(f <= g for g in base_faces):
            raise NotASubcomplex(f"{sorted(f)} is not a face of the base complex")
    glued = [f | g for f in along.labelled_facets() for g in other.labelled_facets()]
    return SimplicialComplex.from_label_sets(list(base_faces) + glued)


def star_along(base: SimplicialComplex, along: SimplicialComplex,
               apex: int | None = None) -> SimplicialComplex:
    """Glue a cone with new vertex ``apex`` onto ``base`` along ``along``."""
    if apex is None:
        apex = max(base.labels, default=-1) + 1
    if apex in base.labels:
        raise ValueError(f"apex label {apex} already names a vertex")
    return star(base, along, SimplicialComplex(1, (1,), (apex,)))


def cone(cx: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    return star_along(cx, cx, apex)


def relabel(cx: SimplicialComplex, perm: Sequence[int]) -> SimplicialComplex:
    """Move vertex ``v`` to ``perm[v]``; labels reset to the identity."""
    return SimplicialComplex.from_masks(cx.n, [permute_mask(g, perm) for g in cx.facets])


# -- flagness, cone points, coloring ------------------------------------------

def minimal_nonfaces(cx: SimplicialComplex) -> list[int]:
    faces = cx.faces
    out = []
    level = [f for f in faces if popcount(f) == 1]
    size = 1
    while level and size <= cx.dim + 1:
        candidates = set()
        for f in level:
            for v in range(cx.n):
                if not f >> v & 1:
                    candidates.add(f | 1 << v)
        size += 1
        nxt = []
        for s in sorted(candidates):
            if s in faces:
                nxt.append(s)
            elif all(s & ~(1 << v) in faces for v in bits(s)):
                out.append(s)
        level = nxt
    return sorted(out)


def is_flag(cx: SimplicialComplex) -> bool:
    return all(popcount(s) == 2 for s in minimal_nonfaces(cx))


def nonface_graph(cx: SimplicialComplex):
    from .graphs import Graph
    mins = minimal_nonfaces(cx)
    if any(popcount(s) != 2 for s in mins):
        raise NotFlag("complex has a minimal nonface of size > 2")
    return Graph.from_edges(cx.n, [bits(s) for s in mins])


def cone_points(cx: SimplicialComplex) -> list[int]:
    common = cx.vertex_mask()
    for f in cx.facets:
        common &= f
    return bits(common)


def is_pure(cx: SimplicialComplex) -> bool:
    return cx.is_pure()


def dimension(cx: SimplicialComplex) -> int:
    return cx.dim


def one_skeleton_adjacency(cx: SimplicialComplex) -> list[int]:
    adj = [0] * cx.n
    for f in cx.facets:
        for v in bits(f):
            adj[v] |= f & ~(1 << v)
    return adj


def find_balanced_coloring(cx: SimplicialComplex) -> tuple[int, ...] | None:
    """A coloring with ``dim + 1`` colors, no face containing two vertices of one color."""
    d = cx.dim + 1
    adj = one_skeleton_adjacency(cx)
    order = sorted(range(cx.n), key=lambda v: (-popcount(adj[v]), v))
    col = [-1] * cx.n

    def assign(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        banned = {col[w] for w in bits(adj[v])}
        for c in range(min(used + 1, d)):
            if c not in banned:
                col[v] = c
                if assign(k + 1, max(used, c + 1)):
                    return True
        col[v] = -1
        return False

    return tuple(col) if assign(0, 0) else None


def is_proper_coloring(cx: SimplicialComplex, coloring: Sequence[int]) -> bool:
    adj = one_skeleton_adjacency(cx)
    return all(coloring[v] != coloring[w] for v in range(cx.n) for w in bits(adj[v]))


def is_balanced_coloring(cx: SimplicialComplex, coloring: Sequence[int]) -> bool:
    return (len(coloring) == cx.n and len(set(coloring)) <= cx.dim + 1
            and is_proper_coloring(cx, coloring))


def color_classes(coloring: Sequence[int]) -> list[list[int]]:
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


# -- canonical forms -----------------------------------------------------------

def canonical_form(cx: SimplicialComplex, limit: int = 10) -> tuple[int, tuple[int, ...]]:
    """Isomorphism-class key: vertex count and the least relabelled facet tuple."""
    enc, _ = canonical_labeling(cx.n, cx.facets, limit)
    return cx.n, enc


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex, limit: int = 16) -> bool:
    if a.n != b.n or len(a.facets) != len(b.facets) or a.f != b.f:
        return False
    return canonical_form(a, limit) == canonical_form(b, limit)
