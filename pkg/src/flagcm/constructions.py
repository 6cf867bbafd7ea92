"""Constructions relating h-vectors of flag complexes to f-vectors.

* :func:`polarize` doubles a flag complex into a balanced vertex-decomposable
  flag complex whose h-vector is the input's f-vector.
* :func:`h_to_f_complex` follows a vertex decomposition and glues rev-lex
  complexes to realize the h-vector of a VD flag complex as an f-vector.
* :func:`matching_quotient` collapses an ordered right-edge matching of a CM
  flag complex on 2d vertices to a flag complex on d vertices.
* quasi-flag recognition, the cone-face property, and the neighborhood
  property rewiring that removes cone points without changing f.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canonical import bits
from .complex import (SimplicialComplex, canonical_form, cone_points, delete_mask,
                      empty_complex, find_balanced_coloring, is_flag, is_proper_coloring,
                      link_mask, nonface_graph, popcount, restrict_mask, star_along)
from .decomposition import Leaf, is_vertex_decomposable
from .errors import (CapacityExceeded, NotFlag, NotVD, NPPropertyAbsent,
                     PropertyNotSatisfied, StructureConditionFailed)
from .graphs import Graph, independence_complex, ordered_right_matching
from .homology import is_cm
from .kruskal_katona import is_subcomplex, revlex_complex


# -- polarization ------------------------------------------------------------------

@dataclass(frozen=True)
class PolarizationLabeling:
    pairs: tuple[tuple[int, int], ...]  # pairs[i] = (u_i, v_i)

    def coloring(self) -> tuple[int, ...]:
        col = [0] * (2 * len(self.pairs))
        for i, (u, v) in enumerate(self.pairs):
            col[u] = col[v] = i
        return tuple(col)


def polarization_graph(gamma: SimplicialComplex) -> tuple[Graph, PolarizationLabeling]:
    """Edges ``{u_i, v_i}`` and ``{v_i, v_j}`` for every nonface ``{i, j}``; u_i = i, v_i = n + i."""
    if not is_flag(gamma):
        raise NotFlag("polarization needs a flag complex")
    n = gamma.n
    if 2 * n > 63:
        raise CapacityExceeded(f"polarizing {n} vertices needs {2 * n} > 63")
    nonfaces = nonface_graph(gamma).edges()
    edges = [(i, n + i) for i in range(n)] + [(n + a, n + b) for a, b in nonfaces]
    labeling = PolarizationLabeling(tuple((i, n + i) for i in range(n)))
    return Graph.from_edges(2 * n, edges), labeling


def polarize(gamma: SimplicialComplex) -> SimplicialComplex:
    return independence_complex(polarization_graph(gamma)[0])


# -- h-vector to f-vector through a vertex decomposition ---------------------------

@dataclass(frozen=True)
class GluingStep:
    vertex: int
    f_deletion: tuple[int, ...]
    f_link: tuple[int, ...]
    nested: bool


def h_to_f_complex(delta: SimplicialComplex,
                   steps: list[GluingStep] | None = None) -> SimplicialComplex:
    """A complex whose f-vector is ``h(delta)``, for ``delta`` VD and flag."""
    if not is_flag(delta):
        raise NotFlag("h_to_f_complex needs a flag complex")
    if not delta.is_pure():
        raise NotVD("impure complexes are not vertex decomposable")
    ok, tree = is_vertex_decomposable(delta)
    if not ok:
        raise NotVD("complex is not vertex decomposable")
    if steps is None:
        steps = []
    return _glue(delta, tree, steps)


def _glue(cx: SimplicialComplex, tree, steps: list[GluingStep]) -> SimplicialComplex:
    if isinstance(tree, Leaf):
        return empty_complex()
    v = cx.labels.index(tree.vertex)
    gamma1 = revlex_complex(_glue(delete_mask(cx, 1 << v), tree.deletion, steps).f)
    gamma2 = revlex_complex(_glue(link_mask(cx, 1 << v), tree.link, steps).f)
    nested = is_subcomplex(gamma2, gamma1)
    steps.append(GluingStep(tree.vertex, gamma1.f, gamma2.f, nested))
    if not nested:
        raise StructureConditionFailed(
            f"rev-lex complex with f={gamma2.f} does not sit inside f={gamma1.f}")
    return star_along(gamma1, gamma2)


# -- matching quotient ---------------------------------------------------------------

@dataclass(frozen=True)
class QuotientMap:
    pairs: tuple[tuple[int, int], ...]  # ordered (u_i, v_i)
    graph: Graph                        # nonface graph on the d quotient vertices


def quotient_map(delta: SimplicialComplex) -> QuotientMap:
    d = delta.dim + 1
    if delta.n != 2 * d:
        raise StructureConditionFailed(f"need 2d = {2 * d} vertices, got {delta.n}")
    if cone_points(delta):
        raise StructureConditionFailed("complex has cone points")
    g = nonface_graph(delta)
    pairs = ordered_right_matching(g)
    if pairs is None:
        raise StructureConditionFailed("nonface graph has no ordered right-edge matching")
    edges = []
    for h, k in combinations(range(d), 2):
        (uh, vh), (uk, vk) = pairs[h], pairs[k]
        if g.has_edge(vh, vk) or g.has_edge(uh, vk) or g.has_edge(uk, vh):
            edges.append((h, k))
    return QuotientMap(tuple(pairs), Graph.from_edges(d, edges))


def matching_quotient(delta: SimplicialComplex) -> SimplicialComplex:
    return independence_complex(quotient_map(delta).graph)


# -- quasi-flag complexes ------------------------------------------------------------

QUASI_FLAG_LIMIT = 8
_QF_COMPLEX: dict = {}
_QF_FVECTOR: dict = {}


def _link_is_induced(cx: SimplicialComplex, v: int) -> bool:
    lk = link_mask(cx, 1 << v)
    span = 0
    for g in cx.facets:
        if g >> v & 1:
            span |= g
    span &= ~(1 << v)
    return restrict_mask(cx, span).labelled_facets() == lk.labelled_facets()


def is_quasi_flag(cx: SimplicialComplex, strict: bool = False) -> bool:
    """Recursive quasi-flag test.

    The default reads the definition literally: the deletion and the induced
    link need only share f-vectors with quasi-flag complexes.  ``strict=True``
    demands that they be quasi-flag themselves.
    """
    if cx.n == 0:
        return True
    if cx.n > QUASI_FLAG_LIMIT:
        raise CapacityExceeded(f"quasi-flag search limited to {QUASI_FLAG_LIMIT} vertices")
    key = (canonical_form(cx, QUASI_FLAG_LIMIT), strict)
    if key in _QF_COMPLEX:
        return _QF_COMPLEX[key]
    result = False
    for v in range(cx.n):
        if not _link_is_induced(cx, v):
            continue
        deletion, lk = delete_mask(cx, 1 << v), link_mask(cx, 1 << v)
        if strict:
            ok = is_quasi_flag(deletion, True) and is_quasi_flag(lk, True)
        else:
            ok = fvector_is_quasi_flag(deletion.f, hint=deletion) and \
                fvector_is_quasi_flag(lk.f, hint=lk)
        if ok:
            result = True
            break
    _QF_COMPLEX[key] = result
    return result


def fvector_is_quasi_flag(f, n_bound: int = QUASI_FLAG_LIMIT,
                          hint: SimplicialComplex | None = None) -> bool:
    """Whether some complex with f-vector ``f`` is quasi-flag (searched up to isomorphism)."""
    f = tuple(f)
    if len(f) == 1:
        return True
    if f[1] > n_bound:
        raise CapacityExceeded(f"f_0 = {f[1]} exceeds the bound {n_bound}")
    if f in _QF_FVECTOR:
        return _QF_FVECTOR[f]
    if hint is not None and hint.f == f and is_quasi_flag(hint):
        _QF_FVECTOR[f] = True
        return True
    result = any(is_quasi_flag(cx) for cx in complexes_with_f_vector(f))
    _QF_FVECTOR[f] = result
    return result


def complexes_with_f_vector(f) -> list[SimplicialComplex]:
    """All complexes with f-vector ``f``, one per isomorphism class."""
    f = tuple(f)
    if len(f) == 1:
        return [empty_complex()]
    n = f[1]
    layers = [[(1 << v) for v in range(n)]]
    partial = [(frozenset(layers[0]), layers[0])]
    for size in range(2, len(f)):
        nxt = {}
        for faces, top in partial:
            top_set = set(top)
            cands = set()
            for t in top:
                for v in range(n):
                    if not t >> v & 1:
                        s = t | 1 << v
                        if all(s & ~(1 << w) in top_set for w in bits(s)):
                            cands.add(s)
            for chosen in combinations(sorted(cands), f[size]):
                cx = SimplicialComplex.from_masks(n, list(faces) + list(chosen))
                key = canonical_form(cx, QUASI_FLAG_LIMIT)
                if key not in nxt:
                    nxt[key] = (faces | frozenset(chosen), list(chosen))
        partial = [nxt[k] for k in sorted(nxt)]
    return [SimplicialComplex.from_masks(n, faces) for faces, _ in partial]


# -- cone-face property --------------------------------------------------------------

def _has_cfp(cx: SimplicialComplex, f0: int) -> int | None:
    """Return a violating vertex, or ``None`` when ``f0`` has the cone-face property."""
    facets = set(cx.facets)
    for v in range(cx.n):
        if f0 >> v & 1:
            continue
        if not any((f0 & ~(1 << a)) | 1 << v in facets for a in bits(f0)):
            return v
    return None


def cfp_facet(cx: SimplicialComplex) -> list[int] | None:
    """First facet (in stored order) with the balanced cone-face property."""
    if not is_flag(cx):
        raise NotFlag("cone-face property is stated for flag complexes")
    if find_balanced_coloring(cx) is None:
        raise ValueError("complex is not balanced")
    for f0 in cx.facets:
        if popcount(f0) == cx.dim + 1 and _has_cfp(cx, f0) is None:
            return bits(f0)
    return None


def coneface_complement(cx: SimplicialComplex, f0) -> SimplicialComplex:
    mask = sum(1 << v for v in f0)
    return restrict_mask(cx, cx.vertex_mask() & ~mask)


def verify_coneface(cx: SimplicialComplex, f0) -> bool:
    """h(cx) equals f of the restriction away from ``f0``, and cx is CM over Q and GF(2)."""
    mask = sum(1 << v for v in f0)
    if mask not in set(cx.facets):
        raise PropertyNotSatisfied(f"{sorted(f0)} is not a facet")
    bad = _has_cfp(cx, mask)
    if bad is not None:
        raise PropertyNotSatisfied(f"vertex {bad} has no exchange into {sorted(f0)}", bad)
    rest = coneface_complement(cx, f0)
    return cx.h == rest.f and is_cm(cx, 0) and is_cm(cx, 2)


# -- neighborhood property rewiring ----------------------------------------------------

def _closed(g: Graph, v: int) -> int:
    return g.adj[v] | 1 << v


def _np_pair(g: Graph, cls: list[int]) -> tuple[int, int] | None:
    for y1, y2 in combinations(cls, 2):
        n1, n2 = _closed(g, y1), _closed(g, y2)
        if all(n1 & ~_closed(g, x) == 0 or n2 & ~_closed(g, x) == 0 for x in cls):
            return y1, y2
    return None


def np_property(cx: SimplicialComplex, coloring) -> dict[int, tuple[int, int]] | None:
    """Dominating pair per color class of size > 2, or ``None`` if some class has none."""
    pairs, _ = _np_pairs(nonface_graph(cx), coloring)
    return pairs


def np_failing_colors(cx: SimplicialComplex, coloring) -> list[int]:
    return _np_pairs(nonface_graph(cx), coloring)[1]


def _np_pairs(g: Graph, coloring):
    classes = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    pairs, failing = {}, []
    for c in sorted(classes):
        cls = classes[c]
        if len(cls) <= 2:
            continue
        pair = _np_pair(g, cls)
        if pair is None:
            failing.append(c)
        else:
            pairs[c] = pair
    return (None if failing else pairs), failing


def np_moves(cx: SimplicialComplex, coloring) -> list[tuple[int, int, int]]:
    """Triples ``(x, y_x, z)``: drop nonface edge ``{x, y_x}``, add ``{x, z}``."""
    if not is_proper_coloring(cx, coloring):
        raise ValueError("coloring is not proper")
    g = nonface_graph(cx)
    pairs, failing = _np_pairs(g, coloring)
    if failing:
        raise NPPropertyAbsent(f"color class {failing[0]} has no dominating pair", failing[0])
    cones = cone_points(cx)
    moves = []
    for c in sorted(pairs):
        y1, y2 = pairs[c]
        for x in color_classes_of(coloring, c):
            if x in (y1, y2):
                continue
            cands = [y for y in (y1, y2) if _closed(g, y) & ~_closed(g, x) == 0]
            moves.append((x, min(cands)))
    moves.sort()
    if len(moves) != len(cones):
        raise StructureConditionFailed(
            f"{len(moves)} excess vertices but {len(cones)} cone points")
    return [(x, y, z) for (x, y), z in zip(moves, cones)]


def np_recolor(coloring, moves) -> tuple[int, ...]:
    """Each moved vertex takes the color of its cone point."""
    out = list(coloring)
    for x, _, z in moves:
        out[x] = coloring[z]
    return tuple(out)


def np_modify(cx: SimplicialComplex, coloring=None,
              trace: list[SimplicialComplex] | None = None) -> SimplicialComplex:
    """Move one nonface edge per excess vertex onto a cone point, keeping f fixed."""
    if coloring is None:
        coloring = find_balanced_coloring(cx)
        if coloring is None:
            raise ValueError("complex is not balanced")
    edges = set(nonface_graph(cx).edges())
    for x, y, z in np_moves(cx, coloring):
        edges.discard((min(x, y), max(x, y)))
        edges.add((min(x, z), max(x, z)))
        if trace is not None:
            trace.append(independence_complex(Graph.from_edges(cx.n, edges)))
    return independence_complex(Graph.from_edges(cx.n, edges))


def color_classes_of(coloring, color: int) -> list[int]:
    return [v for v, c in enumerate(coloring) if c == color]

