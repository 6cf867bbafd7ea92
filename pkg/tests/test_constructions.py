from itertools import product
from math import comb

import pytest
from hypothesis import given

from flagcm.complex import (cone_points, find_balanced_coloring,
                            from_facets, is_balanced_coloring, is_flag, nonface_graph,
                            restrict, simplex)
from flagcm.constructions import (GluingStep, cfp_facet, complexes_with_f_vector,
                                  fvector_is_quasi_flag, h_to_f_complex, is_quasi_flag,
                                  matching_quotient, np_failing_colors, np_modify, np_moves,
                                  np_property, np_recolor,
                                  polarization_graph, polarize, quotient_map, verify_coneface)
from flagcm.decomposition import is_vd
from flagcm.enumeration import enumerate_graphs, flag_complexes
from flagcm.errors import (CapacityExceeded, NotFlag, NotVD, NPPropertyAbsent,
                           PropertyNotSatisfied, StructureConditionFailed)
from flagcm.graphs import Graph, independence_complex, ordered_right_matching
from flagcm.homology import is_cm

from conftest import c5_complex, flag_complexes as flag_strategy

TRIANGLE = from_facets(3, [(0, 1), (0, 2), (1, 2)])
TWO_POINTS = from_facets(2, [(0,), (1,)])


def all_flag(max_n):
    for n in range(1, max_n + 1):
        for _, cx in flag_complexes(n):
            yield cx


def one_based_graph(n, edges):
    return Graph.from_edges(n, [(a - 1, b - 1) for a, b in edges])


# -- polarization ---------------------------------------------------------------------

def test_polarize_examples():
    square = polarize(simplex(2))
    assert square.labelled_facets() == {frozenset(s) for s in [(0, 1), (0, 3), (2, 1), (2, 3)]}
    assert square.f == (1, 4, 4) and square.h == (1, 2, 1)
    three = polarize(TWO_POINTS)
    # u = (0, 1), v = (2, 3); the nonface {1,2} becomes the edge v1 v2
    assert three.labelled_facets() == {frozenset(s) for s in [(0, 1), (0, 3), (2, 1)]}
    assert three.f == (1, 4, 3) and three.h == (1, 2)


def test_polarization_labeling():
    g, lab = polarization_graph(c5_complex())
    assert lab.pairs == tuple((i, 5 + i) for i in range(5))
    want = {(i, 5 + i) for i in range(5)} | {(5 + a, 5 + b) for a, b in
                                             nonface_graph(c5_complex()).edges()}
    assert set(g.edges()) == want
    assert lab.coloring() == (0, 1, 2, 3, 4) * 2


def test_polarize_errors():
    with pytest.raises(NotFlag):
        polarize(TRIANGLE)
    with pytest.raises(CapacityExceeded):
        polarize(from_facets(32, [(v,) for v in range(32)]))


def test_polarize_invariants_exhaustive():
    for gamma in all_flag(6):
        g, lab = polarization_graph(gamma)
        delta = independence_complex(g)
        assert delta.h == gamma.f
        assert is_flag(delta) and not cone_points(delta)
        assert is_balanced_coloring(delta, lab.coloring())
        assert ordered_right_matching(g) is not None
        if gamma.n <= 5:
            assert is_vd(delta)


# -- h-vector to f-vector ---------------------------------------------------------------

def test_h_to_f_examples():
    assert h_to_f_complex(simplex(3)).f == (1,)
    steps = []
    out = h_to_f_complex(c5_complex(), steps)
    assert out.f == (1, 3, 1) == c5_complex().h
    assert all(isinstance(s, GluingStep) and s.nested for s in steps)
    assert len(steps) == 4


def test_h_to_f_errors():
    with pytest.raises(NotFlag):
        h_to_f_complex(TRIANGLE)
    c4 = independence_complex(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    with pytest.raises(NotVD):
        h_to_f_complex(c4)
    with pytest.raises(NotVD):
        h_to_f_complex(from_facets(3, [(0, 1), (2,)]))


def test_h_to_f_on_vd_flag_complexes():
    checked = 0
    for delta in all_flag(7):
        if is_vd(delta):
            assert h_to_f_complex(delta).f == delta.h
            checked += 1
    assert checked > 150


def test_h_to_f_after_polarize():
    for gamma in all_flag(5):
        assert h_to_f_complex(polarize(gamma)).f == gamma.f


# -- matching quotient ------------------------------------------------------------------

def test_quotient_examples():
    square = polarize(simplex(2))
    qm = quotient_map(square)
    assert qm.graph.edges() == []
    assert matching_quotient(square).f == (1, 2, 1)
    with pytest.raises(StructureConditionFailed):
        matching_quotient(from_facets(4, [(0, 1), (2, 3)]))
    with pytest.raises(StructureConditionFailed):
        matching_quotient(c5_complex())


def test_quotient_after_polarize():
    for gamma in all_flag(6):
        out = matching_quotient(polarize(gamma))
        assert out.f == gamma.f and is_flag(out)


@pytest.mark.slow
def test_quotient_on_all_qualifying_complexes():
    checked = 0
    for d in range(1, 5):
        for g in enumerate_graphs(2 * d):
            delta = independence_complex(g)
            if delta.dim != d - 1 or cone_points(delta) or ordered_right_matching(g) is None:
                continue
            out = matching_quotient(delta)
            assert out.f == delta.h and is_flag(out)
            checked += 1
    assert checked > 20


# -- quasi-flag --------------------------------------------------------------------------

@pytest.mark.slow
def test_flag_complexes_are_quasi_flag():
    for cx in all_flag(6):
        assert is_quasi_flag(cx)
        assert is_quasi_flag(cx, strict=True)
        assert fvector_is_quasi_flag(cx.f)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_complete_graph_is_not_quasi_flag(n):
    kn = from_facets(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
    assert kn.f == (1, n, comb(n, 2))
    assert not is_quasi_flag(kn)
    assert not fvector_is_quasi_flag(kn.f)


def test_remark_complex_is_not_quasi_flag():
    cx = from_facets(4, [(0, 1), (0, 2), (1, 2, 3)])
    assert cx.f == (1, 4, 5, 1)
    assert not is_quasi_flag(cx)
    assert not fvector_is_quasi_flag((1, 4, 5, 1))
    assert fvector_is_quasi_flag((1, 4, 4))


def test_quasi_flag_capacity():
    with pytest.raises(CapacityExceeded):
        fvector_is_quasi_flag((1, 9))
    with pytest.raises(CapacityExceeded):
        is_quasi_flag(from_facets(9, [(v,) for v in range(9)]))


def test_complexes_with_f_vector():
    found = complexes_with_f_vector((1, 4, 3))
    assert {c.f for c in found} == {(1, 4, 3)}
    # a triangle plus a point, a path on four points, a star
    assert len(found) == 3


def test_balanced_vd_flag_h_vectors_are_quasi_flag_f_vectors():
    checked = 0
    for cx in all_flag(6):
        if cx.is_pure() and find_balanced_coloring(cx) is not None and is_vd(cx):
            assert fvector_is_quasi_flag(cx.h)
            checked += 1
    assert checked > 50


# -- cone-face property ------------------------------------------------------------------

def test_coneface_on_polarizations():
    for gamma in all_flag(5):
        delta = polarize(gamma)
        u_side = list(range(gamma.n))
        assert cfp_facet(delta) is not None
        assert verify_coneface(delta, u_side)
        rest = restrict(delta, range(gamma.n, 2 * gamma.n))
        assert rest.labelled_facets() == {frozenset(gamma.n + v for v in s)
                                          for s in gamma.labelled_facets()}


def test_coneface_simplex():
    assert cfp_facet(simplex(3)) == [0, 1, 2]
    assert verify_coneface(simplex(3), [0, 1, 2])


def test_coneface_violation():
    delta = polarize(TWO_POINTS)
    # v-side {2, 3} is not a facet; {0, 3} is, but vertex 2 cannot be exchanged in
    with pytest.raises(PropertyNotSatisfied):
        verify_coneface(delta, [2, 3])
    with pytest.raises(PropertyNotSatisfied) as err:
        verify_coneface(delta, [0, 3])
    assert err.value.vertex == 2
    with pytest.raises(NotFlag):
        cfp_facet(TRIANGLE)
    with pytest.raises(ValueError):
        cfp_facet(c5_complex())


@given(flag_strategy(max_n=5))
def test_cfp_facet_implies_cm(gamma):
    delta = polarize(gamma)
    f0 = cfp_facet(delta)
    assert verify_coneface(delta, f0)
    assert is_cm(delta, 0) and is_cm(delta, 2)


# -- neighborhood property --------------------------------------------------------------

FAIL_FIXED = [(1, 4), (1, 6), (4, 6), (2, 5), (2, 7), (5, 7), (3, 8), (1, 5), (4, 7), (6, 2)]
FAIL_OPEN = [(a, b) for a in (2, 5, 7) for b in (3, 8)]
FAIL_COLORING = (0, 1, 2, 0, 1, 0, 1, 2)


def test_np_fails_on_first_class_for_every_completion():
    """Only N[1], N[4], N[6] and the color classes are pinned; 64 graphs fit."""
    count = 0
    for pick in product((0, 1), repeat=len(FAIL_OPEN)):
        edges = FAIL_FIXED + [e for e, s in zip(FAIL_OPEN, pick) if s]
        cx = independence_complex(one_based_graph(8, edges))
        assert is_balanced_coloring(cx, FAIL_COLORING) or cx.dim < 2
        assert 0 in np_failing_colors(cx, FAIL_COLORING)
        assert np_property(cx, FAIL_COLORING) is None
        with pytest.raises(NPPropertyAbsent) as err:
            np_modify(cx, FAIL_COLORING)
        assert err.value.color == 0
        count += 1
    assert count == 64


def test_short_h_vector_is_a_flag_f_vector():
    assert any(cx.f == (1, 5, 3) for _, cx in flag_complexes(5))


RW_FIXED = [(1, 4), (1, 7), (4, 7), (2, 5), (2, 8), (5, 8), (3, 6),
            (7, 2), (7, 3), (7, 8), (2, 6), (8, 6)]
RW_OPEN = [(1, 3), (1, 5), (1, 6), (3, 5), (5, 6)]
RW_COLORING = (0, 1, 2, 0, 1, 2, 0, 1, 3, 4)


def rewiring_completions():
    for pick in product((0, 1), repeat=len(RW_OPEN)):
        extra = [e for e, s in zip(RW_OPEN, pick) if s]
        g = one_based_graph(10, RW_FIXED + extra)
        yield extra, g, independence_complex(g)


def test_rewiring_example():
    """Two cone points 9, 10; V_1 = {1,4,7}, V_2 = {2,5,8}."""
    cm = []
    for extra, g, cx in rewiring_completions():
        if not is_cm(cx):
            continue
        cm.append(extra)
        assert cone_points(cx) == [8, 9]
        trace = []
        out = np_modify(cx, RW_COLORING, trace)
        assert out.f == cx.f
        assert is_balanced_coloring(out, np_recolor(RW_COLORING, np_moves(cx, RW_COLORING)))
        assert is_cm(out, 0) and is_cm(out, 2)
        assert [len(cone_points(s)) for s in trace] == [1, 0]
        removed = set(g.edges()) - set(nonface_graph(out).edges())
        added = set(nonface_graph(out).edges()) - set(g.edges())
        assert added == {(6, 8), (7, 9)}
        if extra:
            # N[4] = V_1 inside N[7], N[2] inside N[8]: y_7 = 4 and y_8 = 2
            assert removed == {(3, 6), (1, 7)}
        else:
            # here N[1] = V_1 as well, and the lowest label wins
            assert removed == {(0, 6), (1, 7)}
    assert cm == [[], [(1, 6)], [(1, 5), (1, 6)]]


def twin_family(gamma, sides):
    """Polarize, add a true twin of each listed vertex and one isolated point per twin."""
    g, lab = polarization_graph(gamma)
    n2 = g.n
    edges = list(g.edges())
    coloring = list(lab.coloring())
    for k, y in enumerate(sides):
        x = n2 + k
        edges += [(min(w, x), x) for w in range(g.n) if g.has_edge(w, y)] + [(y, x)]
        coloring.append(coloring[y])
    top = max(coloring) + 1
    coloring += [top + k for k in range(len(sides))]
    total = n2 + 2 * len(sides)
    return independence_complex(Graph.from_edges(total, edges)), tuple(coloring)


def test_np_modify_constructed_family():
    checked = 0
    for gamma in all_flag(3):
        n = gamma.n
        choices = [[0], [n]] + ([[0, 1], [0, n + 1]] if n >= 2 else [])
        for sides in choices:
            cx, coloring = twin_family(gamma, sides)
            assert is_cm(cx) and is_balanced_coloring(cx, coloring)
            assert len(cone_points(cx)) == len(sides)
            trace = []
            out = np_modify(cx, coloring, trace)
            assert out.f == cx.f and not cone_points(out)
            assert is_balanced_coloring(out, np_recolor(coloring, np_moves(cx, coloring)))
            assert is_cm(out, 0) and is_cm(out, 2)
            assert [s.f for s in trace] == [cx.f] * len(sides)
            counts = [len(cone_points(s)) for s in trace]
            assert counts == list(range(len(sides) - 1, -1, -1))
            checked += 1
    assert checked > 10


def test_np_modify_needs_matching_cone_count():
    cx, coloring = twin_family(simplex(2), [0])
    lonely = restrict(cx, range(cx.n - 1))
    with pytest.raises(StructureConditionFailed):
        np_modify(lonely, coloring[:-1])
