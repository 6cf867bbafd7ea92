import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from flagcm.complex import SimplicialComplex, from_facets
from flagcm.graphs import Graph, independence_complex

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def complexes(draw, min_n=1, max_n=7):
    """Complexes on exactly ``n`` vertices: random faces plus singletons for coverage."""
    n = draw(st.integers(min_n, max_n))
    faces = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=n),
                          max_size=8))
    covered = set().union(*faces) if faces else set()
    faces = [sorted(f) for f in faces] + [[v] for v in range(n) if v not in covered]
    return from_facets(n, faces)


@st.composite
def flag_complexes(draw, min_n=0, max_n=7):
    return independence_complex(draw(graphs(min_n, max_n)))


def permutations_of(n):
    return st.permutations(list(range(n)))


# -- acceptance summary -------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def c5_complex() -> SimplicialComplex:
    return independence_complex(C5)
