import csv
import io
import json

import pytest

from flagcm.graphs import Graph, from_graph6, independence_complex
from flagcm.survey import (CSV_FIELDS, JOBS_ENV, SurveyConfig, analyze_graph,
                           bipartite_witness, default_jobs, run_survey, to_csv, to_json)


@pytest.fixture(scope="module")
def survey6():
    return run_survey(SurveyConfig(max_vertices=6, jobs=1))


def test_default_jobs(monkeypatch):
    monkeypatch.setenv(JOBS_ENV, "3")
    assert default_jobs() == 3 and SurveyConfig().jobs == 3
    monkeypatch.setenv(JOBS_ENV, "many")
    assert default_jobs() == 1
    monkeypatch.delenv(JOBS_ENV)
    assert default_jobs() == 1


def test_tallies(survey6):
    records, report = survey6
    assert [t["graphs"] for t in report["tallies"]] == [1, 1, 2, 4, 11, 34, 156]
    assert len(records) == 209
    assert all(t["cm_field_disagreements"] == 0 for t in report["tallies"])


def test_verdict_wording(survey6):
    _, report = survey6
    for name in ("weak_kalai", "vd_balanced_flag", "cm_flag"):
        assert report[name]["verdict"] == "no counterexample found at n <= 6"
        assert report[name]["counterexamples"] == []
        assert "verified" not in report[name]["verdict"]
    assert report["counterexample_found"] is False


def test_witnesses_are_checkable(survey6):
    _, report = survey6
    for w in report["cm_flag"]["witnesses"]:
        h = tuple(w["h"])
        assert independence_complex(from_graph6(w["complex"])).h == h
        assert independence_complex(from_graph6(w["flag_realization"])).f == h


def test_c5_record():
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    r = analyze_graph(c5)
    assert r.h == (1, 3, 1) and r.cm and r.kk_ok and r.vd and not r.balanced
    assert r.structure is None


def test_structure_single_edge():
    r = analyze_graph(Graph.from_edges(2, [(0, 1)]))
    assert r.structure == (True,) * 5


def test_short_h_vectors(survey6):
    _, report = survey6
    section = report["short_h_vectors"]
    assert section["exceptions"] == []
    for w in section["witnesses"]:
        _, n, m = w["h"]
        edges = w["bipartite_edges"]
        assert len(edges) == m and m <= n * n // 4
        # the clique complex of a bipartite graph has no triangles
        comp = Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)
                                    if (a, b) not in set(map(tuple, edges))])
        assert independence_complex(comp).f == tuple(w["h"])
    assert bipartite_witness(4, 5) is None and bipartite_witness(4, 4) is not None


def test_structure_section(survey6):
    _, report = survey6
    st = report["structure_theorem"]
    assert st["disagreements"] == [] and st["set_equality_failures"] == []
    assert all(row["equal"] for row in st["set_equality"])
    assert all(x == 0 for row in st["agreement_matrix"] for x in row)
    assert report["gitler_valencia"] == []


def test_csv_schema(survey6):
    records, _ = survey6
    rows = list(csv.reader(io.StringIO(to_csv(records))))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == len(records) + 1
    cm_rows = [r for r in rows[1:] if r[8] == "1" and r[9] == "1"]
    assert cm_rows and all(r[13] == "true" for r in cm_rows)


def test_json_is_stable(survey6):
    records, report = survey6
    text = to_json(records, report)
    assert json.loads(text)["report"]["max_vertices"] == 6
    assert text == to_json(records, report)


def test_jobs_do_not_change_output(survey6):
    records, report = survey6
    base = to_json(records, report)
    for jobs in (2, 4):
        assert to_json(*run_survey(SurveyConfig(max_vertices=6, jobs=jobs))) == base
