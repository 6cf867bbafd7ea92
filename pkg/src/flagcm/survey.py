"""Exhaustive sweeps over flag complexes on few vertices.

Every graph class on ``n <= max_vertices`` vertices is analysed once (its
independence complex is a flag complex on exactly ``n`` vertices), the
per-class records are merged in canonical order, and the inclusion
statements relating h-vectors of CM flag complexes to f-vectors are checked
against the resulting sets.  Verdicts only ever claim the absence of a
counterexample at the surveyed scale.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import asdict, dataclass, field
from itertools import combinations
from multiprocessing import get_context

from .complex import SimplicialComplex, cone_points, find_balanced_coloring
from .constructions import matching_quotient, polarize
from .decomposition import is_vd
from .enumeration import enumerate_graphs
from .graphs import (Graph, graph6, has_unique_perfect_matching, independence_complex,
                     is_unmixed, ordered_right_matching)
from .homology import is_cm, is_strongly_connected
from .kruskal_katona import is_f_vector

JOBS_ENV = "CMFLAG_JOBS"
CONDITIONS = ("ordered_right_matching", "strongly_connected", "cohen_macaulay",
              "unique_matching_unmixed", "vertex_decomposable")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SurveyConfig:
    max_vertices: int = 6
    jobs: int = field(default_factory=default_jobs)
    chunksize: int = 64


@dataclass(frozen=True)
class ClassRecord:
    key: str
    n: int
    dim: int
    pure: bool
    flag: bool
    balanced: bool
    cone_points: int
    vd: bool
    cm0: bool
    cm2: bool
    f: tuple[int, ...]
    h: tuple[int, ...]
    kk_ok: bool
    structure: tuple[bool, ...] | None = None  # the five conditions, when they apply

    @property
    def cm(self) -> bool:
        return self.cm0 and self.cm2


CSV_FIELDS = ("key", "n", "dim", "pure", "flag", "balanced", "cone_points", "vd",
              "cm0", "cm2", "f", "h", "kk_ok", "flag_realizable")


def structure_conditions(g: Graph, cx: SimplicialComplex, cm: bool | None = None) -> tuple[bool, ...]:
    """The five equivalent conditions for a (d-1)-dimensional flag complex on 2d vertices."""
    if cm is None:
        cm = is_cm(cx, 0) and is_cm(cx, 2)
    return (ordered_right_matching(g) is not None,
            is_strongly_connected(cx),
            cm,
            has_unique_perfect_matching(g) and is_unmixed(g),
            is_vd(cx))


def analyze_graph(g: Graph) -> ClassRecord:
    cx = independence_complex(g)
    pure = cx.is_pure()
    cm0 = is_cm(cx, 0)
    cm2 = is_cm(cx, 2)
    cones = cone_points(cx)
    structure = None
    if g.n and g.n == 2 * (cx.dim + 1) and not cones:
        structure = structure_conditions(g, cx, cm0 and cm2)
    return ClassRecord(
        key=graph6(g), n=g.n, dim=cx.dim, pure=pure, flag=True,
        balanced=find_balanced_coloring(cx) is not None,
        cone_points=len(cones), vd=pure and is_vd(cx), cm0=cm0, cm2=cm2,
        f=cx.f, h=cx.h, kk_ok=is_f_vector(cx.h), structure=structure)


def collect_records(config: SurveyConfig) -> list[ClassRecord]:
    graphs = [g for n in range(config.max_vertices + 1) for g in enumerate_graphs(n)]
    if config.jobs <= 1:
        return [analyze_graph(g) for g in graphs]
    with get_context("fork").Pool(config.jobs) as pool:
        return list(pool.imap(analyze_graph, graphs, config.chunksize))


def bipartite_witness(n: int, m: int) -> list[tuple[int, int]] | None:
    """First ``m`` edges of the balanced complete bipartite graph on ``n`` vertices."""
    left = n // 2
    edges = [(a, b) for a in range(left) for b in range(left, n)]
    if m > len(edges):
        return None
    return edges[:m]


def _sweep(name: str, left: dict, flag_f: dict, scale: int) -> dict:
    missing = sorted(h for h in left if h not in flag_f)
    return {
        "statement": name,
        "verdict": (f"no counterexample found at n <= {scale}" if not missing
                    else "counterexample found"),
        "counterexamples": [{"h": list(h), "complex": left[h]} for h in missing],
        "witnesses": [{"h": list(h), "complex": left[h], "flag_realization": flag_f[h]}
                      for h in sorted(left) if h in flag_f],
    }


def build_report(records: list[ClassRecord], max_vertices: int) -> dict:
    flag_f: dict = {}
    for r in records:
        flag_f.setdefault(r.f, r.key)

    tallies = []
    for n in range(max_vertices + 1):
        rows = [r for r in records if r.n == n]
        tallies.append({
            "n": n, "graphs": len(rows), "flag_complexes": len(rows),
            "cm_flag": sum(r.cm for r in rows), "vd_flag": sum(r.vd for r in rows),
            "balanced": sum(r.balanced for r in rows),
            "cm_field_disagreements": sum(r.cm0 != r.cm2 for r in rows)})

    cm_left: dict = {}
    vdb_left: dict = {}
    for r in records:
        if r.cm:
            cm_left.setdefault(r.h, r.key)
        if r.vd and r.balanced:
            vdb_left.setdefault(r.h, r.key)

    weak = [{"h": list(r.h), "complex": r.key} for r in records if r.cm and not r.kk_ok]
    field_split = [r.key for r in records if r.cm0 != r.cm2]

    # easy inclusion: polarize every flag complex small enough to stay in range
    easy_failures = []
    for r in records:
        if 2 * r.n > max_vertices:
            continue
        gamma = independence_complex(_graph(r.key))
        delta = polarize(gamma)
        if delta.h != r.f or delta.h not in vdb_left or delta.h not in cm_left:
            easy_failures.append(r.key)

    report = {
        "max_vertices": max_vertices,
        "tallies": tallies,
        "cm_field_disagreements": field_split,
        "h_vectors_cm_flag": [list(h) for h in sorted(cm_left)],
        "f_vectors_flag": [list(f) for f in sorted(flag_f)],
        "weak_kalai": {
            "statement": "h(CM flag) is an f-vector",
            "verdict": (f"no counterexample found at n <= {max_vertices}" if not weak
                        else "counterexample found"),
            "counterexamples": weak,
            "witnesses": [{"h": list(h), "complex": k, "realization": "rev-lex"}
                          for h, k in sorted(cm_left.items())],
        },
        "vd_balanced_flag": _sweep("h(VD balanced flag) = f(flag)", vdb_left, flag_f,
                                   max_vertices),
        "cm_flag": _sweep("h(CM flag) = f(flag)", cm_left, flag_f, max_vertices),
        "easy_inclusion": {
            "checked_up_to": max_vertices // 2,
            "failures": easy_failures,
        },
        "structure_theorem": structure_section(records, max_vertices),
        "short_h_vectors": short_h_section(records),
        "gitler_valencia": [r.key for r in records
                            if r.cm and not r.cone_points and r.n < 2 * (r.dim + 1)],
    }
    report["counterexample_found"] = bool(
        weak or field_split or easy_failures
        or report["vd_balanced_flag"]["counterexamples"]
        or report["cm_flag"]["counterexamples"]
        or report["structure_theorem"]["disagreements"]
        or report["structure_theorem"]["set_equality_failures"]
        or report["short_h_vectors"]["exceptions"]
        or report["gitler_valencia"])
    return report


def _graph(key: str) -> Graph:
    from .graphs import from_graph6
    return from_graph6(key)


def structure_section(records: list[ClassRecord], max_vertices: int) -> dict:
    size = len(CONDITIONS)
    matrix = [[0] * size for _ in range(size)]
    rows = [r for r in records if r.structure is not None]
    disagreements = []
    for r in rows:
        for i, j in combinations(range(size), 2):
            if r.structure[i] != r.structure[j]:
                matrix[i][j] += 1
                matrix[j][i] += 1
        if len(set(r.structure)) > 1:
            disagreements.append(r.key)

    set_failures = []
    per_d = []
    for d in range(1, max_vertices // 2 + 1):
        lhs = set()
        for r in rows:
            if r.n == 2 * d and r.structure[2]:
                lhs.add(r.h)
                if matching_quotient(independence_complex(_graph(r.key))).f != r.h:
                    set_failures.append(r.key)
        rhs = set()
        for r in records:
            if r.n == d:
                rhs.add(r.f)
                if polarize(independence_complex(_graph(r.key))).h != r.f:
                    set_failures.append(r.key)
        per_d.append({"d": d, "qualifying": sum(r.n == 2 * d for r in rows),
                      "pure_qualifying": sum(r.n == 2 * d and r.pure for r in rows),
                      "h_vectors": len(lhs), "f_vectors_on_d": len(rhs),
                      "equal": lhs == rhs})
        if lhs != rhs:
            set_failures.append(f"d={d}")
    return {"conditions": list(CONDITIONS), "agreement_matrix": matrix,
            "disagreements": disagreements, "set_equality": per_d,
            "set_equality_failures": set_failures}


def short_h_section(records: list[ClassRecord]) -> dict:
    exceptions, witnesses = [], []
    seen = set()
    for r in records:
        if not r.cm or len(r.h) != 3:
            continue
        _, n, m = r.h
        if m > n * n // 4:
            exceptions.append(r.key)
        elif r.h not in seen:
            seen.add(r.h)
            witnesses.append({"h": list(r.h), "complex": r.key,
                              "bipartite_edges": bipartite_witness(n, m)})
    return {"exceptions": exceptions, "witnesses": sorted(witnesses, key=lambda w: w["h"])}


def run_survey(config: SurveyConfig) -> tuple[list[ClassRecord], dict]:
    records = collect_records(config)
    return records, build_report(records, config.max_vertices)


def flag_realizable(record: ClassRecord, flag_f) -> str:
    if not record.cm:
        return ""
    return str(record.h in flag_f).lower()


def to_csv(records: list[ClassRecord]) -> str:
    flag_f = {r.f for r in records}
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow([r.key, r.n, r.dim, int(r.pure), int(r.flag), int(r.balanced),
                         r.cone_points, int(r.vd), int(r.cm0), int(r.cm2),
                         " ".join(map(str, r.f)), " ".join(map(str, r.h)),
                         int(r.kk_ok), flag_realizable(r, flag_f)])
    return buf.getvalue()


def to_json(records: list[ClassRecord], report: dict) -> str:
    rows = []
    for r in records:
        row = asdict(r)
        row["f"], row["h"] = list(r.f), list(r.h)
        if r.structure is not None:
            row["structure"] = list(r.structure)
        rows.append(row)
    return json.dumps({"report": report, "records": rows}, indent=1, sort_keys=True) + "\n"
