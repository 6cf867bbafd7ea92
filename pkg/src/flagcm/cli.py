"""Command line: analyze, construct, kk, poincare, survey.

Exit status is 0 on success, 1 when a verification fails or a counterexample
turns up, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complex import (SimplicialComplex, cone_points, find_balanced_coloring, is_flag,
                      minimal_nonfaces, nonface_graph)
from .canonical import bits
from .constructions import h_to_f_complex, matching_quotient, polarize
from .decomposition import is_vertex_decomposable
from .graphs import independence_complex
from .homology import FieldChoice, is_cm, is_strongly_connected, reduced_betti
from .io import InputError, format_complex, read_complex, read_graph
from .kruskal_katona import first_violation, is_f_vector
from .series import koszul_obstruction, poincare_coeffs
from .survey import SurveyConfig, default_jobs, run_survey, to_csv, to_json

OK, FAILED, BAD_INPUT = 0, 1, 2


def _ints(tokens: list[str], what: str) -> list[int]:
    out = []
    for token in tokens:
        for part in token.replace(",", " ").split():
            try:
                out.append(int(part))
            except ValueError:
                raise InputError(f"{what}: {part!r} is not an integer") from None
    if not out:
        raise InputError(f"{what}: empty sequence")
    return out


def _field(text: str) -> FieldChoice:
    try:
        return FieldChoice(int(text))
    except ValueError:
        raise InputError(f"--field: {text!r} is not 0 or a prime") from None


def _load(args) -> SimplicialComplex:
    if getattr(args, "graph", False):
        return independence_complex(read_graph(args.file))
    return read_complex(args.file)


def _shift(faces) -> list[list[int]]:
    return [[v + 1 for v in bits(m)] for m in faces]


def _tree_json(tree) -> dict:
    def shift(node: dict) -> dict:
        if "simplex" in node:
            return {"simplex": [v + 1 for v in node["simplex"]]}
        return {"shed": node["shed"] + 1,
                "cone_points": [v + 1 for v in node["cone_points"]],
                "deletion": shift(node["deletion"]), "link": shift(node["link"])}
    return shift(tree.to_json())


def analyze(args) -> int:
    cx = _load(args)
    fc = _field(args.field)
    pure = cx.is_pure()
    flag = is_flag(cx)
    coloring = find_balanced_coloring(cx)
    vd, tree = is_vertex_decomposable(cx) if pure else (False, None)
    betti = reduced_betti(cx, fc)
    report = {
        "n": cx.n, "dim": cx.dim, "facets": len(cx.facets),
        "f": list(cx.f), "h": list(cx.h),
        "pure": pure, "flag": flag,
        "balanced": coloring is not None,
        "coloring": [c + 1 for c in coloring] if coloring is not None else None,
        "cone_points": [v + 1 for v in cone_points(cx)],
        "minimal_nonfaces": _shift(minimal_nonfaces(cx)),
        "field": fc.characteristic,
        "reduced_betti": {str(k - 1): b for k, b in enumerate(betti.betti)},
        "cm": is_cm(cx, fc),
        "strongly_connected": is_strongly_connected(cx),
        "vd": vd,
        "h_is_f_vector": is_f_vector(cx.h),
    }
    if flag:
        report["nonface_edges"] = [[a + 1, b + 1] for a, b in nonface_graph(cx).edges()]
    if args.witness and tree is not None:
        report["vd_witness"] = _tree_json(tree)
    if args.format == "json":
        print(json.dumps(report, indent=1))
    else:
        for key, value in report.items():
            print(f"{key}: {_text(value)}")
    return OK


def _text(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return "none"
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return str(value)


def construct(args) -> int:
    src = read_complex(args.file)
    checks = {}
    if args.kind == "polarize":
        out = polarize(src)
        checks["h_out_equals_f_in"] = out.h == src.f
        checks["flag"] = is_flag(out)
        checks["balanced"] = find_balanced_coloring(out) is not None
        checks["vertex_decomposable"] = is_vertex_decomposable(out)[0]
        checks["no_cone_points"] = not cone_points(out)
    elif args.kind == "h2f":
        out = h_to_f_complex(src)
        checks["f_out_equals_h_in"] = out.f == src.h
    else:
        out = matching_quotient(src)
        checks["f_out_equals_h_in"] = out.f == src.h
        checks["flag"] = is_flag(out)
    block = {"construction": args.kind,
             "input": {"f": list(src.f), "h": list(src.h)},
             "output": {"f": list(out.f), "h": list(out.h)},
             "checks": checks}
    sys.stdout.write(format_complex(out))
    print("# " + json.dumps(block, sort_keys=True))
    return OK if all(checks.values()) else FAILED


def kk(args) -> int:
    seq = _ints(args.seq, "kk")
    ok = is_f_vector(seq)
    print(f"admissible: {str(ok).lower()}")
    if not ok:
        if seq[0] != 1:
            print("reason: first entry must be 1")
        elif any(x <= 0 for x in seq[1:]):
            print("reason: entries after the first must be positive")
        else:
            k, value, bound = first_violation(seq)
            print(f"first violation: f_{k} = {value} exceeds {bound}, "
                  f"the bound from f_{k - 1} = {seq[k]}")
    return OK


def poincare(args) -> int:
    h = _ints(args.h, "poincare")
    if h[0] != 1:
        raise InputError(f"poincare: h must start with 1, got {h[0]}")
    if not 1 <= args.terms <= 10000:
        raise InputError(f"--terms: {args.terms} outside 1..10000")
    coeffs = poincare_coeffs(h, args.terms)
    width = len(str(args.terms - 1))
    for i, c in enumerate(coeffs):
        mark = "  <- negative" if c < 0 else ""
        print(f"{i:>{width}}  {c}{mark}")
    hit = koszul_obstruction(h, args.terms - 1)
    print(f"obstruction: {hit if hit is not None else 'none'}")
    return OK


def survey(args) -> int:
    if not 0 <= args.max_vertices <= 9:
        raise InputError(f"--max-vertices: {args.max_vertices} outside 0..9")
    if args.jobs < 1:
        raise InputError(f"--jobs: {args.jobs} must be positive")
    records, report = run_survey(SurveyConfig(max_vertices=args.max_vertices, jobs=args.jobs))
    text = to_csv(records) if args.format == "csv" else to_json(records, report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    summary = sys.stderr if not args.out else sys.stdout
    for name in ("weak_kalai", "vd_balanced_flag", "cm_flag"):
        print(f"{name}: {report[name]['verdict']}", file=summary)
    st = report["structure_theorem"]
    print(f"structure_theorem: {len(st['disagreements'])} disagreements, "
          f"set equality {'holds' if not st['set_equality_failures'] else 'fails'}", file=summary)
    return FAILED if report["counterexample_found"] else OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagcm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="invariants of a complex")
    a.add_argument("file")
    a.add_argument("--field", default="0", help="0 or a prime")
    a.add_argument("--format", choices=("json", "text"), default="text")
    a.add_argument("--graph", action="store_true", help="file lists edges; use the independence complex")
    a.add_argument("--witness", action="store_true", help="include the VD witness tree")
    a.set_defaults(func=analyze)

    c = sub.add_parser("construct", help="polarize, h2f or quotient a complex")
    c.add_argument("kind", choices=("polarize", "h2f", "quotient"))
    c.add_argument("file")
    c.set_defaults(func=construct)

    k = sub.add_parser("kk", help="Kruskal-Katona admissibility of an f-vector")
    k.add_argument("seq", nargs="+")
    k.set_defaults(func=kk)

    q = sub.add_parser("poincare", help="coefficients of 1/sum (-1)^i h_i z^i")
    q.add_argument("h", nargs="+")
    q.add_argument("--terms", type=int, default=12)
    q.set_defaults(func=poincare)

    s = sub.add_parser("survey", help="exhaustive sweep over small flag complexes")
    s.add_argument("--max-vertices", type=int, default=6)
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--out")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=survey)
    return p


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 0) is None:
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
