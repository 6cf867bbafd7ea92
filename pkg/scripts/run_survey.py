#!/usr/bin/env python3
"""Sweep flag complexes on few vertices and write the JSON and CSV reports."""

import argparse
import time
from pathlib import Path

from flagcm.survey import SurveyConfig, default_jobs, run_survey, to_csv, to_json


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--out-dir", default="survey_out")
    args = p.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    records, report = run_survey(SurveyConfig(max_vertices=args.max_vertices, jobs=args.jobs))
    elapsed = time.perf_counter() - start

    stem = f"survey_n{args.max_vertices}"
    (out / f"{stem}.json").write_text(to_json(records, report), encoding="utf-8")
    (out / f"{stem}.csv").write_text(to_csv(records), encoding="utf-8")

    print(f"{len(records)} classes in {elapsed:.1f} s with {args.jobs} job(s)")
    print(f"{'n':>2} {'graphs':>7} {'CM':>5} {'VD':>5} {'balanced':>9}")
    for t in report["tallies"]:
        print(f"{t['n']:>2} {t['graphs']:>7} {t['cm_flag']:>5} {t['vd_flag']:>5} {t['balanced']:>9}")
    for name in ("weak_kalai", "vd_balanced_flag", "cm_flag"):
        print(f"{name}: {report[name]['verdict']}")
    for row in report["structure_theorem"]["set_equality"]:
        print(f"d={row['d']}: {row['h_vectors']} h-vectors vs {row['f_vectors_on_d']} "
              f"f-vectors, equal={row['equal']}")


if __name__ == "__main__":
    main()
