#!/usr/bin/env python3
"""Run the canonical sample query against the bundled roster and print the
ranked output in raw and table form, for each metric.

    python scripts/reproduce_sample_run.py [--data data/sample_roster.csv]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from advisor_match import Metric, QueryProfile, load_roster, recommend, validate_vector
from advisor_match.cli import render_raw, render_table

SAMPLE_RATINGS = [5.0, 4.5, 1.0, 2.5, 3.0]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    default_data = Path(__file__).resolve().parent.parent / "data" / "sample_roster.csv"
    parser.add_argument("--data", type=Path, default=default_data)
    parser.add_argument("--k", type=int, default=5)
    args = parser.parse_args()

    roster = load_roster(args.data)
    query = QueryProfile(validate_vector(roster.schema, SAMPLE_RATINGS))
    print(f"roster: {args.data} ({len(roster)} profiles)")
    print(f"query ratings: {SAMPLE_RATINGS}")
    for metric in Metric:
        print(f"\n== {metric.value} ==")
        results = recommend(query, roster, k=args.k, metric=metric)
        print(render_raw(results))
        print()
        print(render_table(results))


if __name__ == "__main__":
    main()
