#!/usr/bin/env python3
"""Generate a random roster CSV on the half-point rating grid, for demos and
load experiments.

    python scripts/generate_roster.py --n 50 --seed 7 --out /tmp/roster.csv
"""

from __future__ import annotations

import argparse
import random
import sys

from advisor_match import DEFAULT_SCHEMA, InterestVector, SupervisorProfile, build_roster, serialize_roster

FIRST = ["Aina", "Badrul", "Chong", "Devi", "Emran", "Farah", "Gopal", "Hana", "Iskandar", "Julia"]
LAST = ["Aziz", "Bakar", "Chan", "Daud", "Eusoff", "Fauzi", "Gan", "Hamid", "Idris", "Jalil"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=argparse.FileType("w", encoding="utf-8"), default=sys.stdout)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    grid = [x / 2 for x in range(11)]  # 0.0 .. 5.0 step 0.5
    profiles = []
    for i in range(args.n):
        name = f"{rng.choice(FIRST)} {rng.choice(LAST)} {i + 1:03d}"
        vector = InterestVector(tuple(rng.choice(grid) for _ in DEFAULT_SCHEMA))
        profiles.append(SupervisorProfile(name, vector))
    args.out.write(serialize_roster(build_roster(DEFAULT_SCHEMA, profiles)))


if __name__ == "__main__":
    main()
