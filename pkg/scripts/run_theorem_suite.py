#!/usr/bin/env python
"""Run the ratio experiment for every registered boundedness statement.

Writes one CSV per theorem id into the output directory and prints a
one-line summary (per-n max ratio and cross-n growth factor) for each.
"""

import argparse
import json
import pathlib

from gaborlab.lab import (
    THEOREM_IDS,
    ExperimentConfig,
    multiplication_experiment,
    ratio_experiment,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="8,12,16", help="comma-separated group sizes")
    ap.add_argument("--p", type=float, default=1.5)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--outdir", default="reports")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    n_values = tuple(int(tok) for tok in args.n.split(","))

    for theorem in THEOREM_IDS:
        cfg = ExperimentConfig(theorem_id=theorem, n_values=n_values,
                               p=args.p, trials=args.trials, seed=args.seed)
        if theorem == "T4.2a":
            report = multiplication_experiment(
                n_values, args.seed, cfg.permutation, cfg.exponents(),
                args.trials)
        else:
            report = ratio_experiment(cfg)
        path = outdir / f"{theorem}.csv"
        report.write_csv(path)
        print(json.dumps(report.summary(), sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
