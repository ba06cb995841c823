#!/usr/bin/env python
"""Run the sharpness blow-up families and their compliant control arms.

For each SHARP-* id this prints the violated-exponent growth factor and
the control-arm growth factor across the requested group sizes.
"""

import argparse
import json
import pathlib

from gaborlab.lab import SHARPNESS_IDS, ExperimentConfig, sharpness_experiment


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="8,16,32", help="comma-separated group sizes")
    ap.add_argument("--p", type=float, default=2.0)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--outdir", default="reports")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    n_values = tuple(int(tok) for tok in args.n.split(","))

    for theorem in SHARPNESS_IDS:
        for control in (False, True):
            cfg = ExperimentConfig(theorem_id=theorem, n_values=n_values,
                                   p=args.p, trials=args.trials,
                                   seed=args.seed, control_arm=control)
            report = sharpness_experiment(cfg)
            arm = "control" if control else "violated"
            report.write_csv(outdir / f"{theorem}-{arm}.csv")
            summary = report.summary()
            summary["arm"] = arm
            print(json.dumps(summary, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
