#!/usr/bin/env python3
"""Exploratory search for radar-model parameters (a, b, t_cycles) whose sweep
comes close to the published radar table.

The published radar sweep does not state its parameters, so this is a
coarse grid search, not a reproduction. Each candidate runs one `tdmarel
sweep`; the score is the RMS of log10(computed / published) over the 25 rows.

    tools/radar_fit.py --cli build/tdmarel --top 5
"""

import argparse
import itertools
import json
import math
import subprocess
import tempfile

PUBLISHED = [
    5.55e-07, 2.93e-06, 1.57e-05, 1.47e-05, 1.38e-05, 7.53e-05, 7.14e-05, 3.92e-04, 3.74e-04,
    3.57e-04, 3.42e-04, 0.00192067, 0.00184522, 0.0017695, 0.00170302, 0.00164584, 0.00158847,
    0.00907411, 0.008806, 0.00853722, 0.00826772, 0.00805156, 0.0077806, 0.0075632, 0.00734519,
]


def frange(lo, hi, steps):
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def sweep(cli, a, b, t_cycles):
    config = {
        "tdma": {"t_cyc_ms": {"start": 4, "end": 10, "step": 0.25}, "t_max_ms": 40},
        "zones": [{"t_z_ms": 1500,
                   "model": {"type": "radar", "a": a, "b": b, "t_cycles": t_cycles}}],
    }
    with tempfile.NamedTemporaryFile("w", suffix=".json") as f:
        json.dump(config, f)
        f.flush()
        out = subprocess.run([cli, "sweep", "--config", f.name],
                             capture_output=True, text=True, check=True).stdout
    return [float(line.split(",")[3]) for line in out.splitlines()[1:]]


def score(values):
    logs = [math.log10(max(v, 1e-300) / p) for v, p in zip(values, PUBLISHED)]
    return math.sqrt(sum(x * x for x in logs) / len(logs))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cli", default="build/tdmarel")
    ap.add_argument("--steps", type=int, default=8, help="grid points per parameter")
    ap.add_argument("--top", type=int, default=5)
    args = ap.parse_args()

    results = []
    for a, frac, t in itertools.product(frange(0.05, 0.5, args.steps),
                                        frange(0.05, 0.95, args.steps),
                                        frange(2, 100, args.steps)):
        b = frac * min(a, 1 - a)
        results.append((score(sweep(args.cli, a, b, t)), a, b, t))
    results.sort()
    for s, a, b, t in results[: args.top]:
        print(f"rms log10 error {s:.3f}: a={a:.4f} b={b:.4f} t_cycles={t:.1f}")


if __name__ == "__main__":
    main()
