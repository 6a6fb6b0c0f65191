#!/usr/bin/env python3
"""Regenerate every comparison dataset (sweeps, contours, ranking, sensitivity).

Writes plot-ready CSVs into --outdir by driving the CLI with the standard
environment (kappa_ex = 1e6 Hz, I_g' = 1 Hz, delta = 2e9 Hz, alpha = 0.5):

  contour_efficiency.csv   efficiency thresholds 0.5 / 0.7 / 0.8 in (g, kappa)
  contour_infidelity.csv   infidelity thresholds 0.2 / 0.3 / 0.5 in (g, kappa)
  sweep_gk.csv             full metric grid over (g, kappa), gamma = 1e6 Hz
  sweep_ggamma.csv         full metric grid over (g, gamma), kappa = 1e6 Hz
  bench.csv                ranked technology registry under the same environment
  sens.csv                 score-vs-g sensitivity for three kappa/gamma ranges
"""

import argparse
import sys

from interlink_dse.cli import main as cli_main


def run(args: list[str]) -> None:
    code = cli_main(args)
    if code != 0:
        sys.exit(code)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="figure_data")
    parser.add_argument("--n", type=int, default=200, help="grid nodes per axis")
    parser.add_argument("--plots", action="store_true", help="also emit matplotlib scripts")
    opts = parser.parse_args()

    common = ["--outdir", opts.outdir]
    if opts.plots:
        common.append("--emit-plot-script")
    grid = ["--xn", str(opts.n), "--yn", str(opts.n)]

    run(["contour", *common, *grid, "--metric", "efficiency", "--levels", "0.5,0.7,0.8"])
    run(["contour", *common, *grid, "--metric", "infidelity", "--levels", "0.2,0.3,0.5"])
    run(["sweep", *common, *grid, "--plane", "gk"])
    run(["sweep", *common, *grid, "--plane", "ggamma"])
    run(["bench", *common])
    run(["sens", *common, "--gn", str(opts.n), "--pairs", "1e4:1e4,1e6:1e6,1e8:1e8"])


if __name__ == "__main__":
    main()
