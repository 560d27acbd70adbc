"""Exponential concentration from four directions: inputs, reservoirs, measurement and noise.

    python demos/concentration_tour.py
"""

import numpy as np

from qelm.concentration import (
    SweepConfig,
    fit_log_slope,
    global_measurement_experiment,
    hypothesis_success_exact,
    noise_concentration_experiment,
    var_over_inputs,
    var_over_reservoirs,
)
from qelm.linalg import derive_rng


def main():
    print("variance over inputs of <ZZ>, deep layered encoding")
    cfg = SweepConfig("var_over_inputs", (2, 3, 4, 5), depths=(40,), n_samples=1000, seed=0)
    for r in var_over_inputs(cfg, n_boot=20):
        print(f"  n_A={r['n_A']}: {r['value']:.5f} +- {r['stderr']:.5f}")

    print("\nvariance over Haar reservoirs of <Z_1> (exact value in brackets)")
    for r in var_over_reservoirs(range(2, 7), 500, seed=0, n_boot=20):
        if r["statistic"] == "variance":
            print(f"  n={r['n_A'] + r['n_H']}: {r['value']:.5f} [{r['bound']:.5f}]")

    print("\nglobal projector with Haar single-qubit encodings: E<O>^2 against (1/3)^n_A")
    for n_a in range(1, 6):
        r = global_measurement_experiment(n_a, 0, None, 4000, derive_rng(0, (n_a,)))
        print(f"  n_A={n_a}: {r.second_moment_mc:.5f} vs {(1 / 3) ** n_a:.5f}")

    print("\nnoisy re-uploading, n_A = 3: decay rate of the mean distance per layer")
    depths = list(range(1, 16))
    for p in (0.05, 0.1, 0.2):
        pts = noise_concentration_experiment(3, 0, depths, [p], 10, seed=0)
        print(f"  p={p}: slope {fit_log_slope(depths, [q.mean for q in pts]):.3f}")

    print("\ntelling p = 1/2 + 2^-n from a fair coin with n^2 samples")
    for n in (2, 4, 6, 8, 10):
        print(f"  n={n:2d}: success {hypothesis_success_exact(0.5 + 2.0**-n, n * n):.4f}")


if __name__ == "__main__":
    main()
