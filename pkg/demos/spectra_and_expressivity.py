"""Walk through frequency sets, coefficient spectra and richness.

    python demos/spectra_and_expressivity.py
"""

import numpy as np

from qelm.encoding import EncodingSpec
from qelm.fourier import expressivity_report, frequency_set, richness, spectrum_direct
from qelm.reservoir import ReservoirSpec, realize
from qelm.states import PauliString, density, plus_state, sample_pauli_strings


def main():
    print("frequency sets")
    for n in (1, 2, 3):
        pauli = frequency_set(EncodingSpec.pauli(n))
        expo = frequency_set(EncodingSpec.exponential(n))
        print(f"  n_A={n}: Pauli |Omega|={len(pauli)}, exponential |Omega|={len(expo)} (max {expo.max:g})")

    n_a, n_h = 2, 2
    enc = EncodingSpec.exponential(n_a)
    u_r = realize(ReservoirSpec.haar(n_a + n_h, seed=7))
    rho0 = density(plus_state(n_a))
    spec = spectrum_direct(rho0, enc, u_r, PauliString("XIII"))
    print("\n|a_w| for X on the first qubit behind a Haar reservoir")
    for w, a in zip(spec.frequencies, spec.coefficients):
        print(f"  w={w:+.0f}  |a|={abs(a):.4f}")

    print("\nrank of the coefficient matrix as observables are added")
    rng = np.random.default_rng(0)
    obs = sample_pauli_strings(n_a + n_h, 12, rng)
    for m in (1, 4, 8, 9, 12):
        rep = expressivity_report([spectrum_direct(rho0, enc, u_r, o) for o in obs[:m]], n_a + n_h)
        print(f"  M={m:2d}: rank {rep.rank} (bound {rep.bound})")

    print("\nnormalized richness, n_H = 4")
    for kind in ("identity", "integrable", "chaotic", "haar"):
        vals = []
        for n in (1, 2, 3):
            u = realize(ReservoirSpec.named(kind, n + 4, seed=0))
            vals.append(richness(EncodingSpec.exponential(n), u, density(plus_state(n)))[1])
        print(f"  {kind:10s} " + "  ".join(f"{v:.3f}" for v in vals))


if __name__ == "__main__":
    main()
