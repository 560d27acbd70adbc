"""Train a QELM on a band-limited target, then replace it by Fourier surrogates.

    python demos/training_and_surrogates.py
"""

import numpy as np

from qelm.encoding import EncodingSpec
from qelm.fourier import frequency_set, spectrum_from_reduced
from qelm.model import (
    Dataset,
    FourierTarget,
    QelmModel,
    equidistant_dataset,
    predict,
    r2_score,
    random_observables,
    readout_matrix,
    train,
)
from qelm.reservoir import ReservoirSpec
from qelm.states import PauliString
from qelm.surrogate import full_fourier_surrogate, rff_surrogate, rmse, spectrum_weights


def main():
    rng = np.random.default_rng(1)
    target = FourierTarget.random(13, rng)
    data = equidistant_dataset(target, 200)
    xt = (data.x[:-1] + data.x[1:]) / 2
    obs = random_observables(3, 63, np.random.default_rng(2))
    res = ReservoirSpec.layered(3, 8, seed=3)
    print("test R2 against the number of observables (target has 13 frequencies)")
    for scheme in ("pauli", "exponential"):
        line = []
        for m in (4, 14, 30, 63):
            fit = train(QelmModel(EncodingSpec(scheme, 3), res, obs[:m]), data)
            line.append(f"M={m}: {r2_score(predict(fit, xt), target(xt)):.3f}")
        print(f"  {scheme:11s} " + ", ".join(line))

    model = QelmModel(EncodingSpec.exponential(3), ReservoirSpec.haar(4, seed=5), [PauliString("ZIII")])
    o = model.reduced_observables[0]
    f = lambda xs: readout_matrix(model, xs)[:, 0]
    omega = frequency_set(model.encoding)
    xs = rng.uniform(-np.pi, np.pi, 200)
    test = rng.uniform(-np.pi, np.pi, 500)
    data, hold = Dataset(xs, f(xs)), Dataset(test, f(test))
    full = full_fourier_surrogate(omega, data)
    print(f"\nfull surrogate over {len(omega)} frequencies: held-out RMSE {rmse(full(test), hold.y):.2e}")
    weights = spectrum_weights(spectrum_from_reduced(model.rho0, model.encoding, o))
    for k in (2, 5, 10, 14):
        errs = [rff_surrogate(weights, k, data, np.random.default_rng(s), holdout=hold).holdout_rmse for s in range(10)]
        print(f"  RFF k={k:2d}: median held-out RMSE {np.median(errs):.2e}")


if __name__ == "__main__":
    main()
