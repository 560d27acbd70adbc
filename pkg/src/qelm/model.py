"""End-to-end QELM: readouts, ridge training, scoring and persistence."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Sequence

import numpy as np

from .encoding import EncodingSpec, encode, encode_density
from .fourier import FourierSpectrum, reduced_observable, spectrum_from_reduced
from .linalg import kron
from .reservoir import ReservoirSpec, realize
from .states import PauliString, density, expectation, plus_state, sample_pauli_strings, sample_shots, zero_state

DEFAULT_RIDGE = 1e-10


@dataclass
class Dataset:
    """Scalar regression data ``{(x, y)}``."""

    x: np.ndarray
    y: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float).ravel()
        self.y = np.asarray(self.y, dtype=float).ravel()
        if self.x.shape != self.y.shape:
            raise ValueError("x and y differ in length")
        if not np.all(np.isfinite(self.x)):
            raise ValueError("x values must be finite")

    def __len__(self) -> int:
        return int(self.x.size)

    def to_csv(self, path) -> None:
        np.savetxt(path, np.column_stack([self.x, self.y]), fmt="%.17g", delimiter=",", header="x,y", comments="")

    @classmethod
    def from_csv(cls, path) -> "Dataset":
        arr = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(arr[:, 0], arr[:, 1])


@dataclass(frozen=True)
class FourierTarget:
    """Real trigonometric polynomial ``sum_k a_k cos(kx) + b_k sin(kx)``, ``k = 1..K``."""

    a: np.ndarray
    b: np.ndarray

    @classmethod
    def random(cls, k_max: int, rng: np.random.Generator) -> "FourierTarget":
        return cls(rng.uniform(-1.0, 1.0, k_max), rng.uniform(-1.0, 1.0, k_max))

    @property
    def k_max(self) -> int:
        return len(self.a)

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        k = np.arange(1, self.k_max + 1)
        kx = np.multiply.outer(x, k)
        return np.cos(kx) @ self.a + np.sin(kx) @ self.b


def equidistant_dataset(target, n_points: int, lo: float = 0.0, hi: float = np.pi, meta=None) -> Dataset:
    x = np.linspace(lo, hi, n_points)
    return Dataset(x, target(x), dict(meta or {}))


@dataclass
class QelmModel:
    """Encoding, reservoir and measured observables plus the trained readout weights."""

    encoding: EncodingSpec
    reservoir: ReservoirSpec
    observables: Sequence
    eta: np.ndarray | None = None
    eta0: float = 0.0
    rho0: np.ndarray | None = None
    shots: int | None = None
    seed: int = 0

    def __post_init__(self):
        obs = []
        for o in self.observables:
            obs.append(PauliString(o) if isinstance(o, str) else o)
        self.observables = tuple(obs)
        if not self.observables:
            raise ValueError("a model needs at least one observable")
        if self.reservoir.n_total < self.encoding.n_accessible:
            raise ValueError("reservoir is smaller than the accessible register")
        if self.rho0 is None:
            self.rho0 = density(plus_state(self.encoding.n_accessible))
        self.rho0 = np.asarray(self.rho0, dtype=complex)
        if self.eta is not None:
            self.eta = np.asarray(self.eta, dtype=float)
            if self.eta.shape != (self.n_observables,):
                raise ValueError("eta length must equal the number of observables")

    @property
    def n_observables(self) -> int:
        return len(self.observables)

    @property
    def n_hidden(self) -> int:
        return self.reservoir.n_total - self.encoding.n_accessible

    @cached_property
    def u_r(self) -> np.ndarray:
        return realize(self.reservoir)

    @cached_property
    def reduced_observables(self) -> np.ndarray:
        """Stack of accessible-space observables, shape ``(M, d_A, d_A)``."""
        return np.stack(
            [reduced_observable(self.u_r, o, self.encoding.n_accessible, self.n_hidden) for o in self.observables]
        )


def readout_matrix(model: QelmModel, xs, rng: np.random.Generator | None = None) -> np.ndarray:
    """``<O_k>_x`` for every input, shape ``(len(xs), M)``.

    Exact unless ``model.shots`` is set, in which case each entry is a
    shot-sampled estimate drawn from ``rng``.
    """
    rho = encode_density(model.encoding, xs, model.rho0)
    phi = np.einsum("kji,bij->bk", model.reduced_observables, rho).real
    if model.shots is not None:
        if rng is None:
            raise ValueError("shot sampling needs an rng")
        phi = np.vectorize(lambda v: sample_shots(v, model.shots, rng))(phi)
    return phi


def readout_vector(model: QelmModel, x: float, rng: np.random.Generator | None = None) -> np.ndarray:
    return readout_matrix(model, [x], rng)[0]


def pipeline_expectation(rho0: np.ndarray, spec: EncodingSpec, u_r: np.ndarray, obs, x: float) -> float:
    """Reference evaluation of one readout through the full density matrix."""
    n_hidden = int(round(np.log2(u_r.shape[0]))) - spec.n_accessible
    u = encode(spec, x)
    rho = kron(u @ rho0 @ u.conj().T, density(zero_state(n_hidden)) if n_hidden else np.ones((1, 1)))
    return expectation(u_r @ rho @ u_r.conj().T, obs)


def predict(model: QelmModel, xs, rng: np.random.Generator | None = None) -> np.ndarray:
    if model.eta is None:
        raise ValueError("model is not trained")
    return readout_matrix(model, xs, rng) @ model.eta + model.eta0


def ridge_solve(phi: np.ndarray, y: np.ndarray, ridge: float = DEFAULT_RIDGE) -> tuple[np.ndarray, float]:
    """Least squares with an unpenalised intercept.

    Minimises ``|phi eta + eta0 - y|^2 + ridge |eta|^2`` by stacking the
    penalty rows under the design; ``lstsq`` returns the minimum-norm
    solution when the system is rank deficient.
    """
    if ridge < 0:
        raise ValueError("ridge must be non-negative")
    phi = np.asarray(phi, dtype=float)
    y = np.asarray(y, dtype=float)
    n, m = phi.shape
    if n < 1:
        raise ValueError("need at least one training pair")
    design = np.column_stack([phi, np.ones(n)])
    target = y
    if ridge > 0:
        penalty = np.zeros((m, m + 1))
        penalty[:, :m] = np.sqrt(ridge) * np.eye(m)
        design = np.vstack([design, penalty])
        target = np.concatenate([y, np.zeros(m)])
    coef, *_ = np.linalg.lstsq(design, target, rcond=None)
    return coef[:m], float(coef[m])


def train(model: QelmModel, data: Dataset, ridge: float = DEFAULT_RIDGE, rng=None) -> QelmModel:
    """Return a copy of ``model`` with ridge-fitted ``eta`` and ``eta0``."""
    phi = readout_matrix(model, data.x, rng)
    eta, eta0 = ridge_solve(phi, data.y, ridge)
    out = dataclasses.replace(model, eta=eta, eta0=eta0)
    # realised reservoir and reduced observables are unchanged
    out.__dict__.update({k: model.__dict__[k] for k in ("u_r", "reduced_observables") if k in model.__dict__})
    return out


def r2_score(predictions, targets) -> float:
    p = np.asarray(predictions, dtype=float)
    t = np.asarray(targets, dtype=float)
    if p.shape != t.shape or p.size < 2:
        raise ValueError("need two equal-length arrays with at least two entries")
    ss_tot = float(np.sum((t - t.mean()) ** 2))
    if ss_tot == 0.0:
        raise ValueError("R^2 is undefined for constant targets")
    return 1.0 - float(np.sum((t - p) ** 2)) / ss_tot


def observable_spectra(model: QelmModel) -> list[FourierSpectrum]:
    return [
        spectrum_from_reduced(model.rho0, model.encoding, o, str(label))
        for o, label in zip(model.reduced_observables, model.observables)
    ]


def model_spectrum(model: QelmModel) -> FourierSpectrum:
    """Spectrum of ``f_eta``: ``b_w = sum_k eta_k a_w^(k)`` plus ``eta0`` at ``w = 0``."""
    if model.eta is None:
        raise ValueError("model is not trained")
    spectra = observable_spectra(model)
    coeffs = sum(e * s.coefficients for e, s in zip(model.eta, spectra))
    freqs = spectra[0].frequencies
    coeffs = coeffs + model.eta0 * (np.abs(freqs) <= 1e-9)
    return FourierSpectrum(freqs, coeffs, "f_eta")


def random_observables(n: int, m: int, rng: np.random.Generator) -> list[PauliString]:
    return sample_pauli_strings(n, m, rng)


# -- persistence ----------------------------------------------------------

def model_to_dict(model: QelmModel) -> dict:
    if not all(isinstance(o, PauliString) for o in model.observables):
        raise ValueError("only Pauli-string observables can be serialised")
    return {
        "encoding": model.encoding.to_dict(),
        "reservoir": model.reservoir.to_dict(),
        "observables": [str(o) for o in model.observables],
        "eta": None if model.eta is None else [float(v) for v in model.eta],
        "eta0": float(model.eta0),
        "seed": int(model.seed),
    }


def model_from_dict(d: dict) -> QelmModel:
    return QelmModel(
        encoding=EncodingSpec.from_dict(d["encoding"]),
        reservoir=ReservoirSpec.from_dict(d["reservoir"]),
        observables=[PauliString(s) for s in d["observables"]],
        eta=None if d.get("eta") is None else np.asarray(d["eta"], dtype=float),
        eta0=float(d.get("eta0", 0.0)),
        seed=int(d.get("seed", 0)),
    )


def save_model(model: QelmModel, path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model), indent=2, sort_keys=True) + "\n")


def load_model(path) -> QelmModel:
    return model_from_dict(json.loads(Path(path).read_text()))
