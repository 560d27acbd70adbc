"""Classical surrogates built from real Fourier features."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .fourier import FrequencySet
from .model import DEFAULT_RIDGE, Dataset


def fourier_features(x, omegas) -> np.ndarray:
    """Columns ``1`` for ``w = 0`` and ``cos(w x), sin(w x)`` for each ``w > 0``."""
    x = np.asarray(x, dtype=float)
    cols = []
    for w in omegas:
        if abs(w) <= 1e-9:
            cols.append(np.ones_like(x))
        else:
            cols.append(np.cos(w * x))
            cols.append(np.sin(w * x))
    return np.column_stack(cols) if cols else np.zeros((x.size, 0))


@dataclass(frozen=True)
class FourierSurrogate:
    """Linear model over a fixed set of non-negative frequencies."""

    omegas: np.ndarray
    weights: np.ndarray

    def __call__(self, x) -> np.ndarray:
        return fourier_features(x, self.omegas) @ self.weights


def fit_surrogate(omegas, data: Dataset, ridge: float = DEFAULT_RIDGE) -> FourierSurrogate:
    omegas = np.unique(np.abs(np.asarray(omegas, dtype=float)))
    phi = fourier_features(data.x, omegas)
    design, target = phi, data.y
    if ridge > 0:
        k = phi.shape[1]
        design = np.vstack([phi, np.sqrt(ridge) * np.eye(k)])
        target = np.concatenate([data.y, np.zeros(k)])
    w, *_ = np.linalg.lstsq(design, target, rcond=None)
    return FourierSurrogate(omegas, w)


def full_fourier_surrogate(omega_set: FrequencySet, data: Dataset, ridge: float = DEFAULT_RIDGE) -> FourierSurrogate:
    """Fit every frequency of ``omega_set`` (the complete classical surrogate)."""
    return fit_surrogate(omega_set.nonnegative, data, ridge)


@dataclass(frozen=True)
class RFFResult:
    surrogate: FourierSurrogate
    sampled: np.ndarray
    train_rmse: float
    holdout_rmse: float | None


def rmse(a, b) -> float:
    return float(np.sqrt(np.mean((np.asarray(a) - np.asarray(b)) ** 2)))


def rff_surrogate(
    spectrum_weights: Mapping[float, float],
    k: int,
    data: Dataset,
    rng: np.random.Generator,
    ridge: float = DEFAULT_RIDGE,
    holdout: Dataset | None = None,
) -> RFFResult:
    """Random-Fourier-feature surrogate.

    ``k`` distinct frequencies are drawn without replacement with probability
    proportional to their weight; the constant feature is always included.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    omegas = np.array(sorted(spectrum_weights), dtype=float)
    w = np.array([spectrum_weights[o] for o in sorted(spectrum_weights)], dtype=float)
    if np.any(w < 0):
        raise ValueError("weights must be non-negative")
    if w.sum() <= 0:
        raise ValueError("weights must not all be zero")
    n_nonzero = int(np.count_nonzero(w))
    pick = rng.choice(omegas.size, size=min(k, n_nonzero), replace=False, p=w / w.sum())
    sampled = np.sort(omegas[pick])
    sur = fit_surrogate(np.union1d(sampled, [0.0]), data, ridge)
    train_err = rmse(sur(data.x), data.y)
    hold_err = rmse(sur(holdout.x), holdout.y) if holdout is not None else None
    return RFFResult(sur, sampled, train_err, hold_err)


def spectrum_weights(spectrum) -> dict[float, float]:
    """Sampling weight ``|a_w| + |a_-w|`` for every non-negative frequency."""
    out = {}
    for w, a in zip(spectrum.frequencies, spectrum.coefficients):
        key = float(abs(w))
        out[key] = out.get(key, 0.0) + float(abs(a))
    return out
