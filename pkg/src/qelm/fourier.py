"""Fourier spectra of QELM readouts.

For a product encoding with generator eigenvalues ``lambda_i`` the readout
of an observable ``O`` is a finite Fourier series

    <O>_x = sum_w a_w exp(i w x),   a_w = sum_{lambda_i - lambda_j = w} rho0_ij Ot_ji,

where ``Ot = (I (x) <0|) U_R^dagger O U_R (I (x) |0>)`` is the observable
pulled back to the accessible register.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .encoding import EncodingSpec, generator_eigenvalues
from .linalg import svd_rank
from .states import PauliString, as_matrix, pauli_strings

GROUP_TOL = 1e-9
RICHNESS_TOL = 1e-10
RICHNESS_FLOOR = 1e-12
MAX_RICHNESS_QUBITS = 6


def _unique_sorted(values: np.ndarray, tol: float = GROUP_TOL) -> np.ndarray:
    v = np.sort(np.asarray(values, dtype=float).ravel())
    if v.size == 0:
        return v
    keep = np.concatenate([[True], np.diff(v) > tol])
    return v[keep]


@dataclass(frozen=True)
class FrequencySet:
    """Sorted, symmetric set of frequencies."""

    frequencies: np.ndarray

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        f.setflags(write=False)
        object.__setattr__(self, "frequencies", f)

    def __len__(self) -> int:
        return int(self.frequencies.size)

    def __iter__(self):
        return iter(self.frequencies.tolist())

    def __contains__(self, w) -> bool:
        return bool(np.any(np.abs(self.frequencies - float(w)) <= GROUP_TOL))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrequencySet):
            return NotImplemented
        return len(self) == len(other) and bool(
            np.all(np.abs(self.frequencies - other.frequencies) <= GROUP_TOL)
        )

    def __hash__(self):
        return hash(tuple(np.round(self.frequencies, 9)))

    @property
    def nonnegative(self) -> np.ndarray:
        return self.frequencies[self.frequencies >= -GROUP_TOL]

    @property
    def max(self) -> float:
        return float(self.frequencies[-1])

    def index(self, values) -> np.ndarray:
        """Position of each value in the set (raises if absent)."""
        values = np.asarray(values, dtype=float)
        pos = np.searchsorted(self.frequencies, values - GROUP_TOL)
        pos = np.clip(pos, 0, len(self) - 1)
        if np.any(np.abs(self.frequencies[pos] - values) > GROUP_TOL):
            raise ValueError("value not in frequency set")
        return pos


def frequency_set_from_eigenvalues(eigs: Sequence[float]) -> FrequencySet:
    """All pairwise differences of a generator's eigenvalues."""
    lam = np.asarray(eigs, dtype=float)
    return FrequencySet(_unique_sorted(lam[:, None] - lam[None, :]))


def frequency_set(spec: EncodingSpec) -> FrequencySet:
    """Frequencies reachable by a product encoding.

    Built as the Minkowski sum of the per-qubit sets ``{-beta, 0, beta}``
    so the cost stays linear in the set size rather than ``4**n``.
    """
    if not spec.is_product:
        raise ValueError("frequency sets are defined for product encodings")
    omegas = np.zeros(1)
    for lo, hi in spec.per_qubit_eigs:
        step = np.array([lo - hi, 0.0, hi - lo])
        omegas = _unique_sorted(omegas[:, None] + step[None, :])
    return FrequencySet(omegas)


def multivariate_frequency_set(per_component_eigs: Iterable[Sequence[float]]) -> list[tuple[float, ...]]:
    """Vector frequencies for an input with one generator per component."""
    axes = [frequency_set_from_eigenvalues(e).frequencies.tolist() for e in per_component_eigs]
    if not axes:
        raise ValueError("need at least one component")
    return sorted(itertools.product(*axes))


# -- spectra ----------------------------------------------------------------

@dataclass(frozen=True)
class FourierSpectrum:
    """Coefficients ``a_w`` of a real readout on a frequency grid."""

    frequencies: np.ndarray
    coefficients: np.ndarray
    observable: str = ""
    tol: float = GROUP_TOL

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        c = np.asarray(self.coefficients, dtype=complex)
        if f.shape != c.shape:
            raise ValueError("frequencies and coefficients differ in length")
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "coefficients", c)

    def __len__(self) -> int:
        return int(self.frequencies.size)

    def coefficient(self, w: float) -> complex:
        hit = np.abs(self.frequencies - w) <= GROUP_TOL
        return complex(self.coefficients[hit][0]) if hit.any() else 0j

    def as_dict(self) -> dict[float, complex]:
        return {float(w): complex(a) for w, a in zip(self.frequencies, self.coefficients)}

    def evaluate(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        vals = np.exp(1j * np.multiply.outer(x, self.frequencies)) @ self.coefficients
        return vals.real

    def conjugate_symmetry_error(self) -> float:
        err = 0.0
        for w, a in zip(self.frequencies, self.coefficients):
            err = max(err, abs(self.coefficient(-w) - np.conj(a)))
        return err

    def support(self, tol: float = RICHNESS_TOL, floor: float = RICHNESS_FLOOR) -> np.ndarray:
        """Frequencies whose coefficient is non-zero under the richness threshold."""
        mags = np.abs(self.coefficients)
        thresh = max(tol * (mags.max() if mags.size else 0.0), floor)
        return self.frequencies[mags > thresh]

    def scaled(self, factor: float) -> "FourierSpectrum":
        return FourierSpectrum(self.frequencies, factor * self.coefficients, self.observable, self.tol)


def _hidden_zero_columns(n_accessible: int, n_hidden: int) -> np.ndarray:
    return np.arange(2**n_accessible) << n_hidden


def reservoir_isometry(u_r: np.ndarray, n_accessible: int, n_hidden: int) -> np.ndarray:
    """``W = U_R (I (x) |0>)``: the columns of ``U_R`` with every hidden qubit in ``|0>``."""
    u_r = np.asarray(u_r, dtype=complex)
    if u_r.shape != (2 ** (n_accessible + n_hidden),) * 2:
        raise ValueError("reservoir dimension does not match n_accessible + n_hidden")
    return u_r[:, _hidden_zero_columns(n_accessible, n_hidden)]


def reduced_observable(u_r: np.ndarray, obs, n_accessible: int, n_hidden: int) -> np.ndarray:
    """``(I (x) <0|) U_R^dagger O U_R (I (x) |0>)`` on the accessible register."""
    w = reservoir_isometry(u_r, n_accessible, n_hidden)
    if isinstance(obs, str):
        obs = PauliString(obs)
    if isinstance(obs, PauliString):
        if obs.n_qubits != n_accessible + n_hidden:
            raise ValueError("observable acts on the wrong number of qubits")
        ow = obs.apply(w, axis=0)
    else:
        o = as_matrix(obs)
        if o.shape[0] != w.shape[0]:
            raise ValueError("observable dimension does not match reservoir")
        ow = o @ w
    return w.conj().T @ ow


def _frequency_grouping(spec: EncodingSpec):
    lam = generator_eigenvalues(spec)
    omega = frequency_set(spec)
    diffs = lam[:, None] - lam[None, :]
    return omega, omega.index(diffs.ravel())


def spectrum_from_reduced(
    rho0: np.ndarray, spec: EncodingSpec, o_tilde: np.ndarray, label: str = "", _grouping=None
) -> FourierSpectrum:
    omega, pos = _grouping if _grouping is not None else _frequency_grouping(spec)
    terms = (np.asarray(rho0) * np.asarray(o_tilde).T).ravel()
    re = np.bincount(pos, weights=terms.real, minlength=len(omega))
    im = np.bincount(pos, weights=terms.imag, minlength=len(omega))
    return FourierSpectrum(omega.frequencies, re + 1j * im, label)


def _infer_hidden(spec: EncodingSpec, u_r: np.ndarray) -> int:
    n_total = int(round(np.log2(np.asarray(u_r).shape[0])))
    n_hidden = n_total - spec.n_accessible
    if n_hidden < 0:
        raise ValueError("reservoir smaller than accessible register")
    return n_hidden


def spectrum_direct(rho0: np.ndarray, spec: EncodingSpec, u_r: np.ndarray, obs) -> FourierSpectrum:
    """Exact coefficients by grouping matrix elements by eigenvalue difference."""
    if not spec.is_product:
        raise ValueError("spectrum_direct needs a product encoding with a known eigenbasis")
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.shape != (spec.dim, spec.dim):
        raise ValueError("rho0 must live on the accessible register")
    n_hidden = _infer_hidden(spec, u_r)
    o_tilde = reduced_observable(u_r, obs, spec.n_accessible, n_hidden)
    return spectrum_from_reduced(rho0, spec, o_tilde, str(obs) if isinstance(obs, (str, PauliString)) else "")


def spectrum_dft(readout: Callable, omega_max: int, vectorized: bool = False) -> FourierSpectrum:
    """Spectrum of a band-limited 2pi-periodic function from ``2 omega_max + 1`` samples."""
    k_max = int(omega_max)
    if k_max < 0:
        raise ValueError("omega_max must be >= 0")
    n = 2 * k_max + 1
    xs = 2.0 * np.pi * np.arange(n) / n
    if vectorized:
        vals = np.asarray(readout(xs), dtype=float)
    else:
        vals = np.array([float(readout(x)) for x in xs])
    c = np.fft.fft(vals) / n
    ks = np.arange(-k_max, k_max + 1)
    return FourierSpectrum(ks.astype(float), c[ks % n])


def richness(
    spec: EncodingSpec,
    u_r: np.ndarray,
    rho0: np.ndarray,
    tol: float = RICHNESS_TOL,
) -> tuple[float, float]:
    """Average number of non-zero coefficients over all accessible Pauli strings.

    Returns ``(raw, normalized)`` where ``normalized = raw / |Omega|``.
    """
    n_a = spec.n_accessible
    if n_a > MAX_RICHNESS_QUBITS:
        raise ValueError(f"richness is limited to n_accessible <= {MAX_RICHNESS_QUBITS}")
    n_hidden = _infer_hidden(spec, u_r)
    w = reservoir_isometry(u_r, n_a, n_hidden)
    w_blocks = w.reshape(2**n_a, 2**n_hidden, 2**n_a)
    grouping = _frequency_grouping(spec)
    rho0 = np.asarray(rho0, dtype=complex)
    total = 0
    for p in pauli_strings(n_a):
        # P (x) I_hidden acts on the accessible index of W only
        pw = p.apply(w_blocks, axis=0).reshape(w.shape)
        o_tilde = w.conj().T @ pw
        spec_p = spectrum_from_reduced(rho0, spec, o_tilde, _grouping=grouping)
        total += spec_p.support(tol).size
    raw = total / 4**n_a
    return raw, raw / len(grouping[0])


# -- expressivity -------------------------------------------------------

@dataclass(frozen=True)
class ExpressivityReport:
    matrix: np.ndarray = field(repr=False)
    rank: int
    n_observables: int
    n_frequencies: int
    pauli_dim: int

    @property
    def bound(self) -> int:
        return min(self.n_observables, self.n_frequencies, self.pauli_dim)

    @property
    def saturated(self) -> bool:
        return self.rank == self.bound

    @property
    def within_bound(self) -> bool:
        return self.rank <= self.bound


def coefficient_matrix(spectra: Sequence[FourierSpectrum]) -> np.ndarray:
    """``A[w, k] = a_w^(k)``; every spectrum must share one frequency grid."""
    if not spectra:
        raise ValueError("need at least one spectrum")
    ref = spectra[0].frequencies
    for s in spectra[1:]:
        if s.frequencies.shape != ref.shape or np.any(np.abs(s.frequencies - ref) > GROUP_TOL):
            raise ValueError("spectra have inconsistent frequency sets")
    return np.stack([s.coefficients for s in spectra], axis=1)


def expressivity_report(spectra: Sequence[FourierSpectrum], n_o: int, tol: float = 1e-9) -> ExpressivityReport:
    a = coefficient_matrix(spectra)
    return ExpressivityReport(
        matrix=a,
        rank=svd_rank(a, tol),
        n_observables=a.shape[1],
        n_frequencies=a.shape[0],
        pauli_dim=4**n_o,
    )
