"""Numerical checks of exponential concentration.

Each ``*_check`` returns a :class:`BoundReport` comparing a measured
deviation or variance with the corresponding analytic bound.  Variance
bounds are evaluated on the same finite ensemble that defines the
Haar-expressivity ``eps``, so ``lhs <= rhs`` holds exactly rather than only
up to Monte Carlo error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.special import xlogy
from scipy.stats import binom

from .circuits import ry, rz
from .encoding import EncodingSpec, encode, encode_states, iter_layered_density
from .fourier import reduced_observable
from .linalg import derive_rng, haar_twirl, haar_unitary, partial_trace, relative_entropy, renyi2_relative_entropy
from .reservoir import ReservoirSpec, realize
from .states import NoiseSpec, PauliString, as_matrix, density, plus_state, zero_state

SLACK = 1e-9
QUANTITIES = ("var_over_inputs", "var_over_reservoirs", "noise_distance", "global_var")
CSV_COLUMNS = (
    "experiment",
    "n_A",
    "n_H",
    "depth",
    "noise_p",
    "seed",
    "n_samples",
    "statistic",
    "value",
    "stderr",
    "bound",
    "satisfied",
)


@dataclass(frozen=True)
class BoundReport:
    lhs: float
    rhs: float
    components: dict = field(default_factory=dict)

    @property
    def satisfied(self) -> bool:
        return bool(self.lhs <= self.rhs + SLACK)


@dataclass(frozen=True)
class SweepConfig:
    quantity: str
    n_accessible: tuple[int, ...]
    n_hidden: int = 0
    depths: tuple[int, ...] = (1,)
    observable: str = "ZZ"
    n_samples: int = 1000
    seed: int = 0
    noise_ps: tuple[float, ...] = ()
    x_low: float = -np.pi
    x_high: float = np.pi

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown sweep quantity {self.quantity!r}")
        if self.n_samples < 100:
            raise ValueError("n_samples must be >= 100")
        if not self.n_accessible or not self.depths:
            raise ValueError("sweep ranges must be non-empty")
        if self.x_high <= self.x_low:
            raise ValueError("empty input interval")


def row(experiment: str, **kw) -> dict:
    out = {c: "" for c in CSV_COLUMNS}
    out["experiment"] = experiment
    out.update(kw)
    return out


def pad_observable(letters: str, n: int) -> PauliString:
    if len(letters) > n:
        raise ValueError(f"observable {letters!r} does not fit on {n} qubits")
    return PauliString(letters + "I" * (n - len(letters)))


def bootstrap_stderr(values, stat: Callable, rng: np.random.Generator, n_boot: int = 200) -> float:
    values = np.asarray(values)
    if n_boot < 2 or values.shape[0] < 2:
        return float("nan")
    idx = rng.integers(0, values.shape[0], size=(n_boot, values.shape[0]))
    return float(np.std([stat(values[i]) for i in idx], ddof=1))


def unbiased_var(v) -> float:
    return float(np.var(v, ddof=1))


def sub_seed(seed: int, *index: int) -> int:
    return int(np.random.SeedSequence([seed, *index]).generate_state(1)[0])


# -- Haar-expressivity ------------------------------------------------------

def _sym_coordinates(states: np.ndarray) -> np.ndarray:
    """Isometric image of ``psi (x) psi`` in the symmetric subspace."""
    d = states.shape[1]
    iu, ju = np.triu_indices(d)
    scale = np.where(iu == ju, 1.0, np.sqrt(2.0))
    return states[:, iu] * states[:, ju] * scale


def expressibility_from_states(states: np.ndarray, counts: np.ndarray | None = None) -> float:
    """``|| V_Haar(psi0^{(x)2}) - mean_s (U_s psi0)^{(x)2} ||_1`` for pure inputs.

    ``states`` holds the rows ``U_s |psi0>``.  Both operators live on the
    symmetric subspace where the Haar term is ``2/(d(d+1))`` times the
    identity, so only a ``d(d+1)/2``-dimensional eigenproblem is solved.
    """
    states = np.asarray(states, dtype=complex)
    n, d = states.shape
    v = _sym_coordinates(states)
    w = np.ones(n) if counts is None else np.asarray(counts, dtype=float)
    m = (v.T * w) @ v.conj() / w.sum()
    dim = v.shape[1]
    gap = 2.0 / (d * (d + 1)) * np.eye(dim) - m
    return float(np.sum(np.abs(np.linalg.eigvalsh(0.5 * (gap + gap.conj().T)))))


def expressibility_mixed(rhos: np.ndarray, rho0: np.ndarray) -> float:
    """Trace-norm gap for a general input state (full ``d^2 x d^2`` operators)."""
    rhos = np.asarray(rhos, dtype=complex)
    d = rhos.shape[-1]
    emp = np.mean([np.kron(r, r) for r in rhos], axis=0)
    haar = haar_twirl(np.kron(rho0, rho0), d)
    gap = haar - emp
    return float(np.sum(np.abs(np.linalg.eigvalsh(0.5 * (gap + gap.conj().T)))))


def _pure_vector(rho0: np.ndarray) -> np.ndarray | None:
    """State vector of a pure ``rho0`` (global phase is irrelevant here), else ``None``."""
    w, v = np.linalg.eigh(rho0)
    return v[:, -1] if w[-1] > 1 - 1e-10 else None


def expressibility_measure(
    sampler: Callable[[np.random.Generator, int], np.ndarray],
    rho0: np.ndarray,
    n_mc: int,
    rng: np.random.Generator,
    n_boot: int = 200,
) -> tuple[float, float]:
    """Monte Carlo Haar-expressivity of a unitary ensemble with a bootstrap error bar.

    ``sampler(rng, n)`` returns ``n`` unitaries stacked as ``(n, d, d)``.
    """
    rho0 = np.asarray(rho0, dtype=complex)
    us = np.asarray(sampler(rng, n_mc))
    psi = _pure_vector(rho0)
    if psi is not None:
        states = us @ psi
        eps = expressibility_from_states(states)
        if n_boot < 2:
            return eps, float("nan")
        boots = [
            expressibility_from_states(states, np.bincount(rng.integers(0, n_mc, n_mc), minlength=n_mc))
            for _ in range(n_boot)
        ]
        return eps, float(np.std(boots, ddof=1))
    rhos = us @ rho0 @ np.swapaxes(us.conj(), -1, -2)
    eps = expressibility_mixed(rhos, rho0)
    if n_boot < 2:
        return eps, float("nan")
    boots = [expressibility_mixed(rhos[rng.integers(0, n_mc, n_mc)], rho0) for _ in range(n_boot)]
    return eps, float(np.std(boots, ddof=1))


def haar_sampler(d: int) -> Callable:
    return lambda rng, n: np.stack([haar_unitary(d, rng) for _ in range(n)])


def identity_sampler(d: int) -> Callable:
    return lambda rng, n: np.broadcast_to(np.eye(d, dtype=complex), (n, d, d))


def layered_encoding_sampler(spec: EncodingSpec, low: float = -np.pi, high: float = np.pi) -> Callable:
    """Unitaries ``U(x)`` of a fixed encoding with ``x`` drawn uniformly."""
    return lambda rng, n: np.stack([encode(spec, x) for x in rng.uniform(low, high, n)])


# -- encoding / reservoir variance ---------------------------------------

def _expvals(states: np.ndarray, o: np.ndarray) -> np.ndarray:
    return np.einsum("bi,ij,bj->b", states.conj(), o, states).real


def encoding_bound(o_tilde: np.ndarray, eps1: float, lhs: float = float("nan")) -> BoundReport:
    """``(Tr[O]^2 + Tr[O^2]) / (d (d + 1)) + eps ||O||_inf^2`` on the accessible register."""
    o = np.asarray(o_tilde, dtype=complex)
    d = o.shape[0]
    first = float((np.trace(o).real ** 2 + np.trace(o @ o).real) / (d * (d + 1)))
    norm = float(np.linalg.norm(o, 2))
    return BoundReport(lhs, first + eps1 * norm**2, {"first_term": first, "eps": eps1, "norm_inf": norm})


def reservoir_bound(obs, eps1: float, lhs: float = float("nan")) -> BoundReport:
    """Same form as :func:`encoding_bound` on the full register."""
    return encoding_bound(as_matrix(obs), eps1, lhs)


def encoding_bound_check(
    spec: EncodingSpec,
    obs,
    n_hidden: int,
    n_samples: int,
    rng: np.random.Generator,
    u_r: np.ndarray | None = None,
    psi0: np.ndarray | None = None,
) -> BoundReport:
    """Variance over inputs versus the encoding Haar-expressivity bound."""
    n_a = spec.n_accessible
    if u_r is None:
        u_r = np.eye(2 ** (n_a + n_hidden), dtype=complex)
    if psi0 is None:
        psi0 = plus_state(n_a)
    o_tilde = reduced_observable(u_r, obs, n_a, n_hidden)
    states = encode_states(spec, rng.uniform(-np.pi, np.pi, n_samples), psi0)
    vals = _expvals(states, o_tilde)
    eps = expressibility_from_states(states)
    return encoding_bound(o_tilde, eps, float(np.var(vals)))


def embedded_input(spec: EncodingSpec, x: float, n_hidden: int, psi0: np.ndarray | None = None) -> np.ndarray:
    """``U(x)|psi0> (x) |0...0>`` on the full register."""
    if psi0 is None:
        psi0 = plus_state(spec.n_accessible)
    acc = encode_states(spec, [x], psi0)[0]
    return np.kron(acc, zero_state(n_hidden)) if n_hidden else acc


def reservoir_values(
    psi_in: np.ndarray,
    obs,
    sampler: Callable[[np.random.Generator], np.ndarray],
    n_samples: int,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """``<O>`` for ``n_samples`` reservoirs drawn from ``sampler``; also returns the output states."""
    o = as_matrix(obs)
    states = np.stack([sampler(rng) @ psi_in for _ in range(n_samples)])
    return _expvals(states, o), states


def reservoir_bound_check(
    psi_in: np.ndarray, obs, sampler: Callable, n_samples: int, rng: np.random.Generator
) -> BoundReport:
    vals, states = reservoir_values(psi_in, obs, sampler, n_samples, rng)
    eps = expressibility_from_states(states)
    return reservoir_bound(obs, eps, float(np.var(vals)))


def var_over_inputs(
    cfg: SweepConfig, reservoir: ReservoirSpec | None = None, n_boot: int = 200
) -> list[dict]:
    """Variance of a readout over uniformly drawn inputs, per ``(n_A, depth)``."""
    rows = []
    for n_a in cfg.n_accessible:
        n = n_a + cfg.n_hidden
        obs = pad_observable(cfg.observable, n)
        u_r = realize(reservoir) if reservoir is not None else np.eye(2**n, dtype=complex)
        o_tilde = reduced_observable(u_r, obs, n_a, cfg.n_hidden)
        for depth in cfg.depths:
            spec = EncodingSpec.layered(n_a, depth, seed=sub_seed(cfg.seed, n_a))
            rng = derive_rng(cfg.seed, (n_a, depth))
            xs = rng.uniform(cfg.x_low, cfg.x_high, cfg.n_samples)
            vals = _expvals(encode_states(spec, xs, plus_state(n_a)), o_tilde)
            rows.append(
                row(
                    "var_over_inputs",
                    n_A=n_a,
                    n_H=cfg.n_hidden,
                    depth=depth,
                    seed=cfg.seed,
                    n_samples=cfg.n_samples,
                    statistic="variance",
                    value=unbiased_var(vals),
                    stderr=bootstrap_stderr(vals, unbiased_var, rng, n_boot),
                )
            )
    return rows


def var_over_reservoirs(
    n_values: Sequence[int],
    n_samples: int,
    seed: int,
    observable: str = "Z",
    n_accessible: int = 1,
    x: float = 0.3,
    n_boot: int = 200,
) -> list[dict]:
    """Variance of ``<O>_x`` over Haar reservoirs at fixed input, per total size ``n``."""
    rows = []
    for n in n_values:
        n_h = n - n_accessible
        if n_h < 0:
            raise ValueError("n must be >= n_accessible")
        rng = derive_rng(seed, (n,))
        psi = embedded_input(EncodingSpec.exponential(n_accessible), x, n_h)
        obs = pad_observable(observable, n)
        vals, _ = reservoir_values(psi, obs, lambda r: haar_unitary(2**n, r), n_samples, rng)
        exact = float(
            (np.trace(obs.matrix()).real ** 2 + 2**n) / (2**n * (2**n + 1))
            - (np.trace(obs.matrix()).real / 2**n) ** 2
        )
        common = dict(n_A=n_accessible, n_H=n_h, depth="", seed=seed, n_samples=n_samples)
        rows.append(
            row(
                "var_over_reservoirs",
                statistic="variance",
                value=unbiased_var(vals),
                stderr=bootstrap_stderr(vals, unbiased_var, rng, n_boot),
                bound=exact,
                **common,
            )
        )
        rows.append(
            row(
                "var_over_reservoirs",
                statistic="mean",
                value=float(np.mean(vals)),
                stderr=float(np.std(vals, ddof=1) / np.sqrt(n_samples)),
                bound=float(np.trace(obs.matrix()).real / 2**n),
                **common,
            )
        )
    return rows


# -- entanglement -------------------------------------------------------

def entanglement_bound_check(state: np.ndarray, obs_local, subset: Sequence[int]) -> BoundReport:
    """Deviation of a local observable from ``Tr[O]/2^n`` versus the relative-entropy bound.

    ``obs_local`` acts on the qubits in ``subset`` (listed in ascending order).
    """
    state = np.asarray(state, dtype=complex)
    rho = density(state) if state.ndim == 1 else state
    n = int(round(np.log2(rho.shape[0])))
    subset = sorted(int(q) for q in subset)
    o = as_matrix(obs_local)
    k = len(subset)
    if o.shape != (2**k, 2**k):
        raise ValueError("local observable does not match the subset size")
    rho_k = partial_trace(rho, subset, [2] * n)
    lhs = abs(float(np.sum(o.T * rho_k).real) - float(np.trace(o).real) / 2**k)
    s = relative_entropy(rho_k, np.eye(2**k) / 2**k)
    norm = float(np.linalg.norm(o, 2))
    rhs = norm * np.sqrt(2.0 * np.log(2.0) * s)
    return BoundReport(lhs, float(rhs), {"relative_entropy": s, "norm_inf": norm, "k": k})


# -- global measurement ---------------------------------------------------

def single_qubit_layered(depth: int, rng: np.random.Generator) -> Callable:
    """``x -> prod_l R_y(theta_l) R_z(x) R_y(phi_l)`` with random fixed angles."""
    angles = rng.uniform(0.0, 2.0 * np.pi, size=(depth, 2))

    def unitary(xs):
        xs = np.atleast_1d(xs)
        u = np.broadcast_to(np.eye(2, dtype=complex), (xs.size, 2, 2))
        for theta, phi in angles:
            u = ry(theta) @ rz(xs) @ ry(phi) @ u
        return u

    return unitary


@dataclass(frozen=True)
class GlobalMeasurementResult:
    second_moment_mc: float
    variance_mc: float
    second_moment_exact: float
    variance_exact: float
    alpha: float
    eps: tuple[float, ...]
    report: BoundReport


def global_measurement_experiment(
    n_a: int,
    n_h: int,
    depth: int | None,
    n_samples: int,
    rng: np.random.Generator,
    m: str | None = None,
) -> GlobalMeasurementResult:
    """Product encoding, product reservoir and a global projector ``|m><m|``.

    ``depth=None`` draws each single-qubit encoding from the exact Haar
    measure; otherwise qubit ``k`` runs a ``depth``-layer re-uploading
    circuit on its own input ``x_k ~ U[-pi, pi]``.  Exact moments use an
    equispaced quadrature that is exact for the trigonometric polynomials
    involved.
    """
    n = n_a + n_h
    bits = [0] * n if m is None else [int(c) for c in m]
    if len(bits) != n:
        raise ValueError("bitstring length must equal n_A + n_H")
    v = [haar_unitary(2, rng) for _ in range(n)]
    bras = [v[k].conj().T[bits[k]] for k in range(n)]  # <m_k| V_k
    ket0 = np.array([1.0, 0.0], dtype=complex)
    alpha = float(np.prod([abs(bras[j] @ ket0) ** 2 for j in range(n_a, n)]))
    hidden_second = alpha**2

    if depth is None:
        per_qubit = np.empty((n_samples, n_a))
        for k in range(n_a):
            us = np.stack([haar_unitary(2, rng) for _ in range(n_samples)])
            per_qubit[:, k] = np.abs(us[:, :, 0] @ bras[k]) ** 2
        first = [0.5] * n_a
        second = [1.0 / 3.0] * n_a
        eps = (0.0,) * n_a
    else:
        circuits = [single_qubit_layered(depth, rng) for _ in range(n_a)]
        xs = rng.uniform(-np.pi, np.pi, size=(n_samples, n_a))
        per_qubit = np.column_stack(
            [np.abs(circuits[k](xs[:, k])[:, :, 0] @ bras[k]) ** 2 for k in range(n_a)]
        )
        grid = -np.pi + 2.0 * np.pi * np.arange(4 * depth + 8) / (4 * depth + 8)
        first, second, eps_list = [], [], []
        for k in range(n_a):
            states = circuits[k](grid)[:, :, 0]
            f = np.abs(states @ bras[k]) ** 2
            first.append(float(np.mean(f)))
            second.append(float(np.mean(f**2)))
            eps_list.append(expressibility_from_states(states))
        eps = tuple(eps_list)

    vals = alpha * np.prod(per_qubit, axis=1)
    second_exact = hidden_second * float(np.prod(second))
    var_exact = second_exact - (alpha * float(np.prod(first))) ** 2
    g = [np.sqrt(1.0 / 3.0 + e * (e + np.sqrt(4.0 / 3.0))) for e in eps]
    rhs = alpha * float(np.prod(g))
    report = BoundReport(var_exact, rhs, {"alpha": alpha, "G": g, "eps": eps})
    return GlobalMeasurementResult(
        second_moment_mc=float(np.mean(vals**2)),
        variance_mc=unbiased_var(vals),
        second_moment_exact=second_exact,
        variance_exact=var_exact,
        alpha=alpha,
        eps=eps,
        report=report,
    )


# -- noise --------------------------------------------------------------

def noise_bound(o_tilde: np.ndarray, q: float, layers: int, s2: float) -> float:
    """``||O||_inf (2 ln 2 q^{b(L+1)} S_2)^{1/2}`` with ``b = 1/(2 ln 2)``."""
    if q >= 1.0:
        return float("inf")
    b = 1.0 / (2.0 * np.log(2.0))
    norm = float(np.linalg.norm(o_tilde, 2))
    return norm * float(np.sqrt(2.0 * np.log(2.0) * q ** (b * (layers + 1)) * s2))


@dataclass(frozen=True)
class NoisePoint:
    depth: int
    p: float
    distances: np.ndarray
    bound: float

    @property
    def mean(self) -> float:
        return float(np.mean(self.distances))

    @property
    def satisfied(self) -> bool:
        return bool(np.all(self.distances <= self.bound + SLACK))


def noise_concentration_experiment(
    n_a: int,
    n_h: int,
    depths: Sequence[int],
    ps: Sequence[float],
    n_x: int,
    seed: int,
    observable: str = "Z",
    reservoir: ReservoirSpec | None = None,
    rho0: np.ndarray | None = None,
    noise_factory: Callable[[float], NoiseSpec] = NoiseSpec.depolarizing,
) -> list[NoisePoint]:
    """Distance of a noisy layered-encoding readout from ``Tr[O~]/2^{n_A}``.

    The reservoir defaults to the identity, so only the accessible register
    is simulated as a density matrix.
    """
    n = n_a + n_h
    if reservoir is None:
        reservoir = ReservoirSpec.identity(n)
    o_tilde = reduced_observable(realize(reservoir), pad_observable(observable, n), n_a, n_h)
    mu = float(np.trace(o_tilde).real) / 2**n_a
    if rho0 is None:
        rho0 = density(plus_state(n_a))
    s2 = renyi2_relative_entropy(rho0)
    xs = derive_rng(seed, 0).uniform(-np.pi, np.pi, n_x)
    depths = sorted(set(int(d) for d in depths))
    spec = EncodingSpec.layered(n_a, max(max(depths), 1), seed=sub_seed(seed, n_a))
    out = []
    for p in ps:
        noise = noise_factory(p)
        wanted = set(depths)
        for layer, rho in enumerate(iter_layered_density(spec, xs, rho0, noise)):
            if layer in wanted:
                vals = np.einsum("ji,bij->b", o_tilde, rho).real
                out.append(NoisePoint(layer, float(p), np.abs(vals - mu), noise_bound(o_tilde, noise.q, layer, s2)))
    return out


def fit_log_slope(xs, ys) -> float:
    """Least-squares slope of ``ln y`` against ``x``."""
    return float(np.polyfit(np.asarray(xs, float), np.log(np.asarray(ys, float)), 1)[0])


# -- Haar coefficient statistics ------------------------------------------

@dataclass(frozen=True)
class HaarCoefficientStats:
    n_samples: int
    alpha: float
    d: int
    mean: np.ndarray
    mean_stderr: np.ndarray
    var_offdiag: float
    var_diag: float
    predicted_var_offdiag: float
    predicted_var_diag: float
    cov_diag: float
    cov_diag_stderr: float
    predicted_cov_diag: float
    cov_distinct: float
    cov_distinct_stderr: float


def haar_coefficient_stats(
    n_a: int, n_h: int, obs, n_samples: int, rng: np.random.Generator
) -> HaarCoefficientStats:
    """Moments of ``a_uv = alpha <u,0| U^dagger O U |v,0>`` over Haar reservoirs."""
    n = n_a + n_h
    d = 2**n
    d_a = 2**n_a
    alpha = 1.0 / d_a
    o = as_matrix(obs)
    tr_o = float(np.trace(o).real)
    tr_o2 = float(np.trace(o @ o).real)
    samples = np.empty((n_samples, d_a, d_a), dtype=complex)
    for s in range(n_samples):
        u = haar_unitary(d, rng)
        samples[s] = alpha * reduced_observable(u, o, n_a, n_h)
    mean = samples.mean(axis=0)
    centered = samples - mean
    se = np.sqrt(centered.real.var(axis=0, ddof=1) + centered.imag.var(axis=0, ddof=1)) / np.sqrt(n_samples)
    var = (np.abs(centered) ** 2).sum(axis=0) / (n_samples - 1)
    off = ~np.eye(d_a, dtype=bool)
    diag = np.diagonal(centered, axis1=1, axis2=2).real
    iu, ju = np.triu_indices(d_a, 1)
    z_diag = (diag[:, iu] * diag[:, ju]).mean(axis=1)
    quads = [(u, (u + 1) % d_a, (u + 2) % d_a, (u + 3) % d_a) for u in range(d_a)] if d_a >= 4 else []
    if quads:
        z_dist = np.mean([centered[:, a, b].conj() * centered[:, c, e] for a, b, c, e in quads], axis=0)
        cov_dist = complex(z_dist.mean())
        cov_dist_se = float(
            np.sqrt(z_dist.real.var(ddof=1) + z_dist.imag.var(ddof=1)) / np.sqrt(n_samples)
        )
    else:
        cov_dist, cov_dist_se = 0j, float("nan")
    return HaarCoefficientStats(
        n_samples=n_samples,
        alpha=alpha,
        d=d,
        mean=mean,
        mean_stderr=se,
        var_offdiag=float(var[off].mean()),
        var_diag=float(var[~off].mean()),
        predicted_var_offdiag=alpha**2 * (tr_o2 - tr_o**2 / d) / (d * d - 1),
        predicted_var_diag=alpha**2 * (tr_o2 + tr_o**2) / (d * (d + 1)) - (alpha * tr_o / d) ** 2,
        cov_diag=float(z_diag.mean()),
        cov_diag_stderr=float(z_diag.std(ddof=1) / np.sqrt(n_samples)),
        predicted_cov_diag=alpha**2 * (tr_o**2 - tr_o2 / d) / (d * d - 1) - (alpha * tr_o / d) ** 2,
        cov_distinct=abs(cov_dist),
        cov_distinct_stderr=cov_dist_se,
    )


# -- hypothesis testing ---------------------------------------------------

def _log_ratio(k: np.ndarray, n: int, p: float) -> np.ndarray:
    """``log P(k) - log Q(k)``; ``xlogy`` keeps ``0 log 0 = 0`` at ``p`` in ``{0, 1}``."""
    with np.errstate(divide="ignore"):
        return xlogy(k, p) + xlogy(n - k, 1.0 - p) - n * np.log(0.5)


def _decide_p(k: np.ndarray, n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Likelihood-ratio rule for ``P = Bernoulli(p)`` against the fair coin; ties by coin flip."""
    llr = _log_ratio(k, n, p)
    tie = np.isclose(llr, 0.0, atol=1e-12)
    return np.where(tie, rng.random(k.shape) < 0.5, llr > 0)


def hypothesis_test_sim(p_true: float, n_samples: int, n_trials: int, rng: np.random.Generator) -> float:
    """Success rate of telling ``P = {p, 1-p}`` from ``Q = {1/2, 1/2}`` with ``n_samples`` draws.

    Each trial picks ``P`` or ``Q`` with equal probability; only the count of
    ``+1`` outcomes is drawn since it is a sufficient statistic.
    """
    if not 0.0 <= p_true <= 1.0:
        raise ValueError("p_true must lie in [0, 1]")
    if n_samples < 1 or n_trials < 1:
        raise ValueError("need at least one sample and one trial")
    truth_p = rng.random(n_trials) < 0.5
    k = rng.binomial(n_samples, np.where(truth_p, p_true, 0.5))
    guess_p = _decide_p(k, n_samples, p_true, rng)
    return float(np.mean(guess_p == truth_p))


def hypothesis_success_exact(p_true: float, n_samples: int) -> float:
    """Exact success probability of the likelihood-ratio rule (ties count one half)."""
    k = np.arange(n_samples + 1)
    pk = binom.pmf(k, n_samples, p_true)
    qk = binom.pmf(k, n_samples, 0.5)
    llr = _log_ratio(k, n_samples, p_true)
    tie = np.isclose(llr, 0.0, atol=1e-12)
    win = np.where(tie, 0.5 * (pk + qk), np.where(llr > 0, pk, qk))
    return float(0.5 * win.sum())


def lemma_success(p_true: float) -> float:
    """Single-sample optimum ``1/2 + ||P - Q||_1 / 4``."""
    return 0.5 + 2.0 * abs(p_true - 0.5) / 4.0
