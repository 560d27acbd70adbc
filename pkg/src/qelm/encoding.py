"""Data-encoding unitaries on the accessible register.

Product schemes apply ``U_k(x) = diag(exp(-i beta_k x / 2), exp(+i beta_k x / 2))``
to qubit ``k`` (qubit 0 leftmost), so basis state ``|b>`` picks up the
phase ``exp(i lambda_b x)`` with ``lambda_b = sum_k (+/-) beta_k / 2`` and
the minus sign for bit 0.

The layered scheme re-uploads ``x`` in every layer through
``R_y(theta) R_z(x) R_y(phi)`` on each qubit followed by a CNOT chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circuits import apply_1q, apply_1q_rho, apply_cnot_chain, apply_cnot_chain_rho, ry, rz
from .states import NoiseSpec, noise_layer

SCHEMES = ("pauli", "exponential", "product", "layered")


@dataclass(frozen=True)
class EncodingSpec:
    """Immutable description of an encoding on ``n_accessible`` qubits."""

    scheme: str
    n_accessible: int
    betas: tuple[float, ...] = field(default=())
    layers: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown encoding scheme {self.scheme!r}")
        if self.n_accessible < 1:
            raise ValueError("n_accessible must be >= 1")
        if self.scheme == "pauli":
            object.__setattr__(self, "betas", (1.0,) * self.n_accessible)
        elif self.scheme == "exponential":
            object.__setattr__(self, "betas", tuple(3.0**k for k in range(self.n_accessible)))
        elif self.scheme == "product":
            betas = tuple(float(b) for b in self.betas)
            if len(betas) != self.n_accessible:
                raise ValueError("product encoding needs one beta per qubit")
            object.__setattr__(self, "betas", betas)
        else:
            if self.layers < 1:
                raise ValueError("layered encoding needs layers >= 1")
            object.__setattr__(self, "betas", ())

    @classmethod
    def pauli(cls, n: int) -> "EncodingSpec":
        return cls("pauli", n)

    @classmethod
    def exponential(cls, n: int) -> "EncodingSpec":
        return cls("exponential", n)

    @classmethod
    def product(cls, betas) -> "EncodingSpec":
        betas = tuple(float(b) for b in betas)
        return cls("product", len(betas), betas=betas)

    @classmethod
    def layered(cls, n: int, layers: int, seed: int = 0) -> "EncodingSpec":
        return cls("layered", n, layers=layers, seed=seed)

    @property
    def is_product(self) -> bool:
        return self.scheme != "layered"

    @property
    def dim(self) -> int:
        return 2**self.n_accessible

    @property
    def per_qubit_eigs(self) -> np.ndarray:
        """``(n, 2)`` array of generator eigenvalues ``(-beta/2, +beta/2)``."""
        self._require_product()
        b = 0.5 * np.asarray(self.betas)
        return np.stack([-b, b], axis=1)

    def _require_product(self):
        if not self.is_product:
            raise ValueError("layered encodings have no product eigenbasis")

    def to_dict(self) -> dict:
        out = {"scheme": self.scheme, "n_accessible": self.n_accessible}
        if self.scheme == "product":
            out["betas"] = list(self.betas)
        if self.scheme == "layered":
            out.update(layers=self.layers, seed=self.seed)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "EncodingSpec":
        return cls(
            d["scheme"],
            int(d["n_accessible"]),
            betas=tuple(d.get("betas", ())),
            layers=int(d.get("layers", 1)),
            seed=int(d.get("seed", 0)),
        )


def generator_eigenvalues(spec: EncodingSpec) -> np.ndarray:
    """Eigenvalue ``lambda_b`` of the encoding generator for every basis index ``b``."""
    eigs = spec.per_qubit_eigs
    n = spec.n_accessible
    idx = np.arange(2**n)
    lam = np.zeros(2**n)
    for q in range(n):
        bit = (idx >> (n - 1 - q)) & 1
        lam += eigs[q, bit]
    return lam


def encode(spec: EncodingSpec, x: float) -> np.ndarray:
    """The encoding unitary ``U(x)`` as a dense matrix."""
    if spec.is_product:
        return np.diag(np.exp(1j * generator_eigenvalues(spec) * float(x)))
    return layered_encode(spec, x)


# -- layered ansatz -------------------------------------------------------

def layered_angles(spec: EncodingSpec) -> np.ndarray:
    """Fixed rotation angles ``(layers, n, 2)``; ``[..., 0]`` is theta, ``[..., 1]`` phi.

    Drawn in one call so a deeper ansatz with the same seed extends a
    shallower one layer by layer.
    """
    rng = np.random.default_rng(spec.seed)
    return rng.uniform(0.0, 2.0 * np.pi, size=(spec.layers, spec.n_accessible, 2))


def _layer_gates(spec: EncodingSpec):
    angles = layered_angles(spec)
    return ry(angles[..., 0]), ry(angles[..., 1])


def layered_states(spec: EncodingSpec, xs, psi0: np.ndarray | None = None) -> np.ndarray:
    """``U(x) |psi0>`` for every ``x`` in ``xs``; shape ``(len(xs), 2**n)``."""
    if spec.scheme != "layered":
        raise ValueError("layered_states needs a layered encoding")
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    n = spec.n_accessible
    if psi0 is None:
        psi0 = np.zeros(2**n, dtype=complex)
        psi0[0] = 1.0
    states = np.broadcast_to(np.asarray(psi0, dtype=complex), (xs.size, 2**n)).copy()
    theta, phi = _layer_gates(spec)
    rzx = rz(xs)
    for layer in range(spec.layers):
        for q in range(n):
            states = apply_1q(states, phi[layer, q], q, n)
            states = apply_1q(states, rzx, q, n)
            states = apply_1q(states, theta[layer, q], q, n)
        states = apply_cnot_chain(states, n)
    return states


def layered_encode(spec: EncodingSpec, x: float) -> np.ndarray:
    """Dense unitary of the layered ansatz at input ``x``."""
    if spec.scheme != "layered":
        raise ValueError("layered_encode needs a layered encoding")
    n = spec.n_accessible
    d = 2**n
    theta, phi = _layer_gates(spec)
    g = rz(float(x))
    # rows are U^T columns: evolve each basis vector as a batch
    rows = np.eye(d, dtype=complex)
    for layer in range(spec.layers):
        for q in range(n):
            rows = apply_1q(rows, phi[layer, q], q, n)
            rows = apply_1q(rows, g, q, n)
            rows = apply_1q(rows, theta[layer, q], q, n)
        rows = apply_cnot_chain(rows, n)
    return rows.T


def encode_states(spec: EncodingSpec, xs, psi0: np.ndarray) -> np.ndarray:
    """Pure encoded states for a batch of inputs, for any scheme."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if spec.is_product:
        phases = np.exp(1j * np.outer(xs, generator_eigenvalues(spec)))
        return phases * np.asarray(psi0, dtype=complex)[None, :]
    return layered_states(spec, xs, psi0)


def encode_density(
    spec: EncodingSpec,
    xs,
    rho0: np.ndarray,
    noise: NoiseSpec | None = None,
) -> np.ndarray:
    """``rho(x)`` for a batch of inputs, shape ``(len(xs), d, d)``.

    With ``noise`` set (layered scheme only), the channel is applied to every
    qubit before the first layer and after each layer, i.e. ``layers + 1``
    times in total.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    rho0 = np.asarray(rho0, dtype=complex)
    if spec.is_product:
        if noise is not None:
            raise ValueError("noise is only modelled for the layered scheme")
        ph = np.exp(1j * np.outer(xs, generator_eigenvalues(spec)))
        return ph[:, :, None] * rho0[None, :, :] * ph.conj()[:, None, :]
    for rho in iter_layered_density(spec, xs, rho0, noise):
        pass
    return rho


def iter_layered_density(spec: EncodingSpec, xs, rho0: np.ndarray, noise: NoiseSpec | None = None):
    """Yield the batched state after ``0, 1, ..., layers`` noisy layers.

    Depth ``L`` of the sequence equals ``encode_density`` of the same spec
    with ``layers = L``, because the rotation angles of a shallower ansatz
    are a prefix of a deeper one.
    """
    if spec.scheme != "layered":
        raise ValueError("iter_layered_density needs a layered encoding")
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    rho0 = np.asarray(rho0, dtype=complex)
    n = spec.n_accessible
    qubits = range(n)
    rho = np.broadcast_to(rho0, (xs.size,) + rho0.shape).copy()
    if noise is not None:
        rho = noise_layer(rho, noise, qubits)
    yield rho
    theta, phi = _layer_gates(spec)
    rzx = rz(xs)
    for layer in range(spec.layers):
        for q in range(n):
            rho = apply_1q_rho(rho, phi[layer, q], q, n)
            rho = apply_1q_rho(rho, rzx, q, n)
            rho = apply_1q_rho(rho, theta[layer, q], q, n)
        rho = apply_cnot_chain_rho(rho, n)
        if noise is not None:
            rho = noise_layer(rho, noise, qubits)
        yield rho
