"""States, Pauli-string observables, shot sampling and Pauli noise."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .linalg import is_hermitian, kron

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class PauliString:
    """Tensor product of single-qubit Paulis, e.g. ``PauliString("ZZII")``.

    The leftmost letter acts on qubit 0.
    """

    letters: str

    def __post_init__(self):
        letters = str(self.letters).upper()
        if not letters or any(c not in "IXYZ" for c in letters):
            raise ValueError(f"invalid Pauli string {self.letters!r}")
        object.__setattr__(self, "letters", letters)

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def n_qubits(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return set(self.letters) == {"I"}

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.letters) if c != "I")

    def matrix(self) -> np.ndarray:
        return kron(*(PAULI_MATRICES[c] for c in self.letters))

    def action(self) -> tuple[int, np.ndarray]:
        """Signed-permutation form: ``P|b> = phase[b] |b ^ flip>``."""
        n = self.n_qubits
        idx = np.arange(2**n)
        flip = 0
        phase = np.ones(2**n, dtype=complex)
        for q, c in enumerate(self.letters):
            bit = (idx >> (n - 1 - q)) & 1
            if c in "XY":
                flip |= 1 << (n - 1 - q)
            if c == "Y":
                phase *= 1j * (1 - 2 * bit)
            elif c == "Z":
                phase *= 1 - 2 * bit
        return flip, phase

    def apply(self, vecs: np.ndarray, axis: int = 0) -> np.ndarray:
        """Multiply by the Pauli matrix along ``axis`` without building it."""
        flip, phase = self.action()
        v = np.moveaxis(np.asarray(vecs), axis, 0)
        shape = (-1,) + (1,) * (v.ndim - 1)
        out = np.empty_like(v, dtype=complex)
        out[np.arange(v.shape[0]) ^ flip] = phase.reshape(shape) * v
        return np.moveaxis(out, 0, axis)

    def tensor_identity(self, n_extra: int) -> "PauliString":
        return PauliString(self.letters + "I" * n_extra)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator, allow_identity: bool = False) -> "PauliString":
        while True:
            s = "".join(rng.choice(list("IXYZ"), size=n))
            if allow_identity or set(s) != {"I"}:
                return cls(s)


def pauli_strings(n: int) -> Iterator[PauliString]:
    """All ``4**n`` Pauli strings in lexicographic ``I < X < Y < Z`` order."""
    for letters in itertools.product("IXYZ", repeat=n):
        yield PauliString("".join(letters))


def sample_pauli_strings(
    n: int, m: int, rng: np.random.Generator, support: int | None = None
) -> list[PauliString]:
    """``m`` distinct non-identity Pauli strings, uniformly without replacement.

    With ``support`` set, strings act as identity outside the first
    ``support`` qubits.
    """
    k = n if support is None else support
    total = 4**k - 1
    if m > total:
        raise ValueError(f"only {total} non-identity Pauli strings on {k} qubits")
    codes = rng.choice(np.arange(1, 4**k), size=m, replace=False)
    out = []
    for code in codes:
        digits = [(int(code) >> (2 * (k - 1 - q))) & 3 for q in range(k)]
        out.append(PauliString("".join("IXYZ"[d] for d in digits) + "I" * (n - k)))
    return out


def as_matrix(obs) -> np.ndarray:
    if isinstance(obs, PauliString):
        return obs.matrix()
    if isinstance(obs, str):
        return PauliString(obs).matrix()
    return np.asarray(obs, dtype=complex)


# -- states ---------------------------------------------------------------

def zero_state(n: int) -> np.ndarray:
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = 1.0
    return psi


def plus_state(n: int) -> np.ndarray:
    return np.full(2**n, 2 ** (-n / 2), dtype=complex)


def density(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def maximally_mixed(n: int) -> np.ndarray:
    return np.eye(2**n, dtype=complex) / 2**n


def check_density_matrix(rho: np.ndarray, atol: float = 1e-10) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity; return ``rho``."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if not is_hermitian(rho, atol=atol):
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > atol:
        raise ValueError(f"density matrix trace {np.trace(rho).real:.3g} != 1")
    if np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0] < -atol:
        raise ValueError("density matrix is not positive semidefinite")
    return rho


# -- measurement ------------------------------------------------------------

def expectation(state: np.ndarray, obs) -> float:
    """``Tr[O rho]`` for a density matrix, or ``<psi|O|psi>`` for a vector."""
    state = np.asarray(state, dtype=complex)
    if isinstance(obs, (PauliString, str)) and state.ndim == 1:
        p = obs if isinstance(obs, PauliString) else PauliString(obs)
        if 2**p.n_qubits != state.shape[0]:
            raise ValueError("observable and state dimensions differ")
        val = np.vdot(state, p.apply(state))
    else:
        o = as_matrix(obs)
        if not is_hermitian(o):
            raise ValueError("observable must be Hermitian")
        if o.shape[0] != state.shape[0]:
            raise ValueError("observable and state dimensions differ")
        if state.ndim == 1:
            val = np.vdot(state, o @ state)
        else:
            val = np.sum(o.T * state)
    scale = max(1.0, abs(val))
    if abs(val.imag) > 1e-10 * scale:
        raise ValueError(f"expectation has imaginary part {val.imag:.3g}")
    return float(val.real)


def sample_shots(expval: float, n_shots: int, rng: np.random.Generator) -> float:
    """Empirical mean of ``n_shots`` +/-1 outcomes with ``P(+1) = (1+expval)/2``."""
    if n_shots < 1:
        raise ValueError("n_shots must be >= 1")
    p_plus = min(max(0.5 * (1.0 + float(expval)), 0.0), 1.0)
    k = rng.binomial(n_shots, p_plus)
    return (2.0 * k - n_shots) / n_shots


def global_projector(m: str | Sequence[int]) -> np.ndarray:
    """Rank-one projector onto the computational basis state ``|m>``."""
    bits = [int(c) for c in m]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bitstring entries must be 0 or 1")
    n = len(bits)
    index = int("".join(map(str, bits)), 2) if bits else 0
    p = np.zeros((2**n, 2**n), dtype=complex)
    p[index, index] = 1.0
    return p


# -- noise --------------------------------------------------------------

@dataclass(frozen=True)
class NoiseSpec:
    """Single-qubit Pauli channel ``N(s) = q_s s`` for ``s`` in {X, Y, Z}."""

    qx: float
    qy: float
    qz: float

    def __post_init__(self):
        probs = self.kraus_probabilities()
        if np.any(probs < -1e-12):
            raise ValueError(f"Pauli damping factors {self.qx, self.qy, self.qz} are not completely positive")

    @classmethod
    def depolarizing(cls, p: float) -> "NoiseSpec":
        q = 1.0 - p
        return cls(q, q, q)

    @property
    def q(self) -> float:
        return max(abs(self.qx), abs(self.qy), abs(self.qz))

    def kraus_probabilities(self) -> np.ndarray:
        """Probabilities of applying I, X, Y, Z."""
        qx, qy, qz = self.qx, self.qy, self.qz
        return 0.25 * np.array(
            [1 + qx + qy + qz, 1 + qx - qy - qz, 1 - qx + qy - qz, 1 - qx - qy + qz]
        )


def pauli_noise(rho: np.ndarray, noise: NoiseSpec, qubit: int) -> np.ndarray:
    """Apply the Pauli channel to one qubit of a (batch of) density matrices."""
    rho = np.asarray(rho, dtype=complex)
    d = rho.shape[-1]
    n = int(round(np.log2(d)))
    if not 0 <= qubit < n:
        raise ValueError("qubit index out of range")
    batch = rho.shape[:-2]
    left, right = 2**qubit, 2 ** (n - qubit - 1)
    t = rho.reshape(batch + (left, 2, right, left, 2, right))
    m00 = t[..., :, 0, :, :, 0, :]
    m01 = t[..., :, 0, :, :, 1, :]
    m10 = t[..., :, 1, :, :, 0, :]
    m11 = t[..., :, 1, :, :, 1, :]
    c_i = 0.5 * (m00 + m11)
    c_z = 0.5 * (m00 - m11)
    c_x = 0.5 * (m01 + m10)
    c_y = 0.5j * (m01 - m10)
    out = np.empty_like(t)
    out[..., :, 0, :, :, 0, :] = c_i + noise.qz * c_z
    out[..., :, 1, :, :, 1, :] = c_i - noise.qz * c_z
    out[..., :, 0, :, :, 1, :] = noise.qx * c_x - 1j * noise.qy * c_y
    out[..., :, 1, :, :, 0, :] = noise.qx * c_x + 1j * noise.qy * c_y
    return out.reshape(rho.shape)


def noise_layer(rho: np.ndarray, noise: NoiseSpec, qubits: Sequence[int]) -> np.ndarray:
    for q in qubits:
        rho = pauli_noise(rho, noise, q)
    return rho
