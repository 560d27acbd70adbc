"""Reservoir unitaries ``U_R`` acting on accessible plus hidden qubits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuits import apply_1q, apply_cnot_chain
from .linalg import haar_unitary, herm_expm

KINDS = ("identity", "ising", "haar", "layered")

INTEGRABLE = {"J": -1.0, "Bx": 0.0, "Bz": 1.0}
CHAOTIC = {"J": -1.0, "Bx": 0.7, "Bz": 1.5}
DEFAULT_TIME = 10.0


@dataclass(frozen=True)
class ReservoirSpec:
    kind: str
    n_total: int
    J: float = 0.0
    Bx: float = 0.0
    Bz: float = 0.0
    t: float = DEFAULT_TIME
    depth: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown reservoir kind {self.kind!r}")
        if self.n_total < 1:
            raise ValueError("n_total must be >= 1")
        if self.kind == "layered" and self.depth < 0:
            raise ValueError("depth must be >= 0")

    @classmethod
    def identity(cls, n: int) -> "ReservoirSpec":
        return cls("identity", n)

    @classmethod
    def ising(cls, n: int, J: float, Bx: float, Bz: float, t: float = DEFAULT_TIME) -> "ReservoirSpec":
        return cls("ising", n, J=J, Bx=Bx, Bz=Bz, t=t)

    @classmethod
    def integrable(cls, n: int, t: float = DEFAULT_TIME) -> "ReservoirSpec":
        return cls.ising(n, t=t, **INTEGRABLE)

    @classmethod
    def chaotic(cls, n: int, t: float = DEFAULT_TIME) -> "ReservoirSpec":
        return cls.ising(n, t=t, **CHAOTIC)

    @classmethod
    def haar(cls, n: int, seed: int = 0) -> "ReservoirSpec":
        return cls("haar", n, seed=seed)

    @classmethod
    def layered(cls, n: int, depth: int = 10, seed: int = 0) -> "ReservoirSpec":
        return cls("layered", n, depth=depth, seed=seed)

    @classmethod
    def named(cls, name: str, n: int, seed: int = 0, t: float = DEFAULT_TIME, depth: int = 10):
        """Build from a short name used in configs and CSV output."""
        if name == "identity":
            return cls.identity(n)
        if name == "integrable":
            return cls.integrable(n, t)
        if name == "chaotic":
            return cls.chaotic(n, t)
        if name == "haar":
            return cls.haar(n, seed)
        if name == "layered":
            return cls.layered(n, depth, seed)
        raise ValueError(f"unknown reservoir name {name!r}")

    @property
    def label(self) -> str:
        if self.kind == "ising":
            for name, preset in (("integrable", INTEGRABLE), ("chaotic", CHAOTIC)):
                if all(getattr(self, k) == v for k, v in preset.items()):
                    return name
        return self.kind

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "n_total": self.n_total}
        if self.kind == "ising":
            out.update(J=self.J, Bx=self.Bx, Bz=self.Bz, t=self.t)
        elif self.kind == "haar":
            out["seed"] = self.seed
        elif self.kind == "layered":
            out.update(depth=self.depth, seed=self.seed)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "ReservoirSpec":
        known = {"kind", "n_total", "J", "Bx", "Bz", "t", "depth", "seed"}
        extra = set(d) - known
        if extra:
            raise ValueError(f"unknown reservoir keys {sorted(extra)}")
        return cls(**d)


def ising_hamiltonian(n: int, J: float, Bx: float, Bz: float) -> np.ndarray:
    """``J sum Z_i Z_{i+1} + Bz sum Z_i + Bx sum X_i`` with open boundaries."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = 2**n
    idx = np.arange(d)
    z = 1 - 2 * ((idx[:, None] >> (n - 1 - np.arange(n))[None, :]) & 1)
    diag = Bz * z.sum(axis=1).astype(float)
    if n > 1:
        diag = diag + J * (z[:, :-1] * z[:, 1:]).sum(axis=1)
    h = np.diag(diag).astype(complex)
    if Bx != 0.0:
        for q in range(n):
            h[idx, idx ^ (1 << (n - 1 - q))] += Bx
    return h


def layered_random_unitary(n: int, depth: int, rng: np.random.Generator) -> np.ndarray:
    """``depth`` layers of Haar single-qubit rotations, each followed by a CNOT chain."""
    d = 2**n
    rows = np.eye(d, dtype=complex)
    for _ in range(depth):
        for q in range(n):
            rows = apply_1q(rows, haar_unitary(2, rng), q, n)
        rows = apply_cnot_chain(rows, n)
    return rows.T


def realize(spec: ReservoirSpec, rng: np.random.Generator | None = None) -> np.ndarray:
    """Dense ``U_R``.  Random kinds draw from ``rng`` or, if absent, from ``spec.seed``."""
    d = 2**spec.n_total
    if spec.kind == "identity":
        return np.eye(d, dtype=complex)
    if spec.kind == "ising":
        h = ising_hamiltonian(spec.n_total, spec.J, spec.Bx, spec.Bz)
        return herm_expm(h, -spec.t)
    if rng is None:
        rng = np.random.default_rng(spec.seed)
    if spec.kind == "haar":
        return haar_unitary(d, rng)
    return layered_random_unitary(spec.n_total, spec.depth, rng)
