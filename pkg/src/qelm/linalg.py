"""Dense complex linear algebra used by every other module.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.  All
functions are pure; randomness is always supplied through an explicit
``numpy.random.Generator``.
"""

from __future__ import annotations

from functools import reduce
from typing import Sequence

import numpy as np

HERMITIAN_ATOL = 1e-10

__all__ = [
    "kron",
    "is_hermitian",
    "herm_eig",
    "herm_expm",
    "haar_unitary",
    "partial_trace",
    "svd_rank",
    "trace_norm",
    "von_neumann_entropy",
    "relative_entropy",
    "renyi2_relative_entropy",
    "swap_operator",
    "haar_twirl",
    "derive_rng",
]


def kron(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of matrices (left to right)."""
    if not ops:
        return np.ones((1, 1), dtype=complex)
    return reduce(np.kron, ops)


def is_hermitian(m: np.ndarray, atol: float = HERMITIAN_ATOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.allclose(m, m.conj().T, rtol=0.0, atol=atol))


def _require_hermitian(h: np.ndarray) -> np.ndarray:
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise ValueError("matrix is not Hermitian")
    return h


def herm_eig(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition ``h = V diag(w) V^dagger`` with ``w`` ascending."""
    h = _require_hermitian(h)
    w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
    return w, v


def herm_expm(h: np.ndarray, t: float) -> np.ndarray:
    """Return ``exp(i t h)`` for Hermitian ``h``.

    Computed through the eigendecomposition so the result is unitary to
    machine precision for any ``t``.
    """
    w, v = herm_eig(h)
    return (v * np.exp(1j * t * w)) @ v.conj().T


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Sample a ``d x d`` unitary from the Haar measure.

    Complex Ginibre matrix followed by QR; the phases of ``diag(R)`` are
    absorbed into ``Q`` so the distribution is exactly Haar (Mezzadri 2007).
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    phases = diag / np.abs(diag)
    return q * phases


def partial_trace(rho: np.ndarray, keep: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    ``dims`` gives the dimension of each subsystem, ordered as in the
    Kronecker product (subsystem 0 is the leftmost factor).  The kept
    subsystems appear in the output in ascending index order.
    """
    rho = np.asarray(rho)
    dims = [int(d) for d in dims]
    n = len(dims)
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ValueError(f"rho has shape {rho.shape}, expected ({total}, {total})")
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        raise ValueError("subsystem index out of range")
    traced = [i for i in range(n) if i not in keep]
    t = rho.reshape(dims + dims)
    # trace from the highest index down so remaining axis numbers stay valid
    for count, i in enumerate(sorted(traced, reverse=True)):
        m = n - count
        t = np.trace(t, axis1=i, axis2=i + m)
    d_keep = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(d_keep, d_keep)


def svd_rank(m: np.ndarray, tol: float = 1e-9) -> int:
    """Number of singular values larger than ``tol * sigma_max``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def trace_norm(m: np.ndarray) -> float:
    """Schatten 1-norm (sum of singular values)."""
    m = np.asarray(m)
    if is_hermitian(m, atol=1e-12):
        return float(np.sum(np.abs(np.linalg.eigvalsh(0.5 * (m + m.conj().T)))))
    return float(np.sum(np.linalg.svd(m, compute_uv=False)))


def _eigs_clipped(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    w, v = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    return np.clip(w, 0.0, None), v


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy in bits."""
    w, _ = _eigs_clipped(np.asarray(rho, dtype=complex))
    w = w[w > 1e-15]
    return float(-np.sum(w * np.log2(w)))


def relative_entropy(rho: np.ndarray, sigma: np.ndarray, atol: float = 1e-12) -> float:
    """Quantum relative entropy ``S(rho || sigma)`` in bits.

    Returns ``inf`` when the support of ``rho`` is not contained in the
    support of ``sigma``.
    """
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise ValueError("rho and sigma must have the same shape")
    p, u = _eigs_clipped(rho)
    q, v = _eigs_clipped(sigma)
    overlap = np.abs(u.conj().T @ v) ** 2  # overlap[i, j] = |<u_i|v_j>|^2
    mask_p = p > atol
    weight = p[:, None] * overlap
    null_q = q <= atol
    if np.any(weight[:, null_q] > atol):
        return float("inf")
    log_q = np.zeros_like(q)
    log_q[~null_q] = np.log2(q[~null_q])
    term_p = np.sum(p[mask_p] * np.log2(p[mask_p]))
    cross = np.sum(weight[:, ~null_q] * log_q[~null_q])
    return float(max(term_p - cross, 0.0))


def renyi2_relative_entropy(rho: np.ndarray, d: int | None = None) -> float:
    """Sandwiched 2-Renyi divergence to the maximally mixed state, in bits.

    For ``sigma = I/d`` this reduces to ``log2(d * Tr[rho^2])``.
    """
    rho = np.asarray(rho, dtype=complex)
    if d is None:
        d = rho.shape[0]
    if rho.shape != (d, d):
        raise ValueError("rho must be d x d")
    purity = float(np.real(np.vdot(rho, rho)))
    return float(np.log2(d * purity))


def swap_operator(d: int) -> np.ndarray:
    """SWAP on ``C^d (x) C^d``."""
    s = np.zeros((d * d, d * d), dtype=complex)
    idx = np.arange(d)
    s[(idx[:, None] * d + idx[None, :]).ravel(), (idx[None, :] * d + idx[:, None]).ravel()] = 1.0
    return s


def haar_twirl(x: np.ndarray, d: int) -> np.ndarray:
    """Second-moment Haar twirl ``int dU U^{(x)2} X U^{dagger (x)2}``.

    Uses the Weingarten formula: the result is ``a I + b SWAP`` with
    ``a = (Tr X - Tr[X SWAP]/d) / (d^2 - 1)`` and
    ``b = (Tr[X SWAP] - Tr X/d) / (d^2 - 1)``.
    """
    x = np.asarray(x, dtype=complex)
    swap = swap_operator(d)
    ident = np.eye(d * d, dtype=complex)
    if d == 1:
        return np.trace(x) * ident
    tr_x = np.trace(x)
    tr_xs = np.trace(x @ swap)
    a = (tr_x - tr_xs / d) / (d * d - 1)
    b = (tr_xs - tr_x / d) / (d * d - 1)
    return a * ident + b * swap


def derive_rng(seed: int, index: int | Sequence[int] = ()) -> np.random.Generator:
    """Independent generator for task ``index`` of a sweep with master ``seed``."""
    if isinstance(index, (int, np.integer)):
        index = (int(index),)
    return np.random.default_rng([int(seed), *[int(i) for i in index]])
