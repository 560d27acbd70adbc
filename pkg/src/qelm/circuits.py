"""Batched statevector / density-matrix gate application.

Qubit 0 is the most significant bit of a basis index, i.e. the leftmost
factor of a Kronecker product.  Gates may carry leading batch dimensions
that broadcast against the state batch, which lets a whole grid of inputs
``x`` be pushed through a circuit at once.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def rz(theta) -> np.ndarray:
    """``exp(-i theta Z / 2)``; broadcasts over array-valued ``theta``."""
    theta = np.asarray(theta, dtype=float)
    out = np.zeros(theta.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = np.exp(-0.5j * theta)
    out[..., 1, 1] = np.exp(0.5j * theta)
    return out


def ry(theta) -> np.ndarray:
    """``exp(-i theta Y / 2)``; broadcasts over array-valued ``theta``."""
    theta = np.asarray(theta, dtype=float)
    c, s = np.cos(0.5 * theta), np.sin(0.5 * theta)
    out = np.zeros(theta.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = c
    out[..., 0, 1] = -s
    out[..., 1, 0] = s
    out[..., 1, 1] = c
    return out


def apply_1q(states: np.ndarray, gate: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """Apply a single-qubit gate to the last axis of ``states``.

    ``states`` has shape ``(..., 2**n)`` and ``gate`` has shape
    ``(..., 2, 2)`` with batch dimensions broadcastable to those of
    ``states``.
    """
    batch = states.shape[:-1]
    left, right = 2**qubit, 2 ** (n - qubit - 1)
    t = states.reshape(batch + (left, 2, right))
    out = np.einsum("...ab,...lbr->...lar", np.asarray(gate), t)
    return out.reshape(batch + (2**n,))


@lru_cache(maxsize=64)
def cnot_chain_permutation(n: int) -> np.ndarray:
    """Index map for ``CNOT(n-2, n-1) ... CNOT(0, 1)`` (first CNOT applied first).

    ``new_state = state[..., perm]``.
    """
    idx = np.arange(2**n)
    bits = (idx[:, None] >> (n - 1 - np.arange(n))[None, :]) & 1
    for c in range(n - 1):
        bits[:, c + 1] ^= bits[:, c]
    forward = (bits << (n - 1 - np.arange(n))[None, :]).sum(axis=1)
    # forward[b] is the image of basis state b; invert for a gather
    perm = np.empty_like(forward)
    perm[forward] = idx
    perm.setflags(write=False)
    return perm


def apply_cnot_chain(states: np.ndarray, n: int) -> np.ndarray:
    if n < 2:
        return states
    return states[..., cnot_chain_permutation(n)]


def apply_1q_rho(rho: np.ndarray, gate: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """``G rho G^dagger`` for a single-qubit gate on a batch of density matrices."""
    gate = np.asarray(gate)
    if gate.ndim > 2:
        # one extra batch axis for the untouched matrix index
        gate = gate[..., None, :, :]
    left = np.swapaxes(apply_1q(np.swapaxes(rho, -1, -2), gate, qubit, n), -1, -2)
    return apply_1q(left, gate.conj(), qubit, n)


def apply_cnot_chain_rho(rho: np.ndarray, n: int) -> np.ndarray:
    if n < 2:
        return rho
    perm = cnot_chain_permutation(n)
    return rho[..., perm, :][..., perm]


def apply_unitary_rho(rho: np.ndarray, u: np.ndarray) -> np.ndarray:
    """``U rho U^dagger`` with broadcasting over leading axes."""
    return u @ rho @ np.swapaxes(u.conj(), -1, -2)
