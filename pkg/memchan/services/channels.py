"""
Noise channels with memory
Kraus sets for uncorrelated and correlated uses, the memory mixture, and the
printed closed-form evolution used as a cross-check target
"""

from functools import lru_cache
from typing import Dict, List, Optional

import numpy as np

from memchan.constants import ORACLE_TOL, PAULIS
from memchan.exceptions import BadDimension, BadParameter, UnsupportedInput
from memchan.linalg import kron
from memchan.models.channel import ChannelKind, KrausSet, MemoryChannel
from memchan.models.matrix import ComplexMatrix, max_norm
from memchan.models.record import EntryDeviation
from memchan.models.state import BlochSpec, DensityMatrix
from memchan.services.states import bloch_from_density, density_from_bloch


def _check_decoherence(D: float) -> float:
    D = float(D)
    if not (0.0 <= D <= 1.0):
        raise BadParameter(f"D must be in [0, 1], got {D:g}")
    return D


def _pauli_weights(kind: ChannelKind, D: float) -> Dict[int, float]:
    if kind is ChannelKind.PHASE_DAMPING:
        return {0: 1.0 - D, 3: D}
    return {0: 1.0 - D, 1: D / 3.0, 2: D / 3.0, 3: D / 3.0}


def _damping_factors(D: float) -> List[ComplexMatrix]:
    a0 = np.array([[np.sqrt(1.0 - D), 0], [0, 1]], dtype=np.complex128)
    a1 = np.array([[0, 0], [np.sqrt(D), 0]], dtype=np.complex128)
    return [a0, a1]


@lru_cache(maxsize=2048)
def _uncorrelated(kind: ChannelKind, D: float) -> KrausSet:
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        factors = _damping_factors(D)
        ops = [kron(ai, aj) for ai in factors for aj in factors]
    else:
        weights = _pauli_weights(kind, D)
        ops = [np.sqrt(weights[i] * weights[j]) * kron(PAULIS[i], PAULIS[j])
               for i in weights for j in weights]
    return KrausSet(tuple(ops), correlated=False, kind=kind, D=D)


@lru_cache(maxsize=2048)
def _correlated(kind: ChannelKind, D: float) -> KrausSet:
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        e00 = np.diag([np.sqrt(1.0 - D), 1.0, 1.0, 1.0]).astype(np.complex128)
        e11 = np.zeros((4, 4), dtype=np.complex128)
        e11[3, 0] = np.sqrt(D)
        ops = [e00, e11]
    else:
        weights = _pauli_weights(kind, D)
        ops = [np.sqrt(weights[k]) * kron(PAULIS[k], PAULIS[k]) for k in weights]
    return KrausSet(tuple(ops), correlated=True, kind=kind, D=D)


def kraus_uncorrelated(kind, D: float) -> KrausSet:
    """Independent errors on the two uses: E_ij = A_i (x) A_j or sqrt(P_i P_j) s_i (x) s_j"""
    return _uncorrelated(ChannelKind.parse(kind), _check_decoherence(D))


def kraus_correlated(kind, D: float) -> KrausSet:
    """The same error on both uses: E_kk"""
    return _correlated(ChannelKind.parse(kind), _check_decoherence(D))


def kraus_completeness(kraus_set: KrausSet) -> float:
    """max-norm of (sum E^dagger E - I)"""
    ops = np.array(kraus_set.operators)
    total = np.einsum('kji,kjl->il', ops.conj(), ops)
    return max_norm(total - np.eye(total.shape[0]))


def apply_kraus(mat: ComplexMatrix, kraus_set: KrausSet) -> ComplexMatrix:
    """sum_k E_k rho E_k^dagger on a raw matrix"""
    ops = np.array(kraus_set.operators)
    return np.einsum('kij,jl,kml->im', ops, mat, ops.conj())


def memory_channel_matrix(mat: ComplexMatrix, ch: MemoryChannel) -> ComplexMatrix:
    """(1 - mu) sum E^u rho E^u+ + mu sum E^c rho E^c+ without validation"""
    uncorrelated = apply_kraus(mat, kraus_uncorrelated(ch.kind, ch.D))
    correlated = apply_kraus(mat, kraus_correlated(ch.kind, ch.D))
    return (1.0 - ch.mu) * uncorrelated + ch.mu * correlated


def apply_memory_channel(rho: DensityMatrix, ch: MemoryChannel) -> DensityMatrix:
    """Evolve a two-qubit state through two uses of a channel with memory"""
    if rho.dim != 4:
        raise BadDimension(f"Memory channels act on two-qubit states, got a {rho.dim}x{rho.dim} matrix")
    return DensityMatrix(memory_channel_matrix(rho.mat, ch))


def unital_residual(kind, D: float, correlated: bool) -> float:
    """max-norm distance of the branch image of I/4 from I/4"""
    kraus_set = kraus_correlated(kind, D) if correlated else kraus_uncorrelated(kind, D)
    mixed = np.eye(4, dtype=np.complex128) / 4.0
    return max_norm(apply_kraus(mixed, kraus_set) - mixed)


def _printed_entries(s: BlochSpec, ch: MemoryChannel) -> Dict[str, float]:
    """Closed-form evolved parameters exactly as tabulated, including known misprints"""
    if not s.is_diagonal(atol=1e-12):
        raise UnsupportedInput("Closed-form evolution is only tabulated for diagonal correlation matrices")
    a1, a2, a3 = s.a
    b1, b2, b3 = s.b
    c1, c2, c3 = np.diag(s.T)
    D, mu = ch.D, ch.mu
    entries = {name: 0.0 for name in BlochSpec.zeros().entries()}

    if ch.kind is ChannelKind.AMPLITUDE_DAMPING:
        root = np.sqrt(1.0 - D)
        local = 0.5 * (2 * root + mu - root * mu)
        off = 0.5 * mu * (root - 1.0)
        leak = D * root * (1.0 - mu)
        entries.update({
            'x1': local * a1,
            'x2': local * a2,
            'x3': 0.5 * (1 + a3 - b3 - c3) * D * mu - D + (1 - D) * a3,
            'y1': local * b1,
            'y2': local * b2,
            'y3': 0.5 * (1 - a3 + b3 - c3) * D * mu - D + (1 - D) * b3,
            't11': c1 / 2 * (1 - root) * mu * (c2 - c1) + (1 - D - D * mu),
            't22': c2 / 2 * (1 - root) * mu * (c1 - c2) + (1 - D - D * mu),
            't33': D * (1 - mu) * (1 - D) * (c3 - a3 - b3) + D ** 2 * (1 - mu) + c3,
            't13': off * a1 - leak * a1,
            't23': off * a2 - leak * a2,
            't31': off * b1 - leak * b1,
            't32': off * b2 - leak * b2,
        })
    elif ch.kind is ChannelKind.PHASE_DAMPING:
        factor = 1 - (1 - D) * D * (1 - mu)
        entries.update({
            'x1': (1 - D) * a1, 'x2': (1 - D) * a2, 'x3': a3,
            'y1': (1 - D) * b1, 'y2': (1 - D) * b2, 'y3': b3,
            't11': c1 * factor, 't22': c2 * factor, 't33': c3,
        })
    else:
        shrink = 1 - 4 * D / 3
        factor = (9 - 8 * D * (3 - 2 * D) * (1 - mu)) / 9
        entries.update({
            'x1': shrink * a1, 'x2': shrink * a2, 'x3': shrink * a3,
            'y1': shrink * b1, 'y2': shrink * b2, 'y3': shrink * b3,
            't11': c1 * factor, 't22': c2 * factor, 't33': c3 * factor,
        })
    return {name: float(value) for name, value in entries.items()}


def analytic_evolved_bloch(s: BlochSpec, ch: MemoryChannel) -> BlochSpec:
    """
    Closed-form evolved BlochSpec for diagonal-T inputs.

    Only a cross-check target: the Kraus path is authoritative. Raises
    BadParameter when a printed formula leaves [-1, 1].
    """
    entries = _printed_entries(s, ch)
    a = [entries[f'x{i}'] for i in (1, 2, 3)]
    b = [entries[f'y{i}'] for i in (1, 2, 3)]
    T = [[entries[f't{i}{j}'] for j in (1, 2, 3)] for i in (1, 2, 3)]
    return BlochSpec(a, b, T)


def kraus_evolved_bloch(s: BlochSpec, ch: MemoryChannel) -> BlochSpec:
    """BlochSpec of the Kraus-evolved state"""
    return bloch_from_density(apply_memory_channel(density_from_bloch(s), ch))


def compare_with_oracle(s: BlochSpec, ch: MemoryChannel,
                        evolved: Optional[DensityMatrix] = None) -> List[EntryDeviation]:
    """
    Per-entry comparison of the printed closed form against Kraus evolution.

    `evolved` may pass an already evolved state to skip recomputing it.
    """
    printed = _printed_entries(s, ch)
    kraus_spec = bloch_from_density(evolved) if evolved is not None else kraus_evolved_bloch(s, ch)
    kraus = kraus_spec.entries()
    return [EntryDeviation(name, printed[name], kraus[name]) for name in printed]


def closed_form_max_deviation(s: BlochSpec, ch: MemoryChannel,
                         evolved: Optional[DensityMatrix] = None) -> float:
    """Largest printed-vs-Kraus entry deviation; NaN when T is not diagonal"""
    if not s.is_diagonal(atol=1e-12):
        return float('nan')
    return max(item.deviation for item in compare_with_oracle(s, ch, evolved))


def mismatches(comparison: List[EntryDeviation], tol: float = ORACLE_TOL) -> List[EntryDeviation]:
    return [item for item in comparison if item.deviation > tol]
