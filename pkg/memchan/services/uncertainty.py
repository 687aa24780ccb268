"""
Entropic uncertainty under quantum memory
Post-measurement states, entropies, complementarity and both sides of the
memory-assisted and memoryless uncertainty relations (all entropies in bits)
"""

from typing import Iterable, Tuple

import numpy as np

from memchan.constants import SIGMA_0
from memchan.exceptions import BadDimension
from memchan.linalg import clip_probabilities, kron, partial_trace
from memchan.models.matrix import Subsystem
from memchan.models.observable import Observable
from memchan.models.record import UncertaintyRecord
from memchan.models.state import DensityMatrix
from memchan.services.states import purity


def _require_joint(rho: DensityMatrix, operation: str) -> None:
    if rho.dim != 4:
        raise BadDimension(f"{operation} expects a 4x4 two-qubit state, got {rho.dim}x{rho.dim}")


def post_measurement_state(rho: DensityMatrix, x: Observable) -> DensityMatrix:
    """sum_k (|phi_k><phi_k| (x) I) rho (|phi_k><phi_k| (x) I), measuring qubit A"""
    _require_joint(rho, 'post_measurement_state')
    mat = np.zeros((4, 4), dtype=np.complex128)
    for proj in x.projectors():
        lifted = kron(proj, SIGMA_0)
        mat += lifted @ rho.mat @ lifted
    return DensityMatrix(mat)


def shannon_entropy(probabilities: Iterable[float]) -> float:
    """-sum p log2 p with 0 log 0 = 0"""
    p = clip_probabilities(list(probabilities))
    p = p[p > 0.0]
    return float(-np.sum(p * np.log2(p))) + 0.0


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) in bits from the cached spectrum"""
    return shannon_entropy(rho.spectrum)


def reduced_state(rho: DensityMatrix, keep: Subsystem) -> DensityMatrix:
    _require_joint(rho, 'reduced_state')
    return DensityMatrix(partial_trace(rho.mat, keep))


def conditional_entropy(rho_joint: DensityMatrix) -> float:
    """S(A|B) = S(rho_AB) - S(rho_B); negative for sufficiently entangled states"""
    return von_neumann_entropy(rho_joint) - von_neumann_entropy(reduced_state(rho_joint, Subsystem.B))


def complementarity(r: Observable, q: Observable) -> float:
    """c = max_ij |<phi_i|psi_j>|^2"""
    overlaps = np.abs(r.eigenbasis.conj().T @ q.eigenbasis) ** 2
    return float(overlaps.max())


def _conditional_pair(rho: DensityMatrix, r: Observable, q: Observable) -> Tuple[float, float, float]:
    # Measuring A leaves rho_B untouched, so S(B) is shared by both terms
    s_b = von_neumann_entropy(reduced_state(rho, Subsystem.B))
    s_rb = von_neumann_entropy(post_measurement_state(rho, r)) - s_b
    s_qb = von_neumann_entropy(post_measurement_state(rho, q)) - s_b
    return s_rb, s_qb, s_b


def uncertainty_lhs(rho: DensityMatrix, r: Observable, q: Observable) -> float:
    """S(R|B) + S(Q|B)"""
    _require_joint(rho, 'uncertainty_lhs')
    s_rb, s_qb, _ = _conditional_pair(rho, r, q)
    return s_rb + s_qb


def uncertainty_rhs(rho: DensityMatrix, r: Observable, q: Observable) -> float:
    """log2(1/c) + S(A|B)"""
    _require_joint(rho, 'uncertainty_rhs')
    return float(np.log2(1.0 / complementarity(r, q))) + conditional_entropy(rho)


def outcome_distribution(rho_a: DensityMatrix, x: Observable) -> np.ndarray:
    """p_k = <phi_k|rho_A|phi_k>"""
    return np.array([np.real(np.vdot(v, rho_a.mat @ v)) for v in x.vectors()])


def mu_bound(rho_a: DensityMatrix, r: Observable, q: Observable) -> Tuple[float, float]:
    """Memoryless relation on a single qubit: (H(R) + H(Q), log2(1/c))"""
    if rho_a.dim != 2:
        raise BadDimension(f"mu_bound expects a 2x2 single-qubit state, got {rho_a.dim}x{rho_a.dim}")
    lhs = shannon_entropy(outcome_distribution(rho_a, r)) + shannon_entropy(outcome_distribution(rho_a, q))
    rhs = float(np.log2(1.0 / complementarity(r, q)))
    return lhs, rhs


def evaluate_point(rho: DensityMatrix, r: Observable, q: Observable,
                   D: float = 0.0, mu: float = 0.0) -> UncertaintyRecord:
    """Every quantity reported for one evolved state"""
    _require_joint(rho, 'evaluate_point')
    s_rb, s_qb, s_b = _conditional_pair(rho, r, q)
    bound = float(np.log2(1.0 / complementarity(r, q)))
    mu_lhs, mu_rhs = mu_bound(reduced_state(rho, Subsystem.A), r, q)
    return UncertaintyRecord(
        D=float(D),
        mu=float(mu),
        lhs=s_rb + s_qb,
        rhs=bound + von_neumann_entropy(rho) - s_b,
        s_xB=s_rb,
        s_zB=s_qb,
        purity=purity(rho),
        mu_lhs=mu_lhs,
        mu_rhs=mu_rhs,
    )
