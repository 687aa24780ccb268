"""
Two-qubit state construction and inspection
Conversion between density matrices and Hilbert-Schmidt parameters, purity, Bell-diagonal states
"""

from typing import Optional, Sequence

import numpy as np

from memchan.constants import PAULIS, PSD_TOL
from memchan.exceptions import BadDimension, UnphysicalState
from memchan.linalg import dagger
from memchan.models.matrix import ComplexMatrix, as_matrix
from memchan.models.state import BlochSpec, DensityMatrix

# _PAULI_PRODUCTS[m, n] = sigma_m (x) sigma_n
_PAULI_PRODUCTS = np.array([[np.kron(s, t) for t in PAULIS] for s in PAULIS])


def _coefficients(s: BlochSpec) -> np.ndarray:
    coeffs = np.zeros((4, 4))
    coeffs[0, 0] = 1.0
    coeffs[1:, 0] = s.a
    coeffs[0, 1:] = s.b
    coeffs[1:, 1:] = s.T
    return coeffs


def density_from_bloch(s: BlochSpec) -> DensityMatrix:
    """rho = 1/4 (I(x)I + sum a_i s_i(x)I + sum b_i I(x)s_i + sum t_ij s_i(x)s_j)"""
    mat = np.einsum('mn,mnij->ij', _coefficients(s), _PAULI_PRODUCTS) / 4.0
    return DensityMatrix(mat)


def bloch_from_density(rho: DensityMatrix) -> BlochSpec:
    """a_i = Tr(rho s_i(x)I), b_i = Tr(rho I(x)s_i), t_ij = Tr(rho s_i(x)s_j)"""
    if rho.dim != 4:
        raise BadDimension(f"bloch_from_density expects a 4x4 state, got {rho.dim}x{rho.dim}")
    coeffs = np.einsum('ij,mnji->mn', rho.mat, _PAULI_PRODUCTS).real
    return BlochSpec(coeffs[1:, 0], coeffs[0, 1:], coeffs[1:, 1:])


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2)"""
    return float(np.real(np.trace(rho.mat @ rho.mat)))


def bell_diagonal_spectrum(c1: float, c2: float, c3: float) -> np.ndarray:
    """Eigenvalues of the Bell-diagonal state with correlations (c1, c2, c3)"""
    return np.array([
        1 - c1 - c2 - c3,
        1 - c1 + c2 + c3,
        1 + c1 - c2 + c3,
        1 + c1 + c2 - c3,
    ]) / 4.0


def bell_diagonal(c1: float, c2: float, c3: float) -> DensityMatrix:
    """Bell-diagonal state: zero local vectors, T = diag(c1, c2, c3)"""
    smallest = float(bell_diagonal_spectrum(c1, c2, c3).min())
    if smallest < -PSD_TOL:
        raise UnphysicalState(f"Correlations ({c1:g}, {c2:g}, {c3:g}) give eigenvalue {smallest:.6g}",
                              eigenvalue=smallest)
    return density_from_bloch(BlochSpec.diagonal(np.zeros(3), np.zeros(3), (c1, c2, c3)))


def maximally_mixed(dim: int = 4) -> DensityMatrix:
    return DensityMatrix(np.eye(dim, dtype=np.complex128) / dim)


def projector(vector: Sequence[complex]) -> DensityMatrix:
    """Pure state |v><v| for a (not necessarily normalised) vector"""
    vec = np.asarray(vector, dtype=np.complex128)
    vec = vec / np.linalg.norm(vec)
    return DensityMatrix(np.outer(vec, vec.conj()))


def product_state(rho_a: DensityMatrix, rho_b: DensityMatrix) -> DensityMatrix:
    if rho_a.dim != 2 or rho_b.dim != 2:
        raise BadDimension("product_state expects two single-qubit states")
    return DensityMatrix(np.kron(rho_a.mat, rho_b.mat))


def rotate(rho: DensityMatrix, unitary: ComplexMatrix) -> DensityMatrix:
    """U rho U^dagger"""
    u = as_matrix(unitary)
    return DensityMatrix(u @ rho.mat @ dagger(u))


def random_density_matrix(rng: np.random.Generator, dim: int = 4,
                          rank: Optional[int] = None) -> DensityMatrix:
    """Random state from the Ginibre ensemble (full rank unless rank is given)"""
    cols = rank or dim
    ginibre = rng.normal(size=(dim, cols)) + 1j * rng.normal(size=(dim, cols))
    mat = ginibre @ ginibre.conj().T
    mat = mat / np.trace(mat).real
    return DensityMatrix((mat + mat.conj().T) / 2.0)


def random_diagonal_bloch(rng: np.random.Generator, budget: float = 0.95) -> BlochSpec:
    """
    Random BlochSpec with diagonal T that is always physical.

    The nine free entries are scaled so their absolute sum stays below
    `budget` < 1, which keeps every eigenvalue of the induced state positive.
    """
    raw = rng.uniform(-1.0, 1.0, size=9)
    scale = budget * rng.uniform(0.2, 1.0) / np.abs(raw).sum()
    raw = raw * scale
    return BlochSpec.diagonal(raw[0:3], raw[3:6], raw[6:9])
