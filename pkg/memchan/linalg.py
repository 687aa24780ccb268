"""
Linear algebra primitives for two-qubit states
Kronecker products, partial traces and a cyclic Jacobi Hermitian eigensolver
"""

import math
from typing import List, Tuple, Union

import numpy as np

from memchan.constants import (
    CLIP_BUDGET, HERMITIAN_TOL, JACOBI_MAX_SWEEPS, JACOBI_THRESHOLD
)
from memchan.exceptions import BadDimension, NoConvergence, NonHermitianInput, UnphysicalState
from memchan.models.matrix import ComplexMatrix, Subsystem, as_matrix, max_norm, require_square


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product a (x) b"""
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(a: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose"""
    return as_matrix(a).conj().T


def _off_diagonal_norm(a: ComplexMatrix) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _rotate(a: ComplexMatrix, v: ComplexMatrix, p: int, q: int, skip: float = 0.0) -> None:
    """Zero a[p, q] in place with a complex Jacobi rotation; entries at or below skip are left alone"""
    apq = complex(a[p, q])
    r = abs(apq)
    if r <= skip or r == 0.0:
        return
    phase = apq / r
    theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    # columns p, q of a and v transform by rot; rows p, q of a by its adjoint
    rot = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    pair = [p, q]
    a[:, pair] = a[:, pair] @ rot
    a[pair, :] = rot.conj().T @ a[pair, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, pair] = v[:, pair] @ rot


def _check_hermitian(a: ComplexMatrix) -> ComplexMatrix:
    mat = as_matrix(a)
    require_square(mat)
    deviation = max_norm(mat - mat.conj().T)
    if deviation > HERMITIAN_TOL:
        raise NonHermitianInput(deviation)
    return (mat + mat.conj().T) / 2.0


def hermitian_eigensystem(a: ComplexMatrix) -> Tuple[np.ndarray, ComplexMatrix]:
    """
    Eigen-decomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Returns (eigenvalues, eigenvectors) with eigenvalues real and descending and
    eigenvectors as columns. Each eigenvector is phase-fixed so that its first
    non-negligible component is real and positive, which makes the output
    reproducible for repeated calls.
    """
    work = _check_hermitian(a).copy()
    n = work.shape[0]
    vectors = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_THRESHOLD * max(1.0, float(np.linalg.norm(work)))
    # every off-diagonal entry below threshold / n keeps the off-diagonal norm below threshold
    skip = threshold / n

    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_diagonal_norm(work) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, vectors, p, q, skip)
    else:
        residual = _off_diagonal_norm(work)
        if residual >= threshold:
            raise NoConvergence(residual, JACOBI_MAX_SWEEPS)

    values = np.real(np.diag(work)).copy()
    order = np.argsort(-values, kind='stable')
    values = values[order]
    vectors = vectors[:, order]

    for k in range(n):
        column = vectors[:, k]
        pivot = np.flatnonzero(np.abs(column) > 1e-9)
        if pivot.size:
            lead = column[pivot[0]]
            vectors[:, k] = column * (np.conj(lead) / abs(lead))
    return values, vectors


def hermitian_eigenvalues(a: ComplexMatrix) -> List[float]:
    """Real eigenvalues of a Hermitian matrix in descending order"""
    values, _ = hermitian_eigensystem(a)
    return [float(x) for x in values]


def partial_trace(rho: ComplexMatrix, keep: Union[Subsystem, str]) -> ComplexMatrix:
    """
    Reduce a 4x4 two-qubit operator to the kept qubit.

    Basis ordering is |00>, |01>, |10>, |11> with the first label on A.
    """
    mat = as_matrix(rho)
    if mat.shape != (4, 4):
        raise BadDimension(f"partial_trace expects a 4x4 matrix, got {mat.shape[0]}x{mat.shape[1]}")
    keep = Subsystem(keep)
    tensor = mat.reshape(2, 2, 2, 2)
    if keep is Subsystem.A:
        return np.einsum('ijkj->ik', tensor)
    return np.einsum('ijil->jl', tensor)


def clip_probabilities(values) -> np.ndarray:
    """Clip a spectrum to [0, 1]; negatives beyond the clip budget are an error"""
    arr = np.asarray(values, dtype=float)
    if arr.size and arr.min() < -CLIP_BUDGET:
        raise UnphysicalState(f"Eigenvalue {arr.min():.3e} below clip budget -{CLIP_BUDGET:g}",
                              eigenvalue=float(arr.min()))
    return np.clip(arr, 0.0, 1.0)
