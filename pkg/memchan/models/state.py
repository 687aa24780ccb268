"""
Two-qubit state models
Hilbert-Schmidt parameters (BlochSpec) and validated density matrices
"""

from dataclasses import dataclass, field
from typing import Any, Dict

import numpy as np
from typing_extensions import Self

from memchan.constants import HERMITIAN_TOL, PSD_TOL, TRACE_TOL
from memchan.exceptions import BadDimension, BadParameter, UnphysicalState
from memchan.linalg import hermitian_eigenvalues
from memchan.models.matrix import ComplexMatrix, as_matrix, max_norm, require_square


def _frozen_array(values: Any, shape: tuple, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.shape != shape:
        raise BadParameter(f"{name} must have shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise BadParameter(f"{name} contains non-finite entries")
    if np.any(np.abs(arr) > 1.0 + 1e-12):
        raise BadParameter(f"{name} entries must lie in [-1, 1], got max |x| = {np.abs(arr).max():.6g}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BlochSpec:
    """Local Bloch vectors a (qubit A), b (qubit B) and correlation matrix T"""
    a: np.ndarray
    b: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'a', _frozen_array(self.a, (3,), 'a'))
        object.__setattr__(self, 'b', _frozen_array(self.b, (3,), 'b'))
        object.__setattr__(self, 'T', _frozen_array(self.T, (3, 3), 'T'))

    @classmethod
    def zeros(cls) -> Self:
        return cls(np.zeros(3), np.zeros(3), np.zeros((3, 3)))

    @classmethod
    def diagonal(cls, a, b, correlations) -> Self:
        """Build a spec whose correlation matrix is diag(correlations)"""
        return cls(a, b, np.diag(np.asarray(correlations, dtype=float)))

    def is_diagonal(self, atol: float = 0.0) -> bool:
        off = self.T - np.diag(np.diag(self.T))
        return bool(np.all(np.abs(off) <= atol))

    def max_deviation(self, other: 'BlochSpec') -> float:
        """Largest absolute entry difference across a, b and T"""
        return float(max(np.abs(self.a - other.a).max(),
                         np.abs(self.b - other.b).max(),
                         np.abs(self.T - other.T).max()))

    def entries(self) -> Dict[str, float]:
        """Flat view keyed x1..x3, y1..y3, t11..t33"""
        flat = {f'x{i + 1}': float(self.a[i]) for i in range(3)}
        flat.update({f'y{i + 1}': float(self.b[i]) for i in range(3)})
        flat.update({f't{i + 1}{j + 1}': float(self.T[i, j]) for i in range(3) for j in range(3)})
        return flat

    def to_dict(self) -> Dict[str, Any]:
        return {
            'a': self.a.tolist(),
            'b': self.b.tolist(),
            'T': self.T.tolist()
        }


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated 4x4 (joint) or 2x2 (reduced) density matrix"""
    mat: ComplexMatrix
    spectrum: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        mat = as_matrix(self.mat).copy()
        require_square(mat)
        if mat.shape[0] not in (2, 4):
            raise BadDimension(f"Density matrices must be 2x2 or 4x4, got {mat.shape[0]}x{mat.shape[1]}")
        hermitian_gap = max_norm(mat - mat.conj().T)
        if hermitian_gap > HERMITIAN_TOL:
            raise UnphysicalState(f"Density matrix is not Hermitian (deviation {hermitian_gap:.3e})")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > TRACE_TOL:
            raise UnphysicalState(f"Density matrix trace is {trace.real:.12g}, expected 1")

        spectrum = np.array(hermitian_eigenvalues(mat))
        if spectrum[-1] < -PSD_TOL:
            raise UnphysicalState(f"Density matrix has negative eigenvalue {spectrum[-1]:.6g}",
                                  eigenvalue=float(spectrum[-1]))
        mat.setflags(write=False)
        spectrum.setflags(write=False)
        object.__setattr__(self, 'mat', mat)
        object.__setattr__(self, 'spectrum', spectrum)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def is_joint(self) -> bool:
        return self.dim == 4

    def close_to(self, other: 'DensityMatrix', atol: float = 1e-12) -> bool:
        return self.dim == other.dim and max_norm(self.mat - other.mat) <= atol
