"""
Dense complex matrix carrier
Plain numpy arrays with shape validation and tolerance-based comparison
"""

from enum import Enum
from typing import Any, Optional

import numpy as np
import numpy.typing as npt

from memchan.exceptions import BadDimension

ComplexMatrix = npt.NDArray[np.complex128]


class Subsystem(str, Enum):
    """Tensor factor of a two-qubit state; A is the measured particle, B the memory"""
    A = 'A'
    B = 'B'


def as_matrix(data: Any) -> ComplexMatrix:
    """Convert to a 2-D complex128 array, rejecting empty or non-2-D input"""
    mat = np.asarray(data, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] < 1 or mat.shape[1] < 1:
        raise BadDimension(f"Expected a non-empty 2-D matrix, got shape {mat.shape}")
    return mat


def require_square(mat: ComplexMatrix, size: Optional[int] = None) -> None:
    """Raise BadDimension unless mat is square (and size x size when given)"""
    rows, cols = mat.shape
    if rows != cols:
        raise BadDimension(f"Expected a square matrix, got {rows}x{cols}")
    if size is not None and rows != size:
        raise BadDimension(f"Expected a {size}x{size} matrix, got {rows}x{cols}")


def max_norm(mat: ComplexMatrix) -> float:
    """Entrywise max-norm"""
    return float(np.max(np.abs(mat))) if mat.size else 0.0


def matrices_close(a: ComplexMatrix, b: ComplexMatrix, atol: float = 1e-12) -> bool:
    """Tolerance-based equality; shapes must agree"""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        return False
    return max_norm(a - b) <= atol
