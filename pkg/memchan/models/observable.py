"""
Qubit observables
Hermitian 2x2 matrices with their eigenbasis resolved once at construction
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
from typing_extensions import Self

from memchan.constants import ARITHMETIC_TOL, SIGMA_1, SIGMA_2, SIGMA_3
from memchan.exceptions import BadParameter
from memchan.linalg import hermitian_eigensystem
from memchan.models.matrix import ComplexMatrix, as_matrix, max_norm, require_square

_PAULI_BY_AXIS = {'x': SIGMA_1, 'y': SIGMA_2, 'z': SIGMA_3}


@dataclass(frozen=True, eq=False)
class Observable:
    """Measured quantity on qubit A; eigenvectors ordered by descending eigenvalue"""
    mat: ComplexMatrix
    name: str = ''
    eigenvalues: np.ndarray = field(init=False, repr=False)
    eigenbasis: ComplexMatrix = field(init=False, repr=False)

    def __post_init__(self):
        mat = as_matrix(self.mat).copy()
        require_square(mat, 2)
        values, vectors = hermitian_eigensystem(mat)
        gram = vectors.conj().T @ vectors
        if max_norm(gram - np.eye(2)) > ARITHMETIC_TOL:
            raise BadParameter(f"Eigenbasis of observable {self.name or mat.tolist()} is not orthonormal")
        for arr in (mat, values, vectors):
            arr.setflags(write=False)
        object.__setattr__(self, 'mat', mat)
        object.__setattr__(self, 'eigenvalues', values)
        object.__setattr__(self, 'eigenbasis', vectors)

    @classmethod
    def pauli(cls, axis: str) -> Self:
        key = axis.lower().replace('sigma_', '')
        if key not in _PAULI_BY_AXIS:
            raise BadParameter(f"Unknown Pauli axis {axis!r}; expected x, y or z")
        return cls(_PAULI_BY_AXIS[key], name=f'sigma_{key}')

    @classmethod
    def rotated(cls, theta: float) -> Self:
        """cos(theta) sigma_z + sin(theta) sigma_x"""
        return cls(np.cos(theta) * SIGMA_3 + np.sin(theta) * SIGMA_1, name=f'rot({theta:.6g})')

    def vectors(self) -> List[np.ndarray]:
        return [self.eigenbasis[:, k] for k in range(self.eigenbasis.shape[1])]

    def projectors(self) -> List[ComplexMatrix]:
        return [np.outer(v, v.conj()) for v in self.vectors()]


OBSERVABLE_PAIRS: Dict[str, Tuple[str, str]] = {
    'xz': ('x', 'z'),
    'xy': ('x', 'y'),
    'yz': ('y', 'z'),
}


def observable_pair(tag: str = 'xz') -> Tuple[Observable, Observable]:
    """Resolve a pair tag such as 'xz' into (R, Q)"""
    key = str(tag).lower().replace('sigma_', '').replace('/', '').replace(',', '')
    if key not in OBSERVABLE_PAIRS:
        raise BadParameter(f"Unknown observable pair {tag!r}; expected one of {sorted(OBSERVABLE_PAIRS)}")
    first, second = OBSERVABLE_PAIRS[key]
    return Observable.pauli(first), Observable.pauli(second)
