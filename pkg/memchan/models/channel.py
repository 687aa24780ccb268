"""
Channel models
Memory channel parameters and Kraus operator sets
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

import numpy as np

from memchan.exceptions import BadParameter
from memchan.models.matrix import ComplexMatrix


class ChannelKind(str, Enum):
    """The three noise channels, valued by their command-line names"""
    AMPLITUDE_DAMPING = 'amplitude-damping'
    PHASE_DAMPING = 'phase-damping'
    DEPOLARIZING = 'depolarizing'

    @property
    def tag(self) -> str:
        """Short tag used in CSV rows and reports"""
        return {'amplitude-damping': 'Am', 'phase-damping': 'Ph', 'depolarizing': 'De'}[self.value]

    @property
    def is_unital(self) -> bool:
        return self is not ChannelKind.AMPLITUDE_DAMPING

    @classmethod
    def parse(cls, name: str) -> 'ChannelKind':
        """Accept CLI names, enum names or short tags (case-insensitive)"""
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace('_', '-')
        for kind in cls:
            if key in (kind.value, kind.tag.lower()):
                return kind
        raise BadParameter(f"Unknown channel {name!r}; expected one of {[k.value for k in cls]}")


def _check_unit_interval(value: float, name: str) -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise BadParameter(f"{name} must be in [0, 1], got {value:g}")
    return value


def decoherence_from_rate(gamma: float, t: float) -> float:
    """D = 1 - exp(-gamma t)"""
    if gamma < 0 or t < 0:
        raise BadParameter(f"gamma and t must be non-negative, got gamma={gamma:g}, t={t:g}")
    return 1.0 - math.exp(-gamma * t)


@dataclass(frozen=True)
class MemoryChannel:
    """Channel kind with decoherence D and memory coefficient mu"""
    kind: ChannelKind
    D: float
    mu: float

    def __post_init__(self):
        object.__setattr__(self, 'kind', ChannelKind.parse(self.kind))
        object.__setattr__(self, 'D', _check_unit_interval(self.D, 'D'))
        object.__setattr__(self, 'mu', _check_unit_interval(self.mu, 'mu'))

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind.value, 'D': self.D, 'mu': self.mu}


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Kraus operators of one branch (uncorrelated or correlated) of a memory channel"""
    operators: Tuple[ComplexMatrix, ...]
    correlated: bool
    kind: ChannelKind
    D: float

    def __post_init__(self):
        ops = []
        for op in self.operators:
            mat = np.array(op, dtype=np.complex128)
            mat.setflags(write=False)
            ops.append(mat)
        object.__setattr__(self, 'operators', tuple(ops))

    def __len__(self) -> int:
        return len(self.operators)

    def __iter__(self):
        return iter(self.operators)

    @property
    def label(self) -> str:
        return 'correlated' if self.correlated else 'uncorrelated'
