"""
Sweep configuration model
Validated description of a (mu, D) grid run for one channel
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from memchan.exceptions import BadParameter, ConfigError
from memchan.models.channel import ChannelKind
from memchan.models.observable import OBSERVABLE_PAIRS
from memchan.models.state import BlochSpec


def _unit_interval(value: Any, field_name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(field_name, f"must be a number, got {value!r}")
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise ConfigError(field_name, f"must be in [0, 1], got {value:g}")
    return value


@dataclass(frozen=True)
class DGrid:
    """Inclusive decoherence grid"""
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        object.__setattr__(self, 'start', _unit_interval(self.start, 'd_grid.start'))
        object.__setattr__(self, 'stop', _unit_interval(self.stop, 'd_grid.stop'))
        if isinstance(self.steps, bool) or not isinstance(self.steps, int):
            raise ConfigError('d_grid.steps', f"must be an integer, got {self.steps!r}")
        if self.steps < 2:
            raise ConfigError('d_grid.steps', f"must be at least 2, got {self.steps}")
        if self.start > self.stop:
            raise ConfigError('d_grid.start', f"must not exceed stop ({self.start:g} > {self.stop:g})")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)

    def to_dict(self) -> Dict[str, Any]:
        return {'start': self.start, 'stop': self.stop, 'steps': self.steps}


@dataclass(frozen=True, eq=False)
class InitialState:
    """Either Bell-diagonal correlations or a full BlochSpec"""
    bell_diagonal: Optional[Tuple[float, float, float]] = None
    bloch: Optional[BlochSpec] = None

    def __post_init__(self):
        if (self.bell_diagonal is None) == (self.bloch is None):
            raise ConfigError('initial_state', "exactly one of 'bell_diagonal' or 'bloch' is required")
        if self.bell_diagonal is not None:
            values = tuple(self.bell_diagonal)
            if len(values) != 3:
                raise ConfigError('initial_state.bell_diagonal', f"expects 3 correlations, got {len(values)}")
            for i, c in enumerate(values):
                if isinstance(c, bool) or not isinstance(c, (int, float)):
                    raise ConfigError(f'initial_state.bell_diagonal[{i}]', f"must be a number, got {c!r}")
                if not -1.0 <= c <= 1.0:
                    raise ConfigError(f'initial_state.bell_diagonal[{i}]', f"must be in [-1, 1], got {c:g}")
            object.__setattr__(self, 'bell_diagonal', tuple(float(c) for c in values))

    @classmethod
    def from_bloch_dict(cls, data: Dict[str, Any]) -> 'InitialState':
        unknown = set(data) - {'a', 'b', 'T'}
        if unknown:
            raise ConfigError(f'initial_state.bloch.{sorted(unknown)[0]}', "unknown key")
        try:
            spec = BlochSpec(data.get('a', [0, 0, 0]), data.get('b', [0, 0, 0]),
                             data.get('T', [[0, 0, 0], [0, 0, 0], [0, 0, 0]]))
        except (BadParameter, TypeError, ValueError) as e:
            raise ConfigError('initial_state.bloch', str(e))
        return cls(bloch=spec)

    def to_bloch(self) -> BlochSpec:
        if self.bloch is not None:
            return self.bloch
        return BlochSpec.diagonal(np.zeros(3), np.zeros(3), self.bell_diagonal)

    def to_dict(self) -> Dict[str, Any]:
        if self.bloch is not None:
            return {'bloch': self.bloch.to_dict()}
        return {'bell_diagonal': list(self.bell_diagonal)}


@dataclass(frozen=True, eq=False)
class SweepConfig:
    """One sweep: channel, memory coefficients, D grid, input state, observables, output"""
    channel: ChannelKind
    mu_values: Tuple[float, ...]
    d_grid: DGrid
    initial_state: InitialState
    observables: str = 'xz'
    output_path: str = 'sweep.csv'

    def __post_init__(self):
        try:
            object.__setattr__(self, 'channel', ChannelKind.parse(self.channel))
        except BadParameter as e:
            raise ConfigError('channel', str(e))
        if not isinstance(self.mu_values, Sequence) or isinstance(self.mu_values, str) or not self.mu_values:
            raise ConfigError('mu_values', "must be a non-empty list of numbers")
        mus = tuple(_unit_interval(mu, f'mu_values[{i}]') for i, mu in enumerate(self.mu_values))
        object.__setattr__(self, 'mu_values', mus)
        if str(self.observables).lower() not in OBSERVABLE_PAIRS:
            raise ConfigError('observables', f"unknown pair {self.observables!r}; "
                                             f"expected one of {sorted(OBSERVABLE_PAIRS)}")
        if not isinstance(self.output_path, str) or not self.output_path.strip():
            raise ConfigError('output_path', "must be a non-empty string")

    def d_values(self) -> np.ndarray:
        return self.d_grid.values()

    def grid_points(self):
        """(mu, D) pairs ordered by mu, then D ascending"""
        return [(mu, float(D)) for mu in sorted(self.mu_values) for D in self.d_values()]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'channel': self.channel.value,
            'mu_values': list(self.mu_values),
            'd_grid': self.d_grid.to_dict(),
            'initial_state': self.initial_state.to_dict(),
            'observables': self.observables,
            'output_path': self.output_path,
        }
