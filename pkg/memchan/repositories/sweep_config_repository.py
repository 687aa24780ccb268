"""
Sweep configuration repository
Loads JSON sweep descriptions into validated SweepConfig objects
"""

import json
from typing import Any, Dict

from memchan.exceptions import ConfigError
from memchan.models.sweep import DGrid, InitialState, SweepConfig
from memchan.repositories.base_repository import FileRepository, PathLike

REQUIRED_KEYS = ('channel', 'mu_values', 'd_grid', 'initial_state', 'output_path')
OPTIONAL_KEYS = ('observables',)


class SweepConfigRepository(FileRepository):
    """Repository for sweep configuration files"""

    def load(self, path: PathLike) -> SweepConfig:
        """Read and validate a sweep configuration file"""
        source = self.resolve(path)
        try:
            with open(source, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except FileNotFoundError:
            raise ConfigError('config', f"file not found: {source}")
        except json.JSONDecodeError as e:
            raise ConfigError('config', f"invalid JSON in {source} (line {e.lineno}): {e.msg}")
        except OSError as e:
            raise ConfigError('config', f"cannot read {source}: {e}")
        return self.parse(data)

    def parse(self, data: Any) -> SweepConfig:
        """Build a SweepConfig from decoded JSON"""
        if not isinstance(data, dict):
            raise ConfigError('config', "top level must be a JSON object")
        unknown = sorted(set(data) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS))
        if unknown:
            raise ConfigError(unknown[0], "unknown key")
        for key in REQUIRED_KEYS:
            if key not in data:
                raise ConfigError(key, "missing required key")

        extras = {key: data[key] for key in OPTIONAL_KEYS if key in data}
        return SweepConfig(
            channel=data['channel'],
            mu_values=data['mu_values'],
            d_grid=self._parse_grid(data['d_grid']),
            initial_state=self._parse_initial_state(data['initial_state']),
            output_path=data['output_path'],
            **extras,
        )

    def save(self, cfg: SweepConfig, path: PathLike) -> None:
        """Write a configuration back out, e.g. for the built-in figure runs"""
        self.write_text(path, json.dumps(cfg.to_dict(), indent=2) + '\n')

    @staticmethod
    def _parse_grid(data: Any) -> DGrid:
        if not isinstance(data, dict):
            raise ConfigError('d_grid', "must be an object with start, stop and steps")
        unknown = sorted(set(data) - {'start', 'stop', 'steps'})
        if unknown:
            raise ConfigError(f'd_grid.{unknown[0]}', "unknown key")
        for key in ('start', 'stop', 'steps'):
            if key not in data:
                raise ConfigError(f'd_grid.{key}', "missing required key")
        return DGrid(data['start'], data['stop'], data['steps'])

    @staticmethod
    def _parse_initial_state(data: Any) -> InitialState:
        if not isinstance(data, dict) or len(data) != 1:
            raise ConfigError('initial_state', "must hold exactly one of 'bell_diagonal' or 'bloch'")
        key, value = next(iter(data.items()))
        if key == 'bell_diagonal':
            if not isinstance(value, list):
                raise ConfigError('initial_state.bell_diagonal', "must be a list of 3 numbers")
            return InitialState(bell_diagonal=tuple(value))
        if key == 'bloch':
            if not isinstance(value, dict):
                raise ConfigError('initial_state.bloch', "must be an object with a, b and T")
            return InitialState.from_bloch_dict(value)
        raise ConfigError(f'initial_state.{key}', "unknown key")


def config_from_dict(data: Dict[str, Any]) -> SweepConfig:
    return SweepConfigRepository().parse(data)
