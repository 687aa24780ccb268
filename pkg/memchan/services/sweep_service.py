"""
Sweep service
Evaluates the uncertainty relation over a (mu, D) grid for one channel
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

from memchan.config import Config
from memchan.constants import (
    FIGURE_CORRELATIONS, FIGURE_D_STEPS, FIGURE_MU_VALUES, INEQUALITY_SLACK, PURITY_SLACK
)
from memchan.exceptions import ConfigError, InvariantViolation, UnphysicalState
from memchan.models.channel import ChannelKind, MemoryChannel
from memchan.models.observable import Observable, observable_pair
from memchan.models.record import SweepRecord
from memchan.models.state import BlochSpec, DensityMatrix
from memchan.models.sweep import DGrid, InitialState, SweepConfig
from memchan.services.channels import apply_memory_channel, closed_form_max_deviation
from memchan.services.states import density_from_bloch
from memchan.services.uncertainty import evaluate_point

logger = logging.getLogger(__name__)

FIGURE_FILES = {
    ChannelKind.AMPLITUDE_DAMPING: 'fig1_amplitude_damping',
    ChannelKind.PHASE_DAMPING: 'fig2_phase_damping',
    ChannelKind.DEPOLARIZING: 'fig3_depolarizing',
}


def figure_config(kind: ChannelKind, output_dir: str = '.', steps: int = FIGURE_D_STEPS) -> SweepConfig:
    """Built-in figure sweep: Bell-diagonal (1/2, -1/2, 1/2), mu in {0, 1/2, 1}, sigma_x/sigma_z"""
    kind = ChannelKind.parse(kind)
    return SweepConfig(
        channel=kind,
        mu_values=FIGURE_MU_VALUES,
        d_grid=DGrid(0.0, 1.0, steps),
        initial_state=InitialState(bell_diagonal=FIGURE_CORRELATIONS),
        observables='xz',
        output_path=str(Path(output_dir) / f'{FIGURE_FILES[kind]}.csv'),
    )


class SweepService:
    """Runs sweeps point by point on a bounded worker pool"""

    def __init__(self, threads: Optional[int] = None, config_class=Config):
        self.threads = threads or config_class.thread_count()

    def run(self, cfg: SweepConfig) -> List[SweepRecord]:
        """One record per grid point, ordered by mu then D ascending"""
        initial_spec = cfg.initial_state.to_bloch()
        try:
            initial = density_from_bloch(initial_spec)
        except UnphysicalState as e:
            raise ConfigError('initial_state', str(e))
        r, q = observable_pair(cfg.observables)
        points = cfg.grid_points()

        logger.info("Sweeping %s over %d points (%d mu values) with %d threads",
                    cfg.channel.value, len(points), len(cfg.mu_values), self.threads)

        def evaluate(point: Tuple[float, float]) -> SweepRecord:
            return self.evaluate(cfg.channel, point, initial, initial_spec, r, q)

        if self.threads == 1:
            records = [evaluate(point) for point in points]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                records = list(pool.map(evaluate, points))

        logger.info("Sweep %s finished: %d records", cfg.channel.value, len(records))
        return records

    def evaluate(self, kind: ChannelKind, point: Tuple[float, float], initial: DensityMatrix,
                 initial_spec: BlochSpec, r: Observable, q: Observable) -> SweepRecord:
        """Evolve the initial state to one (mu, D) point and evaluate it"""
        mu, D = point
        channel = MemoryChannel(kind, D, mu)
        try:
            evolved = apply_memory_channel(initial, channel)
        except UnphysicalState as e:
            raise UnphysicalState(str(e), eigenvalue=e.eigenvalue, grid_point=point) from e

        record = evaluate_point(evolved, r, q, D=D, mu=mu)
        logger.debug("%s mu=%g D=%g lhs=%.9f rhs=%.9f", kind.tag, mu, D, record.lhs, record.rhs)
        deviation = closed_form_max_deviation(initial_spec, channel, evolved)
        self._check_invariants(record, point)
        return SweepRecord.from_uncertainty(record, channel=kind.tag, table2_maxdev=deviation)

    @staticmethod
    def _check_invariants(record, point: Tuple[float, float]) -> None:
        mu, D = point
        if not record.satisfies_bound(INEQUALITY_SLACK):
            raise InvariantViolation(
                f"Uncertainty bound violated at (mu={mu:g}, D={D:g}): "
                f"lhs={record.lhs:.12g} < rhs={record.rhs:.12g}")
        if record.mu_lhs < record.mu_rhs - INEQUALITY_SLACK:
            raise InvariantViolation(
                f"Memoryless bound violated at (mu={mu:g}, D={D:g}): "
                f"{record.mu_lhs:.12g} < {record.mu_rhs:.12g}")
        if not (0.25 - PURITY_SLACK <= record.purity <= 1.0 + PURITY_SLACK):
            raise InvariantViolation(
                f"Purity {record.purity:.12g} outside [1/4, 1] at (mu={mu:g}, D={D:g})")


def run_sweep(cfg: SweepConfig, threads: Optional[int] = None) -> List[SweepRecord]:
    return SweepService(threads).run(cfg)
