"""
Verification service
CPTP checks, unital residuals, the printed closed-form vs Kraus report and the
purity/uncertainty correlation diagnostic for one channel
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from memchan.config import Config
from memchan.constants import ARITHMETIC_TOL, ORACLE_TOL, PSD_TOL
from memchan.linalg import hermitian_eigenvalues
from memchan.models.channel import ChannelKind, MemoryChannel
from memchan.services.channels import (
    apply_kraus, compare_with_oracle, kraus_completeness, kraus_correlated, kraus_uncorrelated,
    mismatches, unital_residual
)
from memchan.services.states import random_density_matrix, random_diagonal_bloch
from memchan.services.sweep_service import SweepService, figure_config

logger = logging.getLogger(__name__)

D_CHECKPOINTS = tuple(round(0.1 * k, 1) for k in range(11))
BRANCHES = ('uncorrelated', 'correlated')


@dataclass
class VerificationReport:
    """Everything `verify` prints for one channel"""
    channel: ChannelKind
    samples: int
    seed: int
    completeness: pd.DataFrame
    cptp: pd.DataFrame
    unital: pd.DataFrame
    oracle_inputs: int
    oracle_mismatches: pd.DataFrame
    oracle_max_deviation: float
    correlations: Dict[float, float]
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def oracle_matches(self) -> bool:
        return self.oracle_mismatches.empty

    def render(self) -> str:
        fmt = '{:.3e}'.format
        lines = [
            f"Verification report: {self.channel.value} ({self.channel.tag})",
            f"samples={self.samples} seed={self.seed}",
            '',
            '== Kraus completeness: max |sum E^dagger E - I| ==',
            self.completeness.to_string(index=False, float_format=fmt),
            '',
            f'== Trace preservation and positivity on {self.samples} random states ==',
            self.cptp.to_string(index=False, float_format=fmt),
            '',
            '== Unital residual: max |E(I/4) - I/4| ==',
            self.unital.to_string(index=False, float_format=fmt),
            '',
            f'== Closed-form table vs Kraus evolution ({self.oracle_inputs} random diagonal-T inputs) ==',
            f'max deviation: {self.oracle_max_deviation:.3e} (tolerance {ORACLE_TOL:g})',
        ]
        if self.oracle_matches:
            lines.append('all entries match')
        else:
            entries = sorted(self.oracle_mismatches['entry'].unique())
            lines.append(f'{len(self.oracle_mismatches)} mismatching entries ({", ".join(entries)}):')
            lines.append(self.oracle_mismatches.to_string(index=False, float_format='{:.9f}'.format))
        lines += ['', '== Pearson correlation of lhs vs purity (built-in figure sweep) ==']
        for mu, value in sorted(self.correlations.items()):
            shown = 'n/a (constant series)' if np.isnan(value) else f'{value:+.6f}'
            lines.append(f'mu={mu:g}: {shown}')
        lines += ['', 'FAILURES:' if self.failures else 'All checks passed.']
        lines += [f'  - {failure}' for failure in self.failures]
        return '\n'.join(lines) + '\n'


class VerificationService:
    """Runs the per-channel verification suite"""

    def __init__(self, samples: Optional[int] = None, seed: Optional[int] = None,
                 steps: Optional[int] = None, threads: Optional[int] = None, config_class=Config):
        self.samples = samples or config_class.VERIFY_SAMPLES
        self.seed = config_class.VERIFY_SEED if seed is None else seed
        self.steps = steps
        self.sweep_service = SweepService(threads, config_class)

    def verify(self, kind) -> VerificationReport:
        kind = ChannelKind.parse(kind)
        rng = np.random.default_rng(self.seed)
        failures: List[str] = []
        logger.info("Verifying %s with %d samples (seed %d)", kind.value, self.samples, self.seed)

        completeness = self.completeness_table(kind)
        worst = completeness[list(BRANCHES)].to_numpy().max()
        if worst > ARITHMETIC_TOL:
            failures.append(f"Kraus completeness residual {worst:.3e} exceeds {ARITHMETIC_TOL:g}")

        cptp = self.cptp_table(kind, rng)
        if cptp['max_trace_error'].max() > ARITHMETIC_TOL:
            failures.append(f"Trace not preserved: error {cptp['max_trace_error'].max():.3e}")
        if cptp['min_eigenvalue'].min() < -PSD_TOL:
            failures.append(f"Output not positive: eigenvalue {cptp['min_eigenvalue'].min():.3e}")

        unital = self.unital_table(kind)
        unital_worst = unital[list(BRANCHES)].to_numpy().max()
        if kind.is_unital and unital_worst > ARITHMETIC_TOL:
            failures.append(f"Unital channel moved I/4 by {unital_worst:.3e}")
        if not kind.is_unital and unital_worst <= ARITHMETIC_TOL:
            failures.append("Amplitude damping left I/4 fixed for every D > 0")

        oracle, max_deviation = self.oracle_report(kind, rng)
        correlations = self.purity_correlations(kind)
        if kind is ChannelKind.AMPLITUDE_DAMPING:
            memoryless = correlations.get(0.0, float('nan'))
            if not memoryless < 0:
                failures.append(f"lhs and purity are not anti-correlated at mu=0 (r={memoryless:.6f})")

        for failure in failures:
            logger.warning("%s: %s", kind.value, failure)
        return VerificationReport(
            channel=kind,
            samples=self.samples,
            seed=self.seed,
            completeness=completeness,
            cptp=cptp,
            unital=unital,
            oracle_inputs=self.samples,
            oracle_mismatches=oracle,
            oracle_max_deviation=max_deviation,
            correlations=correlations,
            failures=failures,
        )

    @staticmethod
    def completeness_table(kind: ChannelKind) -> pd.DataFrame:
        rows = [{'D': D,
                 'uncorrelated': kraus_completeness(kraus_uncorrelated(kind, D)),
                 'correlated': kraus_completeness(kraus_correlated(kind, D))}
                for D in D_CHECKPOINTS]
        return pd.DataFrame(rows, columns=['D', *BRANCHES])

    def cptp_table(self, kind: ChannelKind, rng: np.random.Generator) -> pd.DataFrame:
        """Trace error and smallest output eigenvalue per Kraus set, each set on its own"""
        states = [random_density_matrix(rng) for _ in range(self.samples)]
        rows = []
        for D in D_CHECKPOINTS:
            for branch, kraus_set in zip(BRANCHES, (kraus_uncorrelated(kind, D), kraus_correlated(kind, D))):
                trace_error, min_eigenvalue = 0.0, np.inf
                for rho in states:
                    out = apply_kraus(rho.mat, kraus_set)
                    trace_error = max(trace_error, abs(np.trace(out) - 1.0))
                    min_eigenvalue = min(min_eigenvalue, hermitian_eigenvalues(out)[-1])
                rows.append({'D': D, 'branch': branch, 'max_trace_error': trace_error,
                             'min_eigenvalue': min_eigenvalue})
        return pd.DataFrame(rows)

    @staticmethod
    def unital_table(kind: ChannelKind) -> pd.DataFrame:
        rows = [{'D': D,
                 'uncorrelated': unital_residual(kind, D, correlated=False),
                 'correlated': unital_residual(kind, D, correlated=True)}
                for D in D_CHECKPOINTS]
        return pd.DataFrame(rows, columns=['D', *BRANCHES])

    def oracle_report(self, kind: ChannelKind, rng: np.random.Generator):
        """Itemised mismatches between the tabulated closed form and Kraus evolution"""
        rows = []
        max_deviation = 0.0
        for sample in range(self.samples):
            spec = random_diagonal_bloch(rng)
            channel = MemoryChannel(kind, rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0))
            comparison = compare_with_oracle(spec, channel)
            max_deviation = max(max_deviation, max(item.deviation for item in comparison))
            for item in mismatches(comparison, ORACLE_TOL):
                rows.append({'sample': sample, 'D': channel.D, 'mu': channel.mu, 'entry': item.entry,
                             'printed': item.printed, 'kraus': item.kraus, 'deviation': item.deviation})
        if rows:
            logger.warning("%s: %d closed-form entries differ from Kraus evolution (max deviation %.3e)",
                           kind.value, len(rows), max_deviation)
        columns = ['sample', 'D', 'mu', 'entry', 'printed', 'kraus', 'deviation']
        return pd.DataFrame(rows, columns=columns), max_deviation

    def purity_correlations(self, kind: ChannelKind) -> Dict[float, float]:
        """Pearson r between lhs and purity for each mu series of the figure sweep"""
        cfg = figure_config(kind) if self.steps is None else figure_config(kind, steps=self.steps)
        records = self.sweep_service.run(cfg)
        frame = pd.DataFrame([record.to_dict() for record in records])
        correlations = {}
        for mu, group in frame.groupby('mu', sort=True):
            if group['lhs'].std() < 1e-12 or group['purity'].std() < 1e-12:
                correlations[float(mu)] = float('nan')
            else:
                correlations[float(mu)] = float(group['lhs'].corr(group['purity']))
        return correlations
