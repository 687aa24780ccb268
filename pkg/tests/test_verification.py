import time

import numpy as np
import pytest

from memchan.constants import ARITHMETIC_TOL, PSD_TOL
from memchan.models.channel import ChannelKind
from memchan.services.verification_service import BRANCHES, D_CHECKPOINTS, VerificationService


def test_cptp_suite_runs_within_budget():
    service = VerificationService(samples=100, seed=7)
    rng = np.random.default_rng(7)
    started = time.perf_counter()
    tables = [(service.completeness_table(kind), service.cptp_table(kind, rng)) for kind in ChannelKind]
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    for completeness, cptp in tables:
        assert completeness[list(BRANCHES)].to_numpy().max() <= ARITHMETIC_TOL
        assert cptp['max_trace_error'].max() <= ARITHMETIC_TOL
        assert cptp['min_eigenvalue'].min() >= -PSD_TOL
        assert len(cptp) == len(D_CHECKPOINTS) * len(BRANCHES)


@pytest.mark.parametrize('kind', list(ChannelKind))
def test_unital_table_marks_amplitude_damping(kind):
    table = VerificationService.unital_table(kind)
    worst = table[list(BRANCHES)].to_numpy().max()
    assert (worst <= ARITHMETIC_TOL) == kind.is_unital
