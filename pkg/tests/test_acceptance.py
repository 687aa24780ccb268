"""End-to-end properties of the built-in figure sweeps"""

import numpy as np
import pandas as pd
import pytest

from memchan.models.channel import ChannelKind
from memchan.repositories.sweep_config_repository import config_from_dict
from memchan.services.sweep_service import SweepService, figure_config


@pytest.fixture(scope='module')
def figure_frames():
    service = SweepService(threads=2)
    return {kind: pd.DataFrame([r.to_dict() for r in service.run(figure_config(kind))])
            for kind in ChannelKind}


def series(frame, mu):
    return frame[frame['mu'] == mu].sort_values('D').reset_index(drop=True)


def at(frame, mu, D, column='lhs'):
    rows = frame[(frame['mu'] == mu) & np.isclose(frame['D'], D, atol=1e-12)]
    assert len(rows) == 1
    return float(rows[column].iloc[0])


@pytest.mark.parametrize('kind', list(ChannelKind))
def test_inequality_holds_on_fine_grid(kind):
    cfg = config_from_dict({
        'channel': kind.value,
        'mu_values': [float(mu) for mu in np.linspace(0, 1, 21)],
        'd_grid': {'start': 0.0, 'stop': 1.0, 'steps': 21},
        'initial_state': {'bell_diagonal': [0.5, -0.5, 0.5]},
        'output_path': 'unused.csv',
    })
    records = SweepService(threads=2).run(cfg)
    assert len(records) == 441
    assert all(r.lhs >= r.rhs - 1e-7 for r in records)
    assert all(r.mu_lhs >= r.mu_rhs - 1e-7 for r in records)
    assert all(0.25 - 1e-9 <= r.purity <= 1 + 1e-9 for r in records)


@pytest.mark.parametrize('kind', list(ChannelKind))
def test_endpoint_values_at_zero_decoherence(figure_frames, kind):
    frame = figure_frames[kind]
    for mu in (0.0, 0.5, 1.0):
        assert at(frame, mu, 0.0) == pytest.approx(1.622556, abs=1e-5)
        assert at(frame, mu, 0.0, 'rhs') == pytest.approx(1.548795, abs=1e-5)
        assert at(frame, mu, 0.0, 'purity') == pytest.approx(0.4375, abs=1e-10)


def test_fully_damped_endpoint(figure_frames):
    frame = figure_frames[ChannelKind.AMPLITUDE_DAMPING]
    assert at(frame, 0.0, 1.0) == pytest.approx(1.0, abs=1e-6)
    assert at(frame, 0.0, 1.0, 'rhs') == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize('kind', [ChannelKind.PHASE_DAMPING, ChannelKind.DEPOLARIZING])
def test_full_memory_is_immune_to_decoherence(figure_frames, kind):
    full = series(figure_frames[kind], 1.0)
    for column in ('lhs', 'rhs', 'purity'):
        assert full[column].max() - full[column].min() <= 1e-9


def test_amplitude_damping_shape(figure_frames):
    frame = figure_frames[ChannelKind.AMPLITUDE_DAMPING]
    memoryless = series(frame, 0.0)['lhs'].to_numpy()
    peak = int(np.argmax(memoryless))
    assert 0 < peak < len(memoryless) - 1
    weak = [at(frame, mu, 0.1) for mu in (0.0, 0.5, 1.0)]
    strong = [at(frame, mu, 0.9) for mu in (0.0, 0.5, 1.0)]
    assert weak[0] > weak[1] > weak[2]
    assert strong[0] < strong[1] < strong[2]


def test_amplitude_damping_purity_dips_then_recovers(figure_frames):
    purity = series(figure_frames[ChannelKind.AMPLITUDE_DAMPING], 0.0)['purity'].to_numpy()
    assert purity.min() < purity[0] < purity[-1]
    assert purity[-1] == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize('kind', [ChannelKind.PHASE_DAMPING, ChannelKind.DEPOLARIZING])
def test_memory_lowers_uncertainty_for_unital_channels(figure_frames, kind):
    frame = figure_frames[kind]
    none, half, full = (series(frame, mu)['lhs'].to_numpy() for mu in (0.0, 0.5, 1.0))
    interior = slice(1, -1)
    assert np.all(full[interior] <= half[interior] + 1e-9)
    assert np.all(half[interior] <= none[interior] + 1e-9)


def test_lhs_and_purity_are_anti_correlated(figure_frames):
    memoryless = series(figure_frames[ChannelKind.AMPLITUDE_DAMPING], 0.0)
    assert memoryless['lhs'].corr(memoryless['purity']) < 0
