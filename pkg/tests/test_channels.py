import numpy as np
import pytest

from memchan.exceptions import BadDimension, BadParameter, UnsupportedInput
from memchan.models.channel import ChannelKind, MemoryChannel, decoherence_from_rate
from memchan.models.matrix import matrices_close
from memchan.models.state import BlochSpec
from memchan.services.channels import (
    analytic_evolved_bloch, apply_kraus, apply_memory_channel, compare_with_oracle,
    kraus_completeness, kraus_correlated, kraus_evolved_bloch, kraus_uncorrelated, mismatches,
    closed_form_max_deviation, unital_residual
)
from memchan.services.states import (
    bell_diagonal, bloch_from_density, density_from_bloch, maximally_mixed, projector,
    random_density_matrix, random_diagonal_bloch
)
from memchan.linalg import hermitian_eigenvalues

KINDS = list(ChannelKind)
D_GRID = [round(0.1 * k, 1) for k in range(11)]


@pytest.mark.parametrize('kind', KINDS)
@pytest.mark.parametrize('D', D_GRID)
def test_kraus_sets_are_complete(kind, D):
    assert kraus_completeness(kraus_uncorrelated(kind, D)) <= 1e-12
    assert kraus_completeness(kraus_correlated(kind, D)) <= 1e-12


@pytest.mark.parametrize('kind', KINDS)
def test_each_kraus_set_is_cptp_on_random_states(kind, rng):
    states = [random_density_matrix(rng) for _ in range(100)]
    for D in D_GRID:
        for kraus_set in (kraus_uncorrelated(kind, D), kraus_correlated(kind, D)):
            for rho in states:
                out = apply_kraus(rho.mat, kraus_set)
                assert abs(np.trace(out) - 1) <= 1e-12
                assert hermitian_eigenvalues(out)[-1] >= -1e-8


def test_kraus_set_sizes():
    assert len(kraus_uncorrelated('amplitude-damping', 0.3)) == 4
    assert len(kraus_correlated('amplitude-damping', 0.3)) == 2
    assert len(kraus_uncorrelated('phase-damping', 0.3)) == 4
    assert len(kraus_correlated('phase-damping', 0.3)) == 2
    assert len(kraus_uncorrelated('depolarizing', 0.3)) == 16
    assert len(kraus_correlated('depolarizing', 0.3)) == 4
    assert kraus_correlated('Am', 0.3).label == 'correlated'


def test_correlated_amplitude_damping_operators():
    D = 0.25
    e00, e11 = kraus_correlated(ChannelKind.AMPLITUDE_DAMPING, D)
    assert matrices_close(e00, np.diag([np.sqrt(0.75), 1, 1, 1]))
    expected = np.zeros((4, 4))
    expected[3, 0] = 0.5
    assert matrices_close(e11, expected)


def test_kraus_operators_are_read_only():
    op = kraus_correlated('depolarizing', 0.2).operators[0]
    with pytest.raises(ValueError):
        op[0, 0] = 0


@pytest.mark.parametrize('kind', KINDS)
def test_zero_decoherence_is_identity(kind, figure_state):
    for mu in (0.0, 0.4, 1.0):
        out = apply_memory_channel(figure_state, MemoryChannel(kind, 0.0, mu))
        assert out.close_to(figure_state, atol=1e-14)


def test_full_amplitude_damping_without_memory_gives_ground_state(figure_state):
    out = apply_memory_channel(figure_state, MemoryChannel('amplitude-damping', 1.0, 0.0))
    assert out.close_to(projector([0, 0, 0, 1]), atol=1e-12)


def test_full_amplitude_damping_with_memory(figure_state):
    out = apply_memory_channel(figure_state, MemoryChannel('amplitude-damping', 1.0, 1.0))
    assert matrices_close(out.mat, np.diag([0, 1 / 8, 1 / 8, 3 / 4]), atol=1e-12)


@pytest.mark.parametrize('kind', [ChannelKind.PHASE_DAMPING, ChannelKind.DEPOLARIZING])
@pytest.mark.parametrize('correlated', [False, True])
def test_unital_channels_fix_maximally_mixed(kind, correlated):
    for D in D_GRID:
        assert unital_residual(kind, D, correlated) <= 1e-12


def test_amplitude_damping_is_not_unital():
    assert unital_residual('amplitude-damping', 0.5, correlated=False) > 1e-3
    assert unital_residual('amplitude-damping', 0.5, correlated=True) > 1e-3
    out = apply_memory_channel(maximally_mixed(), MemoryChannel('amplitude-damping', 0.5, 0.5))
    assert not out.close_to(maximally_mixed(), atol=1e-6)


def test_full_depolarizing_without_memory_is_maximally_mixed_for_d_three_quarters(figure_state):
    out = apply_memory_channel(figure_state, MemoryChannel('depolarizing', 0.75, 0.0))
    assert out.close_to(maximally_mixed(), atol=1e-12)


def test_channel_parameter_validation(figure_state):
    with pytest.raises(BadParameter):
        MemoryChannel('phase-damping', 1.2, 0.0)
    with pytest.raises(BadParameter):
        MemoryChannel('phase-damping', 0.2, -0.1)
    with pytest.raises(BadParameter):
        MemoryChannel('bit-flip', 0.2, 0.1)
    with pytest.raises(BadParameter):
        kraus_uncorrelated('depolarizing', -0.01)
    with pytest.raises(BadDimension):
        apply_memory_channel(maximally_mixed(2), MemoryChannel('depolarizing', 0.1, 0.1))


def test_channel_kind_parsing():
    assert ChannelKind.parse('Ph') is ChannelKind.PHASE_DAMPING
    assert ChannelKind.parse('AMPLITUDE_DAMPING') is ChannelKind.AMPLITUDE_DAMPING
    assert ChannelKind.DEPOLARIZING.tag == 'De'
    assert not ChannelKind.AMPLITUDE_DAMPING.is_unital


def test_decoherence_from_rate():
    assert decoherence_from_rate(0.0, 5.0) == 0.0
    assert decoherence_from_rate(1.0, np.log(2)) == pytest.approx(0.5)
    with pytest.raises(BadParameter):
        decoherence_from_rate(-1.0, 1.0)


def test_depolarizing_closed_form_matches_kraus(rng):
    for _ in range(50):
        spec = random_diagonal_bloch(rng)
        channel = MemoryChannel('depolarizing', rng.uniform(), rng.uniform())
        assert not mismatches(compare_with_oracle(spec, channel))
        assert analytic_evolved_bloch(spec, channel).max_deviation(kraus_evolved_bloch(spec, channel)) < 1e-9


def test_phase_damping_local_vectors_shrink_by_one_minus_two_d():
    spec = BlochSpec.diagonal([0.2, -0.1, 0.05], [0.1, 0.05, -0.1], [0.1, 0.1, 0.05])
    D, mu = 0.3, 0.4
    evolved = kraus_evolved_bloch(spec, MemoryChannel('phase-damping', D, mu))
    assert evolved.a[0] == pytest.approx((1 - 2 * D) * 0.2, abs=1e-12)
    assert evolved.a[2] == pytest.approx(0.05, abs=1e-12)
    assert evolved.T[0, 0] == pytest.approx(0.1 * (1 - 4 * D * (1 - D) * (1 - mu)), abs=1e-12)


def test_phase_damping_printed_row_is_reported_where_it_differs():
    spec = BlochSpec.diagonal([0.3, 0, 0], [0, 0, 0], [0.1, 0.2, 0.1])
    channel = MemoryChannel('phase-damping', 0.3, 0.4)
    entries = {item.entry for item in mismatches(compare_with_oracle(spec, channel))}
    assert 'x1' in entries
    assert 't11' in entries
    assert 't33' not in entries


def test_amplitude_damping_printed_row_agrees_on_local_vectors(rng):
    for _ in range(20):
        spec = random_diagonal_bloch(rng)
        channel = MemoryChannel('amplitude-damping', rng.uniform(), rng.uniform())
        comparison = {item.entry: item for item in compare_with_oracle(spec, channel)}
        for entry in ('x1', 'x2', 'y1', 'y2'):
            assert comparison[entry].deviation < 1e-9


def test_amplitude_damping_printed_t11_is_itemised():
    spec = BlochSpec.diagonal([0, 0, 0], [0, 0, 0], [0.5, -0.5, 0.5])
    channel = MemoryChannel('amplitude-damping', 0.4, 0.3)
    bad = {item.entry: item for item in mismatches(compare_with_oracle(spec, channel))}
    assert 't11' in bad
    assert bad['t11'].printed != pytest.approx(bad['t11'].kraus)


def test_closed_form_needs_diagonal_correlations():
    spec = BlochSpec([0, 0, 0], [0, 0, 0], [[0.2, 0.1, 0], [0.1, 0.2, 0], [0, 0, 0.1]])
    channel = MemoryChannel('depolarizing', 0.2, 0.5)
    with pytest.raises(UnsupportedInput):
        analytic_evolved_bloch(spec, channel)
    assert np.isnan(closed_form_max_deviation(spec, channel))


def test_closed_form_max_deviation_reuses_evolved_state(figure_state):
    spec = bloch_from_density(figure_state)
    channel = MemoryChannel('depolarizing', 0.35, 0.6)
    evolved = apply_memory_channel(figure_state, channel)
    assert closed_form_max_deviation(spec, channel, evolved) == pytest.approx(
        closed_form_max_deviation(spec, channel), abs=1e-15)
    assert closed_form_max_deviation(spec, channel, evolved) < 1e-9


def test_memory_mixture_is_linear_in_mu(rng):
    rho = density_from_bloch(random_diagonal_bloch(rng))
    for kind in KINDS:
        zero = apply_memory_channel(rho, MemoryChannel(kind, 0.6, 0.0)).mat
        one = apply_memory_channel(rho, MemoryChannel(kind, 0.6, 1.0)).mat
        half = apply_memory_channel(rho, MemoryChannel(kind, 0.6, 0.5)).mat
        assert matrices_close(half, (zero + one) / 2, atol=1e-14)


@pytest.mark.parametrize('kind', KINDS)
@pytest.mark.parametrize('mu', [0.0, 0.35, 1.0])
def test_zero_decoherence_is_identity_on_random_states(kind, mu, rng):
    for _ in range(10):
        rho = random_density_matrix(rng)
        assert matrices_close(apply_memory_channel(rho, MemoryChannel(kind, 0.0, mu)).mat, rho.mat, atol=1e-12)


@pytest.mark.parametrize('D', [0.15, 0.5, 0.8])
def test_uncorrelated_phase_damping_scales_coherences_only(D, rng):
    kraus_set = kraus_uncorrelated('phase-damping', D)
    assert all(np.count_nonzero(op - np.diag(np.diag(op))) == 0 for op in kraus_set)
    rho = random_density_matrix(rng)
    out = apply_kraus(rho.mat, kraus_set)
    flips = np.array([[bin(i ^ j).count('1') for j in range(4)] for i in range(4)])
    assert np.allclose(np.diag(out), np.diag(rho.mat), atol=1e-12)
    assert matrices_close(out, rho.mat * (1 - 2 * D) ** flips, atol=1e-12)


@pytest.mark.parametrize('kind', [ChannelKind.PHASE_DAMPING, ChannelKind.DEPOLARIZING])
def test_full_memory_fixes_bell_diagonal_states(kind, rng):
    for weights in rng.dirichlet(np.ones(4), size=5):
        l0, l1, l2, l3 = weights
        rho = bell_diagonal(l2 + l3 - l0 - l1, l1 + l3 - l0 - l2, l1 + l2 - l0 - l3)
        for D in D_GRID:
            out = apply_memory_channel(rho, MemoryChannel(kind, D, 1.0))
            assert matrices_close(out.mat, rho.mat, atol=1e-12)
