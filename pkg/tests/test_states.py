import numpy as np
import pytest

from memchan.exceptions import BadDimension, BadParameter, UnphysicalState
from memchan.models.matrix import matrices_close
from memchan.models.state import BlochSpec, DensityMatrix
from memchan.services.states import (
    bell_diagonal, bell_diagonal_spectrum, bloch_from_density, density_from_bloch, maximally_mixed,
    product_state, projector, purity, random_density_matrix, random_diagonal_bloch, rotate
)
from tests.conftest import random_unitary


def test_zero_spec_is_maximally_mixed():
    rho = density_from_bloch(BlochSpec.zeros())
    assert matrices_close(rho.mat, np.eye(4) / 4)
    assert purity(rho) == pytest.approx(0.25, abs=1e-12)


def test_figure_state_spectrum_and_purity(figure_state):
    assert np.allclose(figure_state.spectrum, [5 / 8, 1 / 8, 1 / 8, 1 / 8], atol=1e-12)
    assert purity(figure_state) == pytest.approx(0.4375, abs=1e-10)


def test_bell_diagonal_spectrum_formula():
    assert np.allclose(sorted(bell_diagonal_spectrum(0.5, -0.5, 0.5)), [1 / 8, 1 / 8, 1 / 8, 5 / 8])


def test_singlet_is_pure():
    singlet = bell_diagonal(-1, -1, -1)
    psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert matrices_close(singlet.mat, np.outer(psi, psi), atol=1e-12)
    assert purity(singlet) == pytest.approx(1.0, abs=1e-12)


def test_unphysical_correlations_rejected():
    with pytest.raises(UnphysicalState):
        bell_diagonal(1, 1, 1)


def test_bloch_round_trip(rng):
    for _ in range(10):
        rho = random_density_matrix(rng)
        back = density_from_bloch(bloch_from_density(rho))
        assert back.close_to(rho, atol=1e-12)


def test_bloch_of_figure_state(figure_state):
    spec = bloch_from_density(figure_state)
    assert np.allclose(spec.a, 0, atol=1e-14)
    assert np.allclose(spec.b, 0, atol=1e-14)
    assert np.allclose(spec.T, np.diag([0.5, -0.5, 0.5]), atol=1e-14)
    assert spec.is_diagonal(atol=1e-12)


def test_bloch_spec_validation():
    with pytest.raises(BadParameter):
        BlochSpec([0, 0], [0, 0, 0], np.zeros((3, 3)))
    with pytest.raises(BadParameter):
        BlochSpec([1.5, 0, 0], [0, 0, 0], np.zeros((3, 3)))
    with pytest.raises(BadParameter):
        BlochSpec([np.nan, 0, 0], [0, 0, 0], np.zeros((3, 3)))


def test_bloch_spec_entries_and_dict():
    spec = BlochSpec.diagonal([0.1, 0, 0], [0, 0.2, 0], [0.3, 0.4, 0.5])
    entries = spec.entries()
    assert entries['x1'] == pytest.approx(0.1)
    assert entries['y2'] == pytest.approx(0.2)
    assert entries['t33'] == pytest.approx(0.5)
    assert entries['t12'] == 0.0
    assert spec.to_dict()['T'][1][1] == pytest.approx(0.4)


def test_density_matrix_validation():
    with pytest.raises(BadDimension):
        DensityMatrix(np.eye(3) / 3)
    with pytest.raises(UnphysicalState):
        DensityMatrix(np.diag([0.5, 0.25, 0.25, 0.5]))
    with pytest.raises(UnphysicalState) as excinfo:
        DensityMatrix(np.diag([0.6, 0.5, 0.1, -0.2]))
    assert excinfo.value.eigenvalue == pytest.approx(-0.2)
    with pytest.raises(UnphysicalState):
        DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))


def test_density_matrix_is_read_only():
    rho = maximally_mixed(2)
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 1.0


def test_product_and_projector():
    zero = projector([1, 0])
    plus = projector([1, 1])
    joint = product_state(zero, plus)
    assert joint.is_joint
    assert purity(joint) == pytest.approx(1.0)
    with pytest.raises(BadDimension):
        product_state(joint, zero)


def test_rotation_preserves_spectrum(rng, figure_state):
    rotated = rotate(figure_state, random_unitary(rng))
    assert np.allclose(rotated.spectrum, figure_state.spectrum, atol=1e-12)


def test_random_states_are_valid(rng):
    for rank in (None, 1, 2):
        rho = random_density_matrix(rng, rank=rank)
        assert abs(np.trace(rho.mat) - 1) < 1e-12
        assert rho.spectrum[-1] > -1e-10
    pure = random_density_matrix(rng, rank=1)
    assert purity(pure) == pytest.approx(1.0, abs=1e-10)


def test_random_diagonal_bloch_is_physical(rng):
    for _ in range(50):
        spec = random_diagonal_bloch(rng)
        assert spec.is_diagonal()
        assert density_from_bloch(spec).spectrum[-1] > 0
