import numpy as np
import pytest

from memchan.services.states import bell_diagonal


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def figure_state():
    return bell_diagonal(0.5, -0.5, 0.5)


@pytest.fixture(autouse=True)
def testing_env(monkeypatch):
    monkeypatch.setenv('MEMCHAN_ENV', 'testing')
    monkeypatch.delenv('MEMCHAN_THREADS', raising=False)


def random_unitary(rng, dim=4):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_hermitian(rng, dim=4):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (z + z.conj().T) / 2
