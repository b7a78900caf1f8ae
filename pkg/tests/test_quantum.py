import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qnet.errors import DomainError, UsageError
from qnet.quantum import (BellDiagonalSpectrum, DensityMatrix, amplitude_damping_channel, bell_state,
                          binary_entropy, closest_separable_bell_diagonal, dephasing_channel, eigvalsh,
                          is_ppt, is_weyl_covariant, jacobi_eigh, maximally_mixed, pauli_channel, pauli_twirl,
                          pure_state, ree_bell_diagonal, ree_numeric_oracle, relative_entropy, vn_entropy)


def random_state(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real)


def random_spectrum(rng, min_lambda_max=0.0, concentration=0.5):
    while True:
        weights = rng.dirichlet(np.full(4, concentration))
        if weights.max() >= min_lambda_max:
            return BellDiagonalSpectrum(weights)


def random_unitary(rng, dim):
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


@settings(max_examples=50, deadline=None)
@given(arrays(np.float64, (5, 5), elements=st.floats(min_value=-10, max_value=10)))
def test_jacobi_matches_numpy(a):
    a = (a + a.T) / 2
    w, v = jacobi_eigh(a)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-9)
    assert np.allclose(v @ np.diag(w) @ v.T, a, atol=1e-9)


def test_hermitian_eigenvalues_match_numpy():
    rng = np.random.default_rng(1)
    for dim in (2, 3, 4, 6):
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        h = g + g.conj().T
        assert np.allclose(eigvalsh(h), np.linalg.eigvalsh(h), atol=1e-9)


@pytest.mark.parametrize("p, expected", [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0), (0.11, 0.49991596)])
def test_binary_entropy(p, expected):
    assert binary_entropy(p) == pytest.approx(expected, abs=1e-7)


def test_vn_entropy_range():
    rng = np.random.default_rng(2)
    for dim in (2, 3, 4):
        value = vn_entropy(random_state(rng, dim))
        assert 0 <= value <= math.log2(dim)
    assert vn_entropy(maximally_mixed(4)) == pytest.approx(2.0, abs=1e-12)


def test_relative_entropy_is_non_negative_and_vanishes_on_equal_states():
    rng = np.random.default_rng(3)
    for _ in range(100):
        dim = int(rng.integers(2, 5))
        rho, gamma = random_state(rng, dim), random_state(rng, dim)
        value = relative_entropy(rho, gamma)
        assert value >= 0
        if rho.trace_distance(gamma) > 1e-9:
            assert value > 0
        assert relative_entropy(rho, rho) <= 1e-9


def test_relative_entropy_disjoint_supports_and_mismatch():
    assert relative_entropy(pure_state([1, 0]), pure_state([0, 1])) == math.inf
    with pytest.raises(UsageError):
        relative_entropy(maximally_mixed(2), maximally_mixed(3))


def test_density_matrix_validation():
    with pytest.raises(DomainError, match="unit trace"):
        DensityMatrix(np.eye(2))
    with pytest.raises(DomainError, match="Hermitian"):
        DensityMatrix([[0.5, 1], [0, 0.5]])
    with pytest.raises(DomainError, match="smallest eigenvalue"):
        DensityMatrix([[1.5, 0], [0, -0.5]])


def test_pauli_choi_spectrum_is_the_probability_vector():
    rng = np.random.default_rng(4)
    for _ in range(50):
        probs = rng.dirichlet(np.ones(4))
        spectrum = BellDiagonalSpectrum.from_state(pauli_channel(probs).choi_matrix())
        assert np.allclose(sorted(spectrum.weights), sorted(probs), atol=1e-10)
        assert np.allclose(spectrum.weights, probs, atol=1e-10)


def test_choi_matrix_examples():
    assert np.allclose(pauli_channel([1, 0, 0, 0]).choi_matrix().matrix, bell_state().matrix)
    spectrum = BellDiagonalSpectrum.from_state(dephasing_channel(0.25).choi_matrix())
    assert spectrum.lambdas == pytest.approx((0.75, 0.25, 0.0, 0.0), abs=1e-12)
    depolarizing = BellDiagonalSpectrum.from_state(pauli_channel([0.25] * 4).choi_matrix())
    assert depolarizing.lambdas == pytest.approx((0.25,) * 4, abs=1e-12)


def test_random_pauli_channels_are_weyl_covariant():
    rng = np.random.default_rng(5)
    for _ in range(100):
        report = is_weyl_covariant(pauli_channel(rng.dirichlet(np.ones(4))), tol=1e-9)
        assert report.covariant
        assert max(report.residuals) <= 1e-9


def test_covariance_examples():
    assert is_weyl_covariant(dephasing_channel(0.3)).covariant
    report = is_weyl_covariant(amplitude_damping_channel(0.5))
    assert not report.covariant
    assert report.residuals[0] <= 1e-12
    assert report.residuals[1] > 1e-3


@pytest.mark.parametrize("weights, expected", [((1, 0, 0, 0), 1.0), ((0.5, 0.5, 0, 0), 0.0),
                                               ((0.75, 0.25, 0, 0), 0.18872187554086717),
                                               ((0.4, 0.3, 0.2, 0.1), 0.0)])
def test_ree_bell_diagonal(weights, expected):
    assert ree_bell_diagonal(weights) == pytest.approx(expected, abs=1e-12)


def test_closest_separable_state_attains_the_closed_form():
    rng = np.random.default_rng(6)
    for _ in range(1000):
        spectrum = random_spectrum(rng, min_lambda_max=0.5)
        gamma = closest_separable_bell_diagonal(spectrum)
        assert is_ppt(gamma)
        assert relative_entropy(spectrum.state(), gamma) == pytest.approx(ree_bell_diagonal(spectrum), abs=1e-9)


def test_closest_separable_examples():
    gamma = closest_separable_bell_diagonal([0.8, 0.1, 0.1, 0.0])
    assert BellDiagonalSpectrum.from_state(gamma).weights == pytest.approx((0.5, 0.25, 0.25, 0.0), abs=1e-12)
    boundary = BellDiagonalSpectrum([0.5, 0.5, 0, 0])
    rebuilt = BellDiagonalSpectrum.from_state(closest_separable_bell_diagonal(boundary))
    assert rebuilt == boundary
    assert rebuilt.weights == pytest.approx(boundary.weights, abs=1e-12)
    assert relative_entropy(bell_state(), closest_separable_bell_diagonal([1, 0, 0, 0])) == pytest.approx(1.0)


def test_numeric_oracle_brackets_the_closed_form():
    rng = np.random.default_rng(7)
    for _ in range(100):
        spectrum = random_spectrum(rng)
        closed = ree_bell_diagonal(spectrum)
        oracle = ree_numeric_oracle(spectrum)
        assert closed - 1e-6 <= oracle <= closed + 1e-4


def test_numeric_oracle_on_sparse_spectra():
    rng = np.random.default_rng(17)
    for _ in range(400):
        spectrum = random_spectrum(rng, concentration=0.2)
        closed = ree_bell_diagonal(spectrum)
        assert closed - 1e-6 <= ree_numeric_oracle(spectrum) <= closed + 1e-4


@pytest.mark.parametrize("weights", [(0.000989, 0.933471, 6.7e-28, 0.06554), (0.210854, 0.728928, 0.060218, 0.0),
                                     (2.3e-05, 0.876606, 0.123358, 1.4e-05), (0.5, 0.5 - 1e-12, 1e-12, 0.0)])
def test_numeric_oracle_with_near_zero_weights(weights):
    weights = np.array(weights) / np.sum(weights)
    closed = ree_bell_diagonal(weights)
    for resolution in (20, 100):
        assert closed - 1e-6 <= ree_numeric_oracle(weights, resolution=resolution) <= closed + 1e-4


def test_pauli_twirl_leaves_bell_diagonal_states_unchanged():
    rng = np.random.default_rng(8)
    for _ in range(50):
        spectrum = random_spectrum(rng)
        twirled = BellDiagonalSpectrum.from_state(pauli_twirl(spectrum.state()))
        assert np.allclose(twirled.weights, spectrum.weights, atol=1e-10)


def test_pauli_twirl_is_data_processing():
    # local unitaries keep the REE of the Bell-diagonal state and break its Bell-diagonal form
    rng = np.random.default_rng(18)
    for _ in range(100):
        spectrum = random_spectrum(rng, min_lambda_max=0.5)
        local = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
        rho = DensityMatrix(local @ spectrum.state().matrix @ local.conj().T, dims=(2, 2))
        with pytest.raises(DomainError, match="not Bell-diagonal"):
            BellDiagonalSpectrum.from_state(rho)

        twirled = BellDiagonalSpectrum.from_state(pauli_twirl(rho))
        assert ree_bell_diagonal(twirled) <= ree_bell_diagonal(spectrum) + 1e-12

    for _ in range(20):
        twirled = BellDiagonalSpectrum.from_state(pauli_twirl(random_state(rng, 4)))
        assert sum(twirled.weights) == pytest.approx(1.0, abs=1e-12)


def test_mixing_toward_uniform_never_increases_ree():
    rng = np.random.default_rng(9)
    uniform = np.full(4, 0.25)
    for _ in range(200):
        spectrum = random_spectrum(rng)
        t = rng.uniform()
        mixed = BellDiagonalSpectrum((1 - t) * np.array(spectrum.weights) + t * uniform)
        assert ree_bell_diagonal(mixed) <= ree_bell_diagonal(spectrum) + 1e-12


def test_asymptotic_continuity_envelope():
    rng = np.random.default_rng(10)
    violations = 0
    for i in range(1000):
        rho = random_spectrum(rng)
        t = rng.uniform(0, 0.05)
        sigma = BellDiagonalSpectrum((1 - t) * np.array(rho.weights) + t * np.array(random_spectrum(rng).weights))
        eps = float(np.sum(np.abs(np.array(rho.weights) - np.array(sigma.weights))))
        if i < 20:
            assert rho.state().trace_distance(sigma.state()) == pytest.approx(eps, abs=1e-9)
        if eps > 0.1:
            continue
        envelope = 4 * eps * math.log2(4) + 2 * binary_entropy(eps)
        if abs(ree_bell_diagonal(rho) - ree_bell_diagonal(sigma)) > envelope + 1e-12:
            violations += 1
    assert violations == 0


@pytest.mark.parametrize("weights", [(1, 0, 0, 0), (0.8, 0.1, 0.1, 0.0), (0.6, 0.2, 0.1, 0.1)])
def test_ree_is_sub_additive_on_copies(weights):
    rho = BellDiagonalSpectrum(weights).state()
    gamma = closest_separable_bell_diagonal(weights)
    single = relative_entropy(rho, gamma)
    double = relative_entropy(rho.tensor(rho), gamma.tensor(gamma))
    assert double == pytest.approx(2 * single, abs=1e-8)
    assert double <= 2 * ree_bell_diagonal(weights) + 1e-8
