import math

import pytest

from qnet.errors import DomainError
from qnet.finite_size import FiniteSizeParams, finite_size_bound, finite_size_penalty
from qnet.quantum import binary_entropy


@pytest.mark.parametrize("log2_dim", [0, 1, 10, 1e6])
def test_no_penalty_for_exact_outputs(log2_dim):
    assert finite_size_penalty(FiniteSizeParams(epsilon=0, n=100, log2_dim=log2_dim)) == (0.0, 0.0)


def test_half_closeness_on_a_trivial_system():
    delta, per_use = finite_size_penalty(FiniteSizeParams(epsilon=0.5, n=1, log2_dim=0))
    assert delta == pytest.approx(2.0, abs=1e-12)
    assert per_use == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("eps, n, alpha", [(0.01, 10**6, 2.0), (0.1, 1000, 0.5), (0.3, 7, 4.0)])
def test_per_use_form(eps, n, alpha):
    params = FiniteSizeParams(epsilon=eps, n=n, alpha_n=alpha)
    delta, per_use = finite_size_penalty(params)
    assert per_use == pytest.approx(4 * eps * alpha + 2 * binary_entropy(eps) / n, abs=1e-12)
    assert delta == pytest.approx(n * per_use, rel=1e-12)


def test_explicit_dimension_wins_over_growth_constant():
    params = FiniteSizeParams(epsilon=0.1, n=10, log2_dim=3, alpha_n=2)
    assert params.log2_dim == 3.0
    delta, _ = finite_size_penalty(params)
    assert delta == pytest.approx(4 * 0.1 * 3 + 2 * binary_entropy(0.1), abs=1e-12)


def test_penalty_grows_with_epsilon():
    values = [finite_size_penalty(FiniteSizeParams(epsilon=eps, n=10, log2_dim=4))[0]
              for eps in (0.0, 0.01, 0.1, 0.3, 0.5)]
    assert values == sorted(values)


def test_finite_size_bound():
    params = FiniteSizeParams(epsilon=0.01, n=10**6, alpha_n=2)
    assert finite_size_bound(1.0, params) == pytest.approx(1.0 + finite_size_penalty(params)[1])
    assert finite_size_bound(math.inf, params) == math.inf


@pytest.mark.parametrize("kwargs, message", [
    ({"epsilon": -0.1, "n": 1, "log2_dim": 1}, "epsilon must lie in"),
    ({"epsilon": 1.0, "n": 1, "log2_dim": 1}, "epsilon must lie in"),
    ({"epsilon": 0.1, "n": 0, "log2_dim": 1}, "n must be >= 1"),
    ({"epsilon": 0.1, "n": 2.5, "log2_dim": 1}, "n must be >= 1"),
    ({"epsilon": 0.1, "n": 1}, "either log2_dim or alpha_n is required"),
    ({"epsilon": 0.1, "n": 1, "log2_dim": -1}, "log2_dim must be a finite number"),
    ({"epsilon": 0.1, "n": 1, "alpha_n": math.inf}, "alpha_n must be a finite number"),
])
def test_parameter_errors(kwargs, message):
    with pytest.raises(DomainError, match=message):
        FiniteSizeParams(**kwargs)
