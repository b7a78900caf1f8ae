# *****************************************************************************
# Quantum Network Conferencing-Key Estimator
# Copyright (C) 2024 qnet_estimator contributors
#
# This file is part of qnet_estimator
#
# qnet_estimator is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation, either version 3 of the License, or (at your option) any
# later version.
#
# qnet_estimator is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# qnet_estimator. If not, see <https://www.gnu.org/licenses/>.
# *****************************************************************************


r"""
Relative entropy of entanglement of Bell-diagonal states

For a Bell-diagonal state with largest weight `\lambda_{max} \geq 1/2` the relative entropy of
entanglement is `1 - H_2(\lambda_{max})` and is attained by the Bell-diagonal state that puts weight
`1/2` on the dominant Bell vector and rescales the remaining weights to sum to `1/2`. Below `1/2` the
state is PPT, hence separable for two qubits, and its REE vanishes. The numeric oracle recovers these
values independently by minimising the relative entropy over Bell-diagonal PPT states.
"""
import logging
import math

import numpy as np
from scipy.optimize import brentq, minimize

from ..config import TOL_PSD, TOL_SUPPORT
from ..errors import UsageError
from .entropy import binary_entropy
from .linalg import eigvalsh, partial_transpose
from .states import BellDiagonalSpectrum


logger = logging.getLogger(__name__)


def _spectrum(spec):
    if isinstance(spec, BellDiagonalSpectrum):
        return spec
    return BellDiagonalSpectrum(spec)


def ree_bell_diagonal(spec):
    """
    Return the relative entropy of entanglement of a Bell-diagonal state

    INPUT:

    - ``spec`` -- a :class:`~qnet.quantum.states.BellDiagonalSpectrum` (or its four weights)

    EXAMPLES::

        >>> from qnet.quantum.ree import ree_bell_diagonal
        >>> ree_bell_diagonal([1, 0, 0, 0])
        1.0
        >>> ree_bell_diagonal([0.5, 0.5, 0, 0])
        0.0
        >>> round(ree_bell_diagonal([0.75, 0.25, 0, 0]), 5)
        0.18872

    TESTS::

        >>> ree_bell_diagonal([0.4, 0.3, 0.2, 0.1])
        0.0
        >>> ree_bell_diagonal([0.4, 0.3, 0.2, 0.2])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: Bell-diagonal weights must sum to 1
    """
    spec = _spectrum(spec)
    lam = spec.lambda_max
    if lam < 0.5:
        return 0.0
    value = 1 - binary_entropy(lam)
    return min(1.0, value) if value > 0 else 0.0


def is_ppt(rho, dims=(2, 2), tol=TOL_PSD):
    """
    Return ``True`` if ``rho`` has a positive partial transpose

    EXAMPLES::

        >>> from qnet.quantum.ree import is_ppt
        >>> from qnet.quantum.states import bell_state, maximally_mixed
        >>> is_ppt(bell_state())
        False
        >>> is_ppt(maximally_mixed(4))
        True
    """
    return bool(eigvalsh(partial_transpose(rho.matrix, dims))[0] >= -tol)


def closest_separable_bell_diagonal(spec):
    """
    Return the separable Bell-diagonal state that attains the relative entropy of entanglement

    When the largest weight is below one half the state is already separable and is returned
    unchanged. Otherwise the dominant Bell vector receives weight 1/2 and the remaining weights are
    rescaled by `1/(2(1-\\lambda_{max}))`; a pure Bell state puts the other half on the next Bell vector.

    INPUT:

    - ``spec`` -- a :class:`~qnet.quantum.states.BellDiagonalSpectrum` (or its four weights)

    EXAMPLES::

        >>> from qnet.quantum.ree import closest_separable_bell_diagonal
        >>> from qnet.quantum.states import BellDiagonalSpectrum
        >>> gamma = closest_separable_bell_diagonal([0.8, 0.1, 0.1, 0.0])
        >>> BellDiagonalSpectrum.from_state(gamma)
        Bell-diagonal spectrum (0.5, 0.25, 0.25, 0.0)
        >>> BellDiagonalSpectrum.from_state(closest_separable_bell_diagonal([1, 0, 0, 0]))
        Bell-diagonal spectrum (0.5, 0.5, 0.0, 0.0)

    TESTS::

        >>> BellDiagonalSpectrum.from_state(closest_separable_bell_diagonal([0.5, 0.5, 0, 0]))
        Bell-diagonal spectrum (0.5, 0.5, 0.0, 0.0)
    """
    spec = _spectrum(spec)
    lam, k = spec.lambda_max, spec.argmax
    if lam <= 0.5:
        return spec.state()

    rest = 1 - lam
    weights = np.zeros(4)
    if rest <= 0:
        weights[(k + 1) % 4] = 0.5
    else:
        weights = np.array(spec.weights) / (2 * rest)
    weights[k] = 0.5
    return BellDiagonalSpectrum(weights).state()


def _kl_divergence(p, q):
    # bits; rows of q are candidates, weights of p at or below TOL_SUPPORT are outside the support
    support = p > TOL_SUPPORT
    p = p[support]
    q = q[..., support]
    with np.errstate(divide="ignore"):
        terms = p * (np.log2(p) - np.log2(q))
    return np.sum(terms, axis=-1)


def _stationary_point(p):
    r"""
    Return the separable Bell-diagonal spectrum solving the optimality conditions of the oracle

    Minimising `-\sum_k p_k \log q_k` under `q_k \leq 1/2` and `\sum_k q_k = 1` gives
    `q_k = \min(1/2, p_k/\mu)`; the multiplier `\mu` is found by root bracketing and the mass left
    over is spread on the weights outside the support.
    """
    support = p > TOL_SUPPORT
    if support.sum() <= 2:
        q = np.where(support, 0.5, 0.0)
    else:
        def excess(mu):
            return np.sum(np.minimum(0.5, p[support] / mu)) - 1

        mu = 1.0 if excess(1.0) >= 0 else brentq(excess, 1e-12, 1.0, xtol=1e-15)
        q = np.where(support, np.minimum(0.5, np.where(support, p, 0.0) / mu), 0.0)

    left = 1 - q.sum()
    if left > 0 and not support.all():
        q[~support] = left / (~support).sum()
    return q


def _refine(p, start):
    # SLSQP over the weights on the support; the others only absorb the remaining mass
    support = p > TOL_SUPPORT
    ps = p[support]
    x0 = np.clip(start[support], 1e-12, 0.5)

    def objective(x):
        return float(np.sum(ps * (np.log2(ps) - np.log2(x))))

    def gradient(x):
        return -ps / (x * math.log(2))

    if support.all():
        constraints = [{"type": "eq", "fun": lambda x: np.sum(x) - 1, "jac": lambda x: np.ones_like(x)}]
    else:
        constraints = [{"type": "ineq", "fun": lambda x: 1 - np.sum(x), "jac": lambda x: -np.ones_like(x)}]
    result = minimize(objective, x0, jac=gradient, method="SLSQP", bounds=[(1e-12, 0.5)] * len(ps),
                      constraints=constraints, options={"ftol": 1e-15, "maxiter": 1000})
    if not result.success:
        logger.debug("SLSQP stopped early: %s", result.message)

    x = result.x
    feasible = np.all(x >= 0) and np.all(x <= 0.5 + 1e-12) and np.sum(x) <= 1 + 1e-12
    if support.all():
        feasible = feasible and abs(np.sum(x) - 1) <= 1e-9
    return float(objective(np.clip(x, 1e-300, 0.5))) if feasible else math.inf


def ree_numeric_oracle(spec, resolution=100):
    r"""
    Return a numerical upper bound on the REE of a Bell-diagonal state

    The relative entropy `S(\rho \| \gamma)` is minimised over Bell-diagonal `\gamma` with largest
    weight at most `1/2` (the PPT, hence separable, Bell-diagonal states). Both states share the Bell
    eigenbasis, so the relative entropy is the Kullback-Leibler divergence of the spectra. A dense
    grid of step ``1/resolution`` is scanned, then SLSQP is started from the best grid point and from
    the solution of the optimality conditions; the smallest value reached is returned.

    INPUT:

    - ``spec`` -- a :class:`~qnet.quantum.states.BellDiagonalSpectrum` (or its four weights)
    - ``resolution`` -- even number of grid steps per unit (default: 100)

    EXAMPLES::

        >>> from qnet.quantum.ree import ree_numeric_oracle
        >>> abs(ree_numeric_oracle([1, 0, 0, 0]) - 1.0) < 1e-4
        True
        >>> ree_numeric_oracle([0.4, 0.3, 0.2, 0.1])
        0.0
        >>> round(ree_numeric_oracle([0.75, 0.25, 0, 0]), 4)
        0.1887

    TESTS::

        >>> round(ree_numeric_oracle([0.000989, 0.933471, 6.7e-28, 0.06554]), 4)
        0.6472
        >>> ree_numeric_oracle([1, 0, 0, 0], resolution=7)
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: resolution must be a positive even integer
    """
    spec = _spectrum(spec)
    if resolution < 2 or resolution % 2:
        raise UsageError("resolution must be a positive even integer")

    p = np.array(spec.weights)
    if spec.lambda_max <= 0.5:
        return 0.0

    half = resolution // 2
    i, j, k = np.meshgrid(*(np.arange(half + 1),) * 3, indexing="ij")
    last = resolution - i - j - k
    feasible = (last >= 0) & (last <= half)
    grid = np.stack([i[feasible], j[feasible], k[feasible], last[feasible]], axis=-1) / resolution

    values = _kl_divergence(p, grid)
    best = int(np.argmin(values))
    logger.debug("oracle grid of %d points, best value %g", len(grid), values[best])

    stationary = _stationary_point(p)
    candidates = [float(values[best]), float(_kl_divergence(p, stationary)),
                  _refine(p, grid[best]), _refine(p, stationary)]
    best_value = min(value for value in candidates if not math.isnan(value))
    return best_value if best_value > 0 else 0.0
