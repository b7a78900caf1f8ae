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
Finite-size bookkeeping of the weak converse

If the network output is `\epsilon`-close to the target key state after `n` uses, asymptotic
continuity of the REE costs at most `\delta(\epsilon, d) = 4\epsilon\log_2 d + 2H_2(\epsilon)`, where
`d` is the dimension of the key systems. With `d \leq 2^{\alpha_n n}` the per-use cost is
`4\epsilon\alpha_n + 2H_2(\epsilon)/n`.
"""
import math

from .errors import DomainError
from .quantum.entropy import binary_entropy


class FiniteSizeParams(object):
    """
    Construct the parameters of the finite-size penalty

    At least one of ``log2_dim`` and ``alpha_n`` is required; when only ``alpha_n`` is given the key
    dimension is taken as large as the growth bound allows, `\\log_2 d = \\alpha_n n`.

    INPUT:

    - ``epsilon`` -- closeness in trace norm, in `[0, 1)`
    - ``n`` -- number of network uses
    - ``log2_dim`` -- `\\log_2 d` (default: None)
    - ``alpha_n`` -- growth constant in `d \\leq 2^{\\alpha_n n}` (default: None)

    EXAMPLES::

        >>> from qnet.finite_size import FiniteSizeParams
        >>> FiniteSizeParams(epsilon=0.01, n=10**6, alpha_n=2)
        Finite-size parameters with ε = 0.01, n = 1000000, log2(d) = 2000000.0, α_n = 2.0

    TESTS::

        >>> FiniteSizeParams(epsilon=1.0, n=1, log2_dim=1)
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: epsilon must lie in [0,1), got 1.0
        >>> FiniteSizeParams(epsilon=0.1, n=0, log2_dim=1)
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: n must be >= 1
        >>> FiniteSizeParams(epsilon=0.1, n=1)
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: either log2_dim or alpha_n is required
    """
    def __init__(self, epsilon, n, log2_dim=None, alpha_n=None):
        epsilon = float(epsilon)
        if not 0 <= epsilon < 1:
            raise DomainError(f"epsilon must lie in [0,1), got {epsilon}")

        if int(n) != n or n < 1:
            raise DomainError("n must be >= 1")

        if log2_dim is None and alpha_n is None:
            raise DomainError("either log2_dim or alpha_n is required")

        for name, value in (("log2_dim", log2_dim), ("alpha_n", alpha_n)):
            if value is not None and not (math.isfinite(value) and value >= 0):
                raise DomainError(f"{name} must be a finite number >= 0")

        self._epsilon = epsilon
        self._n = int(n)
        self._alpha_n = None if alpha_n is None else float(alpha_n)
        self._log2_dim = self._alpha_n * self._n if log2_dim is None else float(log2_dim)

    @property
    def epsilon(self):
        return self._epsilon

    @property
    def n(self):
        return self._n

    @property
    def log2_dim(self):
        return self._log2_dim

    @property
    def alpha_n(self):
        return self._alpha_n

    def __repr__(self):
        text = f"Finite-size parameters with ε = {self._epsilon}, n = {self._n}, log2(d) = {self._log2_dim}"
        if self._alpha_n is not None:
            text += f", α_n = {self._alpha_n}"
        return text


def finite_size_penalty(params):
    r"""
    Return ``(delta, per_use)``: the continuity penalty `\delta(\epsilon, d)` and its per-use form

    ``per_use`` is `4\epsilon\alpha_n + 2H_2(\epsilon)/n` when `\alpha_n` is known, else `\delta/n`.

    EXAMPLES::

        >>> from qnet.finite_size import FiniteSizeParams, finite_size_penalty
        >>> finite_size_penalty(FiniteSizeParams(epsilon=0, n=1, log2_dim=10))
        (0.0, 0.0)
        >>> finite_size_penalty(FiniteSizeParams(epsilon=0.5, n=1, log2_dim=0))
        (2.0, 2.0)
        >>> delta, per_use = finite_size_penalty(FiniteSizeParams(epsilon=0.01, n=10**6, alpha_n=2))
        >>> round(per_use, 9)
        0.080000162
    """
    eps = params.epsilon
    h = binary_entropy(eps)
    delta = 4 * eps * params.log2_dim + 2 * h
    if params.alpha_n is not None:
        per_use = 4 * eps * params.alpha_n + 2 * h / params.n
    else:
        per_use = delta / params.n
    return delta, per_use


def finite_size_bound(bound, params):
    """
    Return the bound on the sum of `\\epsilon`-close rates after ``params.n`` uses: ``bound + per_use``

    EXAMPLES::

        >>> from qnet.finite_size import FiniteSizeParams, finite_size_bound
        >>> finite_size_bound(1.0, FiniteSizeParams(epsilon=0.5, n=2, log2_dim=0))
        2.0
        >>> finite_size_bound(float("inf"), FiniteSizeParams(epsilon=0.1, n=2, log2_dim=0))
        inf
    """
    return bound + finite_size_penalty(params)[1]
