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


"""
Entropic functionals, all in bits, with the convention `0 \\log 0 = 0`
"""
import math

import numpy as np

from ..config import TOL_PSD, TOL_SUPPORT
from ..errors import DomainError, UsageError
from .linalg import hermitian_function


def binary_entropy(p):
    """
    Return the binary Shannon entropy `H_2(p) = -p \\log_2 p - (1-p) \\log_2 (1-p)`

    INPUT:

    - ``p`` -- a probability

    EXAMPLES::

        >>> from qnet.quantum.entropy import binary_entropy
        >>> binary_entropy(0.5)
        1.0
        >>> binary_entropy(0.0)
        0.0
        >>> round(binary_entropy(0.11), 6)
        0.499916

    TESTS::

        >>> binary_entropy(1.0)
        0.0
        >>> binary_entropy(1.5)
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: p must lie in [0,1], got 1.5
    """
    p = float(p)
    if not 0 <= p <= 1:
        raise DomainError(f"p must lie in [0,1], got {p}")
    if p == 0 or p == 1:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def shannon_entropy(probabilities):
    """
    Return the Shannon entropy of a probability vector

    EXAMPLES::

        >>> from qnet.quantum.entropy import shannon_entropy
        >>> shannon_entropy([0.25, 0.25, 0.25, 0.25])
        2.0
        >>> shannon_entropy([1.0, 0.0])
        0.0
    """
    p = np.asarray(probabilities, dtype=float)
    p = p[p > 0]
    return float(max(0.0, -np.sum(p * np.log2(p))))


def vn_entropy(rho):
    """
    Return the von Neumann entropy of a density matrix

    INPUT:

    - ``rho`` -- a :class:`~qnet.quantum.states.DensityMatrix`

    EXAMPLES::

        >>> from qnet.quantum.entropy import vn_entropy
        >>> from qnet.quantum.states import maximally_mixed, pure_state, BellDiagonalSpectrum
        >>> vn_entropy(pure_state([1, 0]))
        0.0
        >>> round(vn_entropy(maximally_mixed(2)), 12)
        1.0
        >>> round(vn_entropy(BellDiagonalSpectrum([0.75, 0.25, 0, 0]).state()), 5)
        0.81128
    """
    eigenvalues = np.asarray(rho.eigenvalues())
    if eigenvalues[0] < -TOL_PSD:
        raise DomainError("state is not positive semidefinite")
    value = shannon_entropy(np.clip(eigenvalues, 0.0, 1.0))
    return min(value, math.log2(rho.dim))


def _log2_on_support(w):
    # zero outside the support
    support = w > TOL_SUPPORT
    return np.where(support, np.log2(np.where(support, w, 1.0)), 0.0)


def relative_entropy(rho, gamma):
    r"""
    Return the quantum relative entropy `S(\rho \| \gamma) = \mathrm{Tr}[\rho(\log_2 \rho - \log_2 \gamma)]`

    The value is `+\infty` when the support of `\rho` is not contained in the support of `\gamma`;
    support membership is decided by the eigenvalue threshold `10^{-10}`.

    INPUT:

    - ``rho`` -- a :class:`~qnet.quantum.states.DensityMatrix`
    - ``gamma`` -- a :class:`~qnet.quantum.states.DensityMatrix` of the same dimension

    EXAMPLES::

        >>> from qnet.quantum.entropy import relative_entropy
        >>> from qnet.quantum.states import BellDiagonalSpectrum, bell_state, pure_state
        >>> relative_entropy(pure_state([1, 0]), pure_state([0, 1]))
        inf
        >>> gamma = BellDiagonalSpectrum([0.5, 0.5, 0, 0]).state()
        >>> round(relative_entropy(bell_state(), gamma), 12)
        1.0

    TESTS::

        >>> from qnet.quantum.states import maximally_mixed
        >>> round(relative_entropy(maximally_mixed(2), maximally_mixed(2)), 12)
        0.0
        >>> relative_entropy(maximally_mixed(2), maximally_mixed(4))
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: dimension mismatch: 2 != 4
    """
    if rho.dim != gamma.dim:
        raise UsageError(f"dimension mismatch: {rho.dim} != {gamma.dim}")

    kernel = hermitian_function(gamma.matrix, lambda w: np.where(w > TOL_SUPPORT, 0.0, 1.0))
    if np.trace(rho.matrix @ kernel).real > TOL_SUPPORT:
        return math.inf

    log_gamma = hermitian_function(gamma.matrix, _log2_on_support)

    value = -vn_entropy(rho) - np.trace(rho.matrix @ log_gamma).real
    return float(value) if value > 0 else 0.0
