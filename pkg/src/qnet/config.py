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
Defaults and environment overrides
"""
import os

from .errors import ValidationError


MAX_FREE_NODES_ENV = "QNET_MAX_FREE_NODES"
DEFAULT_MAX_FREE_NODES = 22
AUTO_BRUTE_FORCE_LIMIT = 16

DEFAULT_TOLERANCE = 1e-9

# numerical core
TOL_HERMITIAN = 1e-9
TOL_TRACE = 1e-9
TOL_PSD = 1e-9
TOL_CPTP = 1e-9
TOL_SUPPORT = 1e-10
JACOBI_THRESHOLD = 1e-12
JACOBI_MAX_SWEEPS = 100

# cut solvers
FLOW_EPSILON = 1e-12
TIE_TOLERANCE = 1e-12


def max_free_nodes():
    """
    Return the largest number of free nodes that exhaustive cut enumeration accepts

    The value comes from the environment variable ``QNET_MAX_FREE_NODES`` when it is set, otherwise
    from ``DEFAULT_MAX_FREE_NODES``.

    EXAMPLES::

        >>> import os
        >>> from qnet.config import max_free_nodes
        >>> _ = os.environ.pop("QNET_MAX_FREE_NODES", None)
        >>> max_free_nodes()
        22
        >>> os.environ["QNET_MAX_FREE_NODES"] = "8"
        >>> max_free_nodes()
        8

    TESTS::

        >>> os.environ["QNET_MAX_FREE_NODES"] = "zero"
        >>> max_free_nodes()
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: QNET_MAX_FREE_NODES must be a non-negative integer, got 'zero'
        >>> del os.environ["QNET_MAX_FREE_NODES"]
    """
    raw = os.environ.get(MAX_FREE_NODES_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_FREE_NODES

    try:
        value = int(raw)
    except ValueError:
        value = -1

    if value < 0:
        raise ValidationError(f"{MAX_FREE_NODES_ENV} must be a non-negative integer, got {raw!r}")
    return value
