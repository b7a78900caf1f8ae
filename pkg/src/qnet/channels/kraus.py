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
Channel kinds accepted by the Weyl-covariance check but not on network edges
"""
import numpy as np

from ..errors import DomainError, UnsupportedChannelError, UsageError
from ..quantum.kraus import KrausChannel, amplitude_damping_channel
from .base import BaseChannel, check_probability


class _CovarianceOnlyChannel(BaseChannel):
    edge_kind = False

    def weight(self):
        raise UnsupportedChannelError(f"kind {self.kind!r} carries no edge weight; "
                                      "it is accepted by the covariance check only")


class AmplitudeDamping(_CovarianceOnlyChannel):
    """
    Construct an amplitude-damping channel with damping probability `\\gamma`

    EXAMPLES::

        >>> from qnet.channels import AmplitudeDamping
        >>> AmplitudeDamping(gamma=0.5).kraus()
        Quantum channel with 2 Kraus operators from dimension 2 to 2

    TESTS::

        >>> AmplitudeDamping(gamma=0.5).weight()
        Traceback (most recent call last):
        ...
        qnet.errors.UnsupportedChannelError: kind 'amplitude_damping' carries no edge weight; it is accepted by the covariance check only
    """
    kind = "amplitude_damping"
    parameter_names = ("gamma",)

    def _check(self):
        return check_probability("gamma", self._params["gamma"])

    def kraus(self):
        return amplitude_damping_channel(self._params["gamma"])


def _entry(value):
    if isinstance(value, (list, tuple)):
        real, imag = value
        return complex(real, imag)
    return complex(value)


class KrausOperators(_CovarianceOnlyChannel):
    """
    Construct a channel from explicit Kraus operators

    Matrix entries are numbers or ``[re, im]`` pairs.

    INPUT:

    - ``operators`` -- list of matrices given as lists of rows

    EXAMPLES::

        >>> from qnet.channels import KrausOperators
        >>> channel = KrausOperators(operators=[[[1, 0], [0, 1]]])
        >>> channel.validate()
        []
        >>> channel.label()
        'kraus(1 operator)'
        >>> KrausOperators(operators=[[[0, [0, -1]], [[0, 1], 0]]]).kraus()
        Quantum channel with 1 Kraus operator from dimension 2 to 2

    TESTS::

        >>> KrausOperators(operators=[[[1, 0], [0, 0.5]]]).validate()
        ['Kraus operators do not satisfy the completeness relation (deviation 0.75)']
    """
    kind = "kraus"
    parameter_names = ("operators",)

    def _matrices(self):
        return [np.array([[_entry(x) for x in row] for row in op], dtype=complex)
                for op in self._params["operators"]]

    def _check(self):
        try:
            KrausChannel(self._matrices())
        except (DomainError, UsageError, TypeError, ValueError) as e:
            return [str(e)]
        return []

    def kraus(self):
        return KrausChannel(self._matrices())

    def label(self):
        n = len(self._params.get("operators", ()))
        noun = "operator" if n == 1 else "operators"
        return f"{self.kind}({n} {noun})"
