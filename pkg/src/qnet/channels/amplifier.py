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


import math

from .base import BaseChannel


class QuantumLimitedAmplifier(BaseChannel):
    r"""
    Construct a bosonic quantum-limited amplifier with gain `g > 1`

    The weight `-\log_2(1 - 1/g)` is the secret-key capacity known from the point-to-point
    literature; it is a catalog constant that the numerical core does not recompute.

    INPUT:

    - ``g`` -- gain, larger than one

    EXAMPLES::

        >>> from qnet.channels import QuantumLimitedAmplifier
        >>> QuantumLimitedAmplifier(g=2.0).weight()
        EdgeWeight(1.0, distillable, closed_form_literature)

    TESTS::

        >>> QuantumLimitedAmplifier(g=1.0).validate()
        ['g must be greater than 1']
    """
    kind = "qlim_amp"
    parameter_names = ("g",)
    distillable = True
    provenance = "closed_form_literature"

    def _check(self):
        g = self._params["g"]
        if not (math.isfinite(g) and g > 1):
            return ["g must be greater than 1"]
        return []

    def _weight(self):
        return max(0.0, -math.log2(1 - 1 / self._params["g"])) + 0.0
