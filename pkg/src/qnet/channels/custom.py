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


class Custom(BaseChannel):
    """
    Construct a channel known only through a user-supplied REE weight

    INPUT:

    - ``w`` -- weight in bits per use, finite and non-negative

    EXAMPLES::

        >>> from qnet.channels import Custom
        >>> Custom(w=0.42).weight()
        EdgeWeight(0.42, not distillable, custom)

    TESTS::

        >>> Custom(w=-1.0).validate()
        ['w must be a finite non-negative number']
    """
    kind = "custom"
    parameter_names = ("w",)
    provenance = "custom"

    def _check(self):
        w = self._params["w"]
        if not (math.isfinite(w) and w >= 0):
            return ["w must be a finite non-negative number"]
        return []

    def _weight(self):
        return self._params["w"]
