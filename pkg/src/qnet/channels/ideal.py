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

from ..quantum.kraus import identity_channel
from .base import BaseChannel


class Ideal(BaseChannel):
    """
    Construct a perfect channel; its weight is `+\\infty`

    EXAMPLES::

        >>> from qnet.channels import Ideal
        >>> Ideal().weight().value
        inf
        >>> Ideal().kraus()
        Quantum channel with 1 Kraus operator from dimension 2 to 2
    """
    kind = "ideal"

    def _check(self):
        return []

    def _weight(self):
        return math.inf

    def kraus(self):
        return identity_channel()
