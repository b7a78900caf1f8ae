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


from ..quantum.entropy import binary_entropy
from ..quantum.kraus import dephasing_channel
from .base import BaseChannel, check_probability


class Dephasing(BaseChannel):
    r"""
    Construct a qubit dephasing channel `\rho \mapsto (1-p)\rho + pZ\rho Z`

    INPUT:

    - ``p`` -- dephasing probability in `[0, 1]`

    EXAMPLES::

        >>> from qnet.channels import Dephasing
        >>> round(Dephasing(p=0.25).weight().value, 5)
        0.18872
        >>> Dephasing(p=0.5).weight().value
        0.0
        >>> Dephasing(p=0.25).kraus()
        Quantum channel with 2 Kraus operators from dimension 2 to 2
    """
    kind = "dephasing"
    parameter_names = ("p",)
    distillable = True
    provenance = "closed_form_literature"

    def _check(self):
        return check_probability("p", self._params["p"])

    def _weight(self):
        p = self._params["p"]
        return 1 - binary_entropy(min(p, 1 - p))

    def kraus(self):
        return dephasing_channel(self._params["p"])
