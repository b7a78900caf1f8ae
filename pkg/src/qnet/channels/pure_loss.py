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


class PureLoss(BaseChannel):
    r"""
    Construct a bosonic pure-loss channel with transmissivity `\eta`

    Its secret-key capacity, and the REE of its asymptotic Choi matrix, is `-\log_2(1-\eta)`.

    INPUT:

    - ``eta`` -- transmissivity in `(0, 1)`

    EXAMPLES::

        >>> from qnet.channels import PureLoss
        >>> PureLoss(eta=0.5).weight().value
        1.0
        >>> round(PureLoss(eta=0.9).weight().value, 6)
        3.321928

    TESTS::

        >>> PureLoss(eta=1.0).validate()
        ['η must lie in (0,1)']
    """
    kind = "pure_loss"
    parameter_names = ("eta",)
    distillable = True
    provenance = "closed_form_paper"

    def _check(self):
        eta = self._params["eta"]
        if not (math.isfinite(eta) and 0 < eta < 1):
            return ["η must lie in (0,1)"]
        return []

    def _weight(self):
        return max(0.0, -math.log2(1 - self._params["eta"])) + 0.0
