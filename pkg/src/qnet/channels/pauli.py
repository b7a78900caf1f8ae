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

from ..quantum.kraus import pauli_channel
from ..quantum.ree import ree_bell_diagonal
from .base import BaseChannel


class Pauli(BaseChannel):
    r"""
    Construct a qubit Pauli channel `\rho \mapsto \sum_k p_k U_k \rho U_k^\dagger`

    Its Choi matrix is Bell-diagonal with spectrum `(p_0, p_1, p_2, p_3)`, so its weight is the
    Bell-diagonal REE.

    INPUT:

    - ``probs`` -- the four probabilities `(p_0, p_1, p_2, p_3)` of `I, X, Y, Z`

    EXAMPLES::

        >>> from qnet.channels import Pauli
        >>> round(Pauli(probs=[0.75, 0.25, 0, 0]).weight().value, 5)
        0.18872

    TESTS::

        >>> Pauli(probs=[0.5, 0.5, 0.1, 0.0]).validate()
        ['probabilities must sum to 1']
        >>> Pauli(probs=[0.5, 0.5]).validate()
        ['probs must hold exactly 4 probabilities']
    """
    kind = "pauli"
    parameter_names = ("probs",)
    distillable = False
    provenance = "closed_form_literature"

    def __init__(self, probs=None, **params):
        if probs is not None:
            params["probs"] = tuple(probs)
        super().__init__(**params)

    def _check(self):
        probs = self._params["probs"]
        if len(probs) != 4:
            return ["probs must hold exactly 4 probabilities"]
        if not all(math.isfinite(p) and 0 <= p <= 1 for p in probs):
            return ["probabilities must lie in [0,1]"]
        if abs(sum(probs) - 1) > 1e-9:
            return ["probabilities must sum to 1"]
        return []

    def _weight(self):
        return ree_bell_diagonal(self._params["probs"])

    def kraus(self):
        return pauli_channel(self._params["probs"])
