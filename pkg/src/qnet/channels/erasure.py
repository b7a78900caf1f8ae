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


import numpy as np

from ..quantum.kraus import erasure_channel
from ..quantum.ree import closest_separable_bell_diagonal
from ..quantum.states import DensityMatrix
from .base import BaseChannel, check_probability


class Erasure(BaseChannel):
    r"""
    Construct a qubit erasure channel `\rho \mapsto (1-p)\rho \oplus p|e\rangle\langle e|`

    The Choi matrix lives on a `2 \otimes 3` system. The weight `1 - p` is certified in-repo as an
    upper bound on the REE by :meth:`separable_candidate`; its tightness is a literature result.

    INPUT:

    - ``p`` -- erasure probability in `[0, 1]`

    EXAMPLES::

        >>> from qnet.channels import Erasure
        >>> Erasure(p=1.0).weight().value
        0.0
        >>> Erasure(p=0.3).weight()
        EdgeWeight(0.7, distillable, closed_form_literature)
    """
    kind = "erasure"
    parameter_names = ("p",)
    distillable = True
    provenance = "closed_form_literature"

    def _check(self):
        return check_probability("p", self._params["p"])

    def _weight(self):
        return 1 - self._params["p"]

    def kraus(self):
        return erasure_channel(self._params["p"])

    def separable_candidate(self):
        r"""
        Return the separable state `(1-p)\gamma^* \oplus p (I/2 \otimes |e\rangle\langle e|)` on `2 \otimes 3`

        Here `\gamma^*` is the closest separable state of the Bell state, embedded in the
        non-erased block. Its relative entropy to the Choi matrix is exactly `1 - p`.

        EXAMPLES::

            >>> from qnet.channels import Erasure
            >>> from qnet.quantum.entropy import relative_entropy
            >>> channel = Erasure(p=0.3)
            >>> choi = channel.kraus().choi_matrix()
            >>> round(relative_entropy(choi, channel.separable_candidate()), 9)
            0.7
        """
        p = self._params["p"]
        embed = np.kron(np.eye(2), np.array([[1, 0], [0, 1], [0, 0]]))
        gamma = closest_separable_bell_diagonal([1, 0, 0, 0]).matrix
        flag = np.kron(np.eye(2) / 2, np.diag([0, 0, 1]))
        return DensityMatrix((1 - p) * embed @ gamma @ embed.T + p * flag, dims=(2, 3))
