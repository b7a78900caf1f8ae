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


from .linalg import PAULIS, pauli, jacobi_eigh, eigvalsh, hermitian_function, trace_norm, partial_transpose
from .states import DensityMatrix, BellDiagonalSpectrum, bell_basis, bell_state, pure_state, maximally_mixed
from .entropy import binary_entropy, shannon_entropy, vn_entropy, relative_entropy
from .kraus import (KrausChannel, identity_channel, pauli_channel, dephasing_channel, erasure_channel,
                    amplitude_damping_channel, pauli_twirl)
from .ree import ree_bell_diagonal, closest_separable_bell_diagonal, ree_numeric_oracle, is_ppt
from .covariance import CovarianceReport, is_weyl_covariant
