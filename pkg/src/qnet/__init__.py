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


from .estimator import ConferenceKeyEstimator
from .network import QuantumNetwork, parse_network, serialize_network
