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


from math import log2

from qnet import ConferenceKeyEstimator, QuantumNetwork
from qnet.channels import edge_weight
from qnet.finite_size import FiniteSizeParams, finite_size_bound

# Point-to-point: the bound of a single pure-loss edge is -log2(1 - eta)
for eta in (0.1, 0.5, 0.9):
    net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": eta})])
    E = ConferenceKeyEstimator(net)
    print(f"pure loss eta={eta}: {E.bound().bound:.6f} (expected {-log2(1 - eta):.6f})")

# Router: a lossy link to a relay that fans out to three receivers through ideal links
star = QuantumNetwork(["a", "r", "b1", "b2", "b3"], ["a"], ["b1", "b2", "b3"],
                      [("a", "r", {"kind": "pure_loss", "eta": 0.75}), ("r", "b1", {"kind": "ideal"}),
                       ("r", "b2", {"kind": "ideal"}), ("r", "b3", {"kind": "ideal"})])
E = ConferenceKeyEstimator(star)
print("\nRouter")
print(E.bound().to_text())
print(E.table())

# Diamond: two dephasing links feeding two erasure links
diamond = QuantumNetwork(["a", "x", "y", "b"], ["a"], ["b"],
                         [("a", "x", {"kind": "dephasing", "p": 0.1}), ("a", "y", {"kind": "dephasing", "p": 0.1}),
                          ("x", "b", {"kind": "erasure", "p": 0.5}), ("y", "b", {"kind": "erasure", "p": 0.5})])
E = ConferenceKeyEstimator(diamond)
print("\nDiamond")
print(E.weights_table())
print(E.cuts_table())

# Two senders sharing a relay
two = QuantumNetwork(["a1", "a2", "h", "r", "b1", "b2"], ["a1", "a2"], ["b1", "b2"],
                     [("a1", "r", {"kind": "ideal"}), ("a2", "h", {"kind": "pure_loss", "eta": 0.1}),
                      ("h", "r", {"kind": "custom", "w": 5.0}), ("r", "b1", {"kind": "custom", "w": 4.0}),
                      ("r", "b2", {"kind": "custom", "w": 4.0})])
E = ConferenceKeyEstimator(two)
print("\nTwo senders")
print(f"joint: {E.bound().bound:.6f}")
for sender, report in E.per_sender_bounds():
    print(f"{sender}: {report.bound:.6f}")

# Weak converse after n uses of a single dephasing link
bound = edge_weight({"kind": "dephasing", "p": 0.1}).value
print("\nFinite size (dephasing p=0.1, alpha_n=1)")
for n in (10**3, 10**6, 10**9):
    print(f"n={n}: {finite_size_bound(bound, FiniteSizeParams(epsilon=1e-3, n=n, alpha_n=1)):.6f}")
