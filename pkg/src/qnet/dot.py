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


"""
Graphviz export of quantum networks
"""
from .utils import format_text


SHAPES = {"sender": "box", "receiver": "doublecircle", "free": "ellipse"}


def _quote(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(network, witness=None, name="qnet"):
    """
    Return the network as an undirected Graphviz graph

    Senders are boxes, receivers double circles. Each edge is labelled ``kind(params) | w=weight``;
    the edges of ``witness`` are dashed.

    INPUT:

    - ``network`` -- a :class:`~qnet.network.QuantumNetwork`
    - ``witness`` -- a :class:`~qnet.network.CutWitness` to highlight (default: None)
    - ``name`` -- the graph identifier (default: qnet)

    EXAMPLES::

        >>> from qnet.dot import export_dot
        >>> from qnet.network import QuantumNetwork
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
        >>> print(export_dot(net), end="")
        graph "qnet" {
          "a" [shape=box];
          "b" [shape=doublecircle];
          "a" -- "b" [label="pure_loss(0.5) | w=1.000"];
        }
    """
    senders, receivers = set(network.senders), set(network.receivers)
    dashed = set() if witness is None else {edge.index for edge in witness.cut_set}

    lines = [f"graph {_quote(name)} {{"]
    for node in network.nodes:
        role = "sender" if node in senders else "receiver" if node in receivers else "free"
        lines.append(f"  {_quote(node)} [shape={SHAPES[role]}];")

    for edge in network.edges:
        label = f"{edge.channel.label()} | w={format_text(edge.weight().value)}"
        attributes = f"label={_quote(label)}"
        if edge.index in dashed:
            attributes += ", style=dashed"
        lines.append(f"  {_quote(edge.u)} -- {_quote(edge.v)} [{attributes}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
