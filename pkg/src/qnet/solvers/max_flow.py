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
Minimum cut through a super-terminal maximum flow

All senders are contracted into a super-source and all receivers into a super-sink. Every undirected
edge becomes a pair of opposite arcs, each with capacity equal to the edge weight, and each serving as
the residual arc of the other. The maximum flow is computed with Dinic's level-graph algorithm; the
sender side of the witness cut is the set of nodes reachable from the super-source in the final
residual graph.
"""
import logging
import math
from collections import deque

from ..config import DEFAULT_TOLERANCE, FLOW_EPSILON
from ..network import Cut, make_witness
from .base import BaseSolver, cached_result


logger = logging.getLogger(__name__)

SOURCE = 0
SINK = 1


class FlowGraph(object):
    """
    Construct a flow network on ``n`` vertices with undirected capacities

    EXAMPLES::

        >>> from qnet.solvers.max_flow import FlowGraph
        >>> g = FlowGraph(4)
        >>> g.add_edge(0, 2, 3.0); g.add_edge(0, 3, 2.0); g.add_edge(2, 1, 2.0); g.add_edge(3, 1, 3.0)
        >>> g.add_edge(2, 3, 1.0)
        >>> g.max_flow(0, 1)
        5.0
        >>> sorted(g.reachable(0))
        [0]
    """
    def __init__(self, n, epsilon=FLOW_EPSILON):
        self._n = n
        self._epsilon = epsilon
        self._adjacency = [[] for _ in range(n)]
        self._head = []
        self._capacity = []

    def add_edge(self, u, v, capacity):
        # arcs 2k and 2k+1 are each other's reverse
        self._adjacency[u].append(len(self._head))
        self._head.append(v)
        self._capacity.append(capacity)
        self._adjacency[v].append(len(self._head))
        self._head.append(u)
        self._capacity.append(capacity)

    def _levels(self, s):
        level = [-1] * self._n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self._adjacency[u]:
                v = self._head[arc]
                if level[v] < 0 and self._capacity[arc] > self._epsilon:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _blocking_flow(self, s, t, level):
        head, capacity, adjacency = self._head, self._capacity, self._adjacency
        pointer = [0] * self._n
        total = 0.0
        while True:
            path, u = [], s
            while u != t:
                while pointer[u] < len(adjacency[u]):
                    arc = adjacency[u][pointer[u]]
                    v = head[arc]
                    if capacity[arc] > self._epsilon and level[v] == level[u] + 1:
                        break
                    pointer[u] += 1
                else:
                    if u == s:
                        return total
                    arc = path.pop()
                    u = head[arc ^ 1]
                    pointer[u] += 1
                    continue
                path.append(arc)
                u = head[arc]

            pushed = min(capacity[arc] for arc in path)
            for arc in path:
                capacity[arc] -= pushed
                capacity[arc ^ 1] += pushed
            total += pushed

    def max_flow(self, s, t):
        """
        Return the value of a maximum `s`-`t` flow; the residual capacities are updated in place
        """
        flow, phase = 0.0, 0
        while True:
            level = self._levels(s)
            if level[t] < 0:
                break
            phase += 1
            flow += self._blocking_flow(s, t, level)
        logger.debug("max-flow finished after %d phase(s) with value %g", phase, flow)
        return flow

    def reachable(self, s):
        """
        Return the vertices reachable from ``s`` through arcs with residual capacity
        """
        level = self._levels(s)
        return {v for v in range(self._n) if level[v] >= 0}


class MaxFlow(BaseSolver):
    r"""
    Construct the max-flow/min-cut solver

    Edges of weight `+\infty` get the capacity `\sum w_{finite} + 1`; when such an edge crosses the
    witness cut the exact flow of the cut, and hence the bound, is `+\infty`. The bound is always the
    exact multi-edge REE flow of the witness cut.

    INPUT:

    - ``network`` -- a :class:`~qnet.network.QuantumNetwork`
    - ``tolerance`` -- largest accepted gap between the flow value and the witness cut (default: 1e-9)

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork
        >>> from qnet.solvers import MaxFlow
        >>> star = QuantumNetwork(["a", "r", "b1", "b2", "b3"], ["a"], ["b1", "b2", "b3"],
        ...                       [("a", "r", {"kind": "pure_loss", "eta": 0.75}), ("r", "b1", {"kind": "ideal"}),
        ...                        ("r", "b2", {"kind": "ideal"}), ("r", "b3", {"kind": "ideal"})])
        >>> MaxFlow(star).witness()
        Cut {a} | {r, b1, b2, b3} with flow 2.0 over 1 edge

    TESTS::

        >>> ideal = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
        ...                        [("a", "r", {"kind": "ideal"}), ("r", "b", {"kind": "ideal"}),
        ...                         ("a", "b", {"kind": "custom", "w": 0.5})])
        >>> MaxFlow(ideal).bound()
        inf
        >>> apart = QuantumNetwork(["a", "b"], ["a"], ["b"], [])
        >>> MaxFlow(apart).bound()
        0.0
    """
    method = "max_flow"
    short_name = "maxflow"

    def __init__(self, network, tolerance=DEFAULT_TOLERANCE):
        super().__init__(network, tolerance=tolerance)

    def _flow_graph(self):
        net = self._network
        index = {node: SOURCE for node in net.senders}
        index.update({node: SINK for node in net.receivers})
        index.update({node: i + 2 for i, node in enumerate(net.free_nodes)})

        finite = [w.value for w in net.weights() if math.isfinite(w.value)]
        cap = sum(finite) + 1

        graph = FlowGraph(len(net.free_nodes) + 2)
        for edge in net.edges:
            u, v = index[edge.u], index[edge.v]
            if u == v:
                continue
            value = edge.weight().value
            graph.add_edge(u, v, value if math.isfinite(value) else cap)
        return graph, index, cap

    @cached_result
    def witness(self):
        """
        Return the :class:`~qnet.network.CutWitness` of the minimum cut found from the residual graph
        """
        graph, index, cap = self._flow_graph()
        flow = graph.max_flow(SOURCE, SINK)
        reachable = graph.reachable(SOURCE)

        net = self._network
        side_a = [node for node in net.nodes if index[node] in reachable]
        side_b = [node for node in net.nodes if index[node] not in reachable]
        witness = make_witness(net, Cut(side_a, side_b))

        if math.isinf(witness.flow_value):
            logger.warning("an infinite-weight edge crosses the minimum cut (capacity cap %g)", cap)
        elif abs(witness.flow_value - flow) > self._tolerance:
            logger.warning("max-flow value %.12g differs from the witness cut flow %.12g", flow, witness.flow_value)
        return witness


def bound_max_flow(network, **kwargs):
    """
    Return the :class:`~qnet.solvers.base.BoundReport` of the max-flow solver

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork
        >>> from qnet.solvers.max_flow import bound_max_flow
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.9})])
        >>> round(bound_max_flow(net).bound, 6)
        3.321928
    """
    return MaxFlow(network, **kwargs).report()
