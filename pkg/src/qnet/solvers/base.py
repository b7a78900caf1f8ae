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


import functools

from prettytable import PrettyTable

from ..config import DEFAULT_TOLERANCE
from ..errors import DomainError
from ..network import check_weights
from ..utils import format_text, json_number


class BoundReport(object):
    """
    Construct the outcome of a cut bound computation

    INPUT:

    - ``network`` -- the :class:`~qnet.network.QuantumNetwork` that was bounded
    - ``witness`` -- the minimising :class:`~qnet.network.CutWitness`
    - ``method`` -- ``brute_force`` or ``max_flow``
    - ``tolerance`` -- tolerance used by the solver (default: 1e-9)

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork
        >>> from qnet.solvers import MaxFlow
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
        >>> report = MaxFlow(net).report()
        >>> report
        Bound 1.0 bits per network use (max_flow)
        >>> report.distillable_network
        True
        >>> report.to_dict()["witness"]["cut_set"]
        [{'u': 'a', 'v': 'b', 'index': 0, 'weight': 1.0}]
    """
    def __init__(self, network, witness, method, tolerance=DEFAULT_TOLERANCE):
        self._network = network
        self._witness = witness
        self._method = method
        self._tolerance = tolerance

    @property
    def bound(self):
        """
        Return the bound on the sum of the sender rates, in bits per network use
        """
        return self._witness.flow_value

    @property
    def witness(self):
        return self._witness

    @property
    def method(self):
        return self._method

    @property
    def tolerance(self):
        return self._tolerance

    @property
    def network(self):
        return self._network

    @property
    def per_edge_weights(self):
        """
        Return the list of :class:`~qnet.channels.EdgeWeight`, one per edge
        """
        return self._network.weights()

    @property
    def distillable_network(self):
        """
        Return ``True`` if every channel is distillable; the bound is then the min-cut of the multi-edge
        secret-key capacity
        """
        return self._network.is_distillable()

    def to_dict(self, digits=12):
        weights = []
        for edge in self._network.edges:
            weight = edge.weight()
            weights.append({"u": edge.u, "v": edge.v, "index": edge.index, "kind": edge.channel.kind,
                            "weight": json_number(weight.value, digits), "distillable": weight.distillable,
                            "provenance": weight.provenance})
        return {"bound": json_number(self.bound, digits),
                "method": self._method,
                "witness": self._witness.to_dict(digits),
                "distillable_network": self.distillable_network,
                "per_edge_weights": weights,
                "tolerance": self._tolerance}

    def to_text(self, digits=4):
        """
        Return the human readable report

        EXAMPLES::

            >>> from qnet.network import QuantumNetwork
            >>> from qnet.solvers import BruteForce
            >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
            >>> print(BruteForce(net).report().to_text())
            bound: 1.000 bits per network use
            method: brute_force
            side A: a
            +------+---+---+----------------+--------+
            | edge | u | v |    channel     | weight |
            +------+---+---+----------------+--------+
            |  0   | a | b | pure_loss(0.5) | 1.000  |
            +------+---+---+----------------+--------+
            flow through cut: 1.000
            distillable network: the bound is the min-cut of the multi-edge secret-key capacity K^m(C)
        """
        lines = [f"bound: {format_text(self.bound, digits)} bits per network use",
                 f"method: {self._method}",
                 f"side A: {', '.join(self._witness.cut.side_a)}"]

        table = PrettyTable()
        table.field_names = ["edge", "u", "v", "channel", "weight"]
        for edge in self._witness.cut_set:
            table.add_row([edge.index, edge.u, edge.v, edge.channel.label(), format_text(edge.weight().value, digits)])
        lines.append(table.get_string())
        lines.append(f"flow through cut: {format_text(self._witness.flow_value, digits)}")
        if self.distillable_network:
            lines.append("distillable network: the bound is the min-cut of the multi-edge secret-key capacity K^m(C)")
        return "\n".join(lines)

    def __repr__(self):
        return f"Bound {self.bound} bits per network use ({self._method})"


class BaseSolver(object):
    """
    Base class for the solvers of the minimum multi-edge REE flow over sender/receiver cuts

    INPUT:

    - ``network`` -- a :class:`~qnet.network.QuantumNetwork`
    - ``tolerance`` -- numerical tolerance reported with the bound (default: 1e-9)

    TESTS::

        >>> from qnet.network import QuantumNetwork
        >>> from qnet.solvers.base import BaseSolver
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "ideal"})])
        >>> BaseSolver(net).witness()
        Traceback (most recent call last):
        ...
        NotImplementedError
        >>> BaseSolver(net, tolerance=0)
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: tolerance must be > 0
    """
    method = None
    short_name = None

    def __init__(self, network, tolerance=DEFAULT_TOLERANCE):
        if not tolerance > 0:
            raise DomainError("tolerance must be > 0")

        check_weights(network)
        self._network = network
        self._tolerance = tolerance
        self._results = dict()

    @property
    def network(self):
        return self._network

    @property
    def tolerance(self):
        return self._tolerance

    @property
    def results(self):
        """
        Return the results computed so far, keyed by method name
        """
        return dict(self._results)

    def witness(self):
        """
        Return the :class:`~qnet.network.CutWitness` of a minimum cut
        """
        raise NotImplementedError

    def bound(self):
        """
        Return the minimum multi-edge REE flow over all sender/receiver cuts
        """
        return self.witness().flow_value

    def report(self):
        """
        Return the :class:`BoundReport`
        """
        return BoundReport(self._network, self.witness(), self.method, self._tolerance)

    def __repr__(self):
        n, m = len(self._network.nodes), len(self._network.edges)
        edges = "edge" if m == 1 else "edges"
        return f"{self.method} solver for a network with {n} nodes and {m} {edges}"


def cached_result(func):
    """
    Decorator caching the result of a :class:`BaseSolver` method in ``self._results``

    INPUT:

    - ``func`` -- a method of a BaseSolver subclass
    """
    @functools.wraps(func)
    def cached_result(*args, **kwargs):
        name = func.__name__
        self = args[0]

        if name not in self._results:
            self._results[name] = func(*args, **kwargs)
        return self._results[name]
    return cached_result
