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


import inspect
import logging

from prettytable import PrettyTable

from .config import AUTO_BRUTE_FORCE_LIMIT, DEFAULT_TOLERANCE, max_free_nodes
from .errors import CapacityError, UsageError
from .network import enumerate_cuts, make_witness, validate_network
from .solvers import BaseSolver, BruteForce, MaxFlow
from .utils import format_text


logger = logging.getLogger(__name__)

METHODS = ("auto", "brute", "maxflow")


def select_solver(network, method="auto", tolerance=DEFAULT_TOLERANCE, jobs=1):
    """
    Return the solver for ``method``; ``auto`` picks brute force up to 16 free nodes (fewer when the
    enumeration limit is lower), max-flow beyond

    INPUT:

    - ``network`` -- a :class:`~qnet.network.QuantumNetwork`
    - ``method`` -- ``auto``, ``brute`` or ``maxflow`` (default: auto)
    - ``tolerance`` -- numerical tolerance (default: 1e-9)
    - ``jobs`` -- worker processes for brute force (default: 1)

    EXAMPLES::

        >>> from qnet.estimator import select_solver
        >>> from qnet.network import QuantumNetwork
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "ideal"})])
        >>> select_solver(net)
        brute_force solver for a network with 2 nodes and 1 edge
        >>> select_solver(net, "maxflow")
        max_flow solver for a network with 2 nodes and 1 edge

    TESTS::

        >>> select_solver(net, "simplex")
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: method must be one of auto, brute, maxflow
    """
    if method not in METHODS:
        raise UsageError(f"method must be one of {', '.join(METHODS)}")

    if method == "auto":
        limit = min(AUTO_BRUTE_FORCE_LIMIT, max_free_nodes())
        method = "brute" if len(network.free_nodes) <= limit else "maxflow"
        logger.debug("auto method selection: %s for %d free nodes", method, len(network.free_nodes))

    if method == "brute":
        return BruteForce(network, tolerance=tolerance, jobs=jobs)
    return MaxFlow(network, tolerance=tolerance)


def per_sender_bounds(network, method="auto", tolerance=DEFAULT_TOLERANCE, jobs=1):
    """
    Return a list of ``(sender, report)``: the bound for each sender alone, other senders acting as relays

    EXAMPLES::

        >>> from qnet.estimator import per_sender_bounds
        >>> from qnet.network import QuantumNetwork
        >>> net = QuantumNetwork(["a1", "a2", "r", "b"], ["a1", "a2"], ["b"],
        ...                      [("a1", "r", {"kind": "custom", "w": 3.0}),
        ...                       ("a2", "r", {"kind": "pure_loss", "eta": 0.5}),
        ...                       ("r", "b", {"kind": "custom", "w": 2.0})])
        >>> [(sender, report.bound) for sender, report in per_sender_bounds(net)]
        [('a1', 2.0), ('a2', 1.0)]
    """
    return [(sender, select_solver(network.with_senders([sender]), method, tolerance, jobs).report())
            for sender in network.senders]


class ConferenceKeyEstimator(object):
    """
    Construct an instance of the conferencing-key bound estimator

    The estimator evaluates the cut bound: the sum of the key rates of the senders is at most the
    minimum, over every cut separating the senders from the receivers, of the multi-edge REE flow.

    INPUT:

    - ``network`` -- a :class:`~qnet.network.QuantumNetwork`
    - ``method`` -- ``auto``, ``brute`` or ``maxflow`` (default: auto)
    - ``tolerance`` -- numerical tolerance (default: 1e-9)
    - ``jobs`` -- worker processes for brute force (default: 1)
    - ``excluded_solvers`` -- a list/tuple of excluded solver classes (default: None)

    EXAMPLES::

        >>> from qnet import ConferenceKeyEstimator
        >>> from qnet.network import QuantumNetwork
        >>> net = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
        ...                      [("a", "r", {"kind": "pure_loss", "eta": 0.75}), ("r", "b", {"kind": "ideal"})])
        >>> E = ConferenceKeyEstimator(net)
        >>> E
        Conferencing-key estimator for a network with 1 sender and 1 receiver
        >>> E.bound()
        Bound 2.0 bits per network use (brute_force)
    """
    def __init__(self, network, method="auto", tolerance=DEFAULT_TOLERANCE, jobs=1, excluded_solvers=None):
        if method not in METHODS:
            raise UsageError(f"method must be one of {', '.join(METHODS)}")
        if not tolerance > 0:
            raise UsageError("tolerance must be > 0")

        excluded_solvers = tuple(excluded_solvers or ())
        if any(not issubclass(Solver, BaseSolver) for Solver in excluded_solvers):
            raise TypeError(f"all excluded solvers must be a subclass of {BaseSolver.__name__}")

        self._network = network
        self._method = method
        self._tolerance = tolerance
        self._jobs = jobs
        self._excluded = excluded_solvers
        self._report = None
        self._per_sender = None

    @property
    def network(self):
        return self._network

    def diagnostics(self):
        """
        Return the :class:`~qnet.network.Diagnostics` of the network
        """
        return validate_network(self._network)

    def solvers(self):
        """
        Return the solvers that can handle the network

        EXAMPLES::

            >>> from qnet import ConferenceKeyEstimator
            >>> from qnet.network import QuantumNetwork
            >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "ideal"})])
            >>> ConferenceKeyEstimator(net).solvers()
            [brute_force solver for a network with 2 nodes and 1 edge,
             max_flow solver for a network with 2 nodes and 1 edge]

        TESTS::

            >>> from qnet.solvers import BruteForce
            >>> ConferenceKeyEstimator(net, excluded_solvers=[BruteForce]).solver_names()
            ['MaxFlow']
        """
        args = {"network": self._network, "tolerance": self._tolerance, "jobs": self._jobs}
        solvers = []
        for Solver in BaseSolver.__subclasses__():
            if Solver in self._excluded:
                continue
            names = inspect.getargs(Solver.__init__.__code__).args
            try:
                solvers.append(Solver(**{name: args[name] for name in names if name in args}))
            except CapacityError:
                continue
        return solvers

    def solver_names(self):
        """
        Return the class names of the solvers that can handle the network
        """
        return [solver.__class__.__name__ for solver in self.solvers()]

    def nsolvers(self):
        return len(self.solvers())

    def bound(self):
        """
        Return the :class:`~qnet.solvers.base.BoundReport` of the selected method

        Network warnings, such as receivers no sender can reach, are logged.
        """
        if self._report is None:
            for message in self.diagnostics().warnings:
                logger.warning(message)
            solver = select_solver(self._network, self._method, self._tolerance, self._jobs)
            logger.info("bounding with the %s method", solver.method)
            self._report = solver.report()
        return self._report

    def per_sender_bounds(self):
        """
        Return a list of ``(sender, report)`` with the bound for each sender alone
        """
        if self._per_sender is None:
            self._per_sender = per_sender_bounds(self._network, self._method, self._tolerance, self._jobs)
        return self._per_sender

    def is_rate_admissible(self, rates):
        """
        Return ``True`` if the rate tuple `(R_1, ..., R_N)` lies inside the outer bound

        The rates must be non-negative, their sum must not exceed the joint bound and each rate must not
        exceed its per-sender bound, all within the tolerance. Admissibility does not mean achievability.

        EXAMPLES::

            >>> from qnet import ConferenceKeyEstimator
            >>> from qnet.network import QuantumNetwork
            >>> net = QuantumNetwork(["a1", "a2", "b"], ["a1", "a2"], ["b"],
            ...                      [("a1", "b", {"kind": "custom", "w": 1.0}),
            ...                       ("a2", "b", {"kind": "custom", "w": 0.5})])
            >>> E = ConferenceKeyEstimator(net)
            >>> E.is_rate_admissible([1.0, 0.5])
            True
            >>> E.is_rate_admissible([0.2, 0.8])
            False

        TESTS::

            >>> E.is_rate_admissible([1.0])
            Traceback (most recent call last):
            ...
            qnet.errors.UsageError: expected 2 rates, one per sender
        """
        rates = [float(r) for r in rates]
        if len(rates) != len(self._network.senders):
            raise UsageError(f"expected {len(self._network.senders)} rates, one per sender")
        if any(r < 0 for r in rates):
            return False
        if sum(rates) > self.bound().bound + self._tolerance:
            return False
        return all(r <= report.bound + self._tolerance for r, (_, report) in zip(rates, self.per_sender_bounds()))

    def weights_table(self, precision=4):
        """
        Return a table with one row per edge: endpoints, channel, weight, distillable flag and provenance

        EXAMPLES::

            >>> from qnet import ConferenceKeyEstimator
            >>> from qnet.network import QuantumNetwork
            >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5}),
            ...                                                 ("a", "b", {"kind": "ideal"})])
            >>> print(ConferenceKeyEstimator(net).weights_table())
            +------+---+---+----------------+--------+-------------+------------------------+
            | edge | u | v |    channel     | weight | distillable |       provenance       |
            +------+---+---+----------------+--------+-------------+------------------------+
            |  0   | a | b | pure_loss(0.5) | 1.000  |     yes     |   closed_form_paper    |
            |  1   | a | b |    ideal()     |  inf   |      no     | closed_form_literature |
            +------+---+---+----------------+--------+-------------+------------------------+
        """
        table = PrettyTable()
        table.field_names = ["edge", "u", "v", "channel", "weight", "distillable", "provenance"]
        for edge in self._network.edges:
            weight = edge.weight()
            table.add_row([edge.index, edge.u, edge.v, edge.channel.label(), format_text(weight.value, precision),
                           "yes" if weight.distillable else "no", weight.provenance])
        return table

    def cuts_table(self, precision=4):
        """
        Return a table with one row per cut in enumeration order: sender side, cut-set and flow

        EXAMPLES::

            >>> from qnet import ConferenceKeyEstimator
            >>> from qnet.network import QuantumNetwork
            >>> net = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
            ...                      [("a", "r", {"kind": "pure_loss", "eta": 0.5}), ("r", "b", {"kind": "ideal"})])
            >>> print(ConferenceKeyEstimator(net).cuts_table())
            +--------+---------+-------+
            | side A | cut-set |  flow |
            +--------+---------+-------+
            |   a    |    0    | 1.000 |
            |  a, r  |    1    |  inf  |
            +--------+---------+-------+
        """
        table = PrettyTable()
        table.field_names = ["side A", "cut-set", "flow"]
        for cut in enumerate_cuts(self._network):
            witness = make_witness(self._network, cut)
            table.add_row([", ".join(cut.side_a), ", ".join(str(edge.index) for edge in witness.cut_set),
                           format_text(witness.flow_value, precision)])
        return table

    def table(self, precision=4):
        """
        Return a table comparing the bound and witness of every available solver

        EXAMPLES::

            >>> from qnet import ConferenceKeyEstimator
            >>> from qnet.network import QuantumNetwork
            >>> net = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
            ...                      [("a", "r", {"kind": "pure_loss", "eta": 0.5}), ("r", "b", {"kind": "ideal"})])
            >>> print(ConferenceKeyEstimator(net).table())
            +-------------+-------+--------+---------+
            |    method   | bound | side A | cut-set |
            +-------------+-------+--------+---------+
            | brute_force | 1.000 |   a    |    0    |
            |   max_flow  | 1.000 |   a    |    0    |
            +-------------+-------+--------+---------+
        """
        table = PrettyTable()
        table.field_names = ["method", "bound", "side A", "cut-set"]
        for solver in self.solvers():
            witness = solver.witness()
            table.add_row([solver.method, format_text(witness.flow_value, precision), ", ".join(witness.cut.side_a),
                           ", ".join(str(edge.index) for edge in witness.cut_set)])
        return table

    def __repr__(self):
        n, m = len(self._network.senders), len(self._network.receivers)
        senders = "sender" if n == 1 else "senders"
        receivers = "receiver" if m == 1 else "receivers"
        return f"Conferencing-key estimator for a network with {n} {senders} and {m} {receivers}"
