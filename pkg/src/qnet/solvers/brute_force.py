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
Exhaustive minimisation of the multi-edge REE flow over every sender/receiver cut
"""
import logging
from concurrent.futures import ProcessPoolExecutor

from ..config import DEFAULT_TOLERANCE, TIE_TOLERANCE, max_free_nodes
from ..errors import CapacityError, DomainError
from ..network import cut_from_counter, make_witness
from .base import BaseSolver, cached_result


logger = logging.getLogger(__name__)


def _is_better(value, key, best):
    if best is None:
        return True
    best_value, best_key, _ = best
    if value == best_value or abs(value - best_value) <= TIE_TOLERANCE:
        return key < best_key
    return value < best_value


def _scan_range(network, start, stop):
    """
    Return ``(value, key, counter)`` of the best cut among binary counters in ``[start, stop)``

    Bit `i` of a counter puts the `i`-th free node on the sender side.
    """
    senders, receivers = set(network.senders), set(network.receivers)
    position = {node: i for i, node in enumerate(network.free_nodes)}
    free = network.free_nodes

    def code(node):
        if node in senders:
            return -1
        if node in receivers:
            return -2
        return position[node]

    edges = [(code(edge.u), code(edge.v), edge.weight().value) for edge in network.edges]

    def on_side_a(c, counter):
        if c >= 0:
            return counter >> c & 1 == 1
        return c == -1

    best = None
    for counter in range(start, stop):
        value = 0.0
        for cu, cv, weight in edges:
            if on_side_a(cu, counter) != on_side_a(cv, counter):
                value += weight
        if best is not None and value > best[0] + TIE_TOLERANCE:
            continue
        key = tuple(sorted(list(network.senders) + [free[i] for i in range(len(free)) if counter >> i & 1]))
        if _is_better(value, key, best):
            best = (value, key, counter)
    return best


class BruteForce(BaseSolver):
    r"""
    Construct the exhaustive cut solver

    Every assignment of the free nodes to the two sides is evaluated, in binary-counter order. Among
    cuts whose flows agree within `10^{-12}` the one with the lexicographically smallest sorted
    sender side wins.

    INPUT:

    - ``network`` -- a :class:`~qnet.network.QuantumNetwork`
    - ``tolerance`` -- numerical tolerance reported with the bound (default: 1e-9)
    - ``jobs`` -- number of worker processes sharing the counter range (default: 1)
    - ``limit`` -- largest admissible number of free nodes (default: ``QNET_MAX_FREE_NODES`` or 22)

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork
        >>> from qnet.solvers import BruteForce
        >>> star = QuantumNetwork(["a", "r", "b1", "b2"], ["a"], ["b1", "b2"],
        ...                       [("a", "r", {"kind": "pure_loss", "eta": 0.75}),
        ...                        ("r", "b1", {"kind": "ideal"}), ("r", "b2", {"kind": "ideal"})])
        >>> solver = BruteForce(star)
        >>> solver.bound()
        2.0
        >>> solver.witness()
        Cut {a} | {r, b1, b2} with flow 2.0 over 1 edge
        >>> solver
        brute_force solver for a network with 4 nodes and 3 edges

    TESTS::

        >>> BruteForce(star, limit=0)
        Traceback (most recent call last):
        ...
        qnet.errors.CapacityError: 1 free nodes exceed the enumeration limit of 0; use the max-flow method
        >>> BruteForce(star, jobs=0)
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: jobs must be >= 1
    """
    method = "brute_force"
    short_name = "brute"

    def __init__(self, network, tolerance=DEFAULT_TOLERANCE, jobs=1, limit=None):
        if jobs < 1:
            raise DomainError("jobs must be >= 1")
        if limit is None:
            limit = max_free_nodes()

        k = len(network.free_nodes)
        if k > limit:
            raise CapacityError(f"{k} free nodes exceed the enumeration limit of {limit}; use the max-flow method")

        super().__init__(network, tolerance=tolerance)
        self._jobs = jobs

    def ncuts(self):
        """
        Return the number of cuts to evaluate
        """
        return 2 ** len(self._network.free_nodes)

    def _ranges(self):
        total = self.ncuts()
        step = -(-total // self._jobs)
        return [(start, min(start + step, total)) for start in range(0, total, step)]

    @cached_result
    def witness(self):
        """
        Return the :class:`~qnet.network.CutWitness` of the minimum cut

        EXAMPLES::

            >>> from qnet.network import QuantumNetwork
            >>> from qnet.solvers import BruteForce
            >>> diamond = QuantumNetwork(["a", "x", "y", "b"], ["a"], ["b"],
            ...                          [("a", "x", {"kind": "custom", "w": 1.0}),
            ...                           ("a", "y", {"kind": "custom", "w": 1.0}),
            ...                           ("x", "b", {"kind": "custom", "w": 1.0}),
            ...                           ("y", "b", {"kind": "custom", "w": 1.0})])
            >>> BruteForce(diamond).witness().cut
            Cut {a} | {x, y, b}
        """
        ranges = self._ranges()
        logger.debug("enumerating %d cuts in %d range(s)", self.ncuts(), len(ranges))

        if self._jobs > 1 and len(ranges) > 1:
            with ProcessPoolExecutor(max_workers=self._jobs) as pool:
                futures = [pool.submit(_scan_range, self._network, start, stop) for start, stop in ranges]
                partial = [future.result() for future in futures]
        else:
            partial = [_scan_range(self._network, start, stop) for start, stop in ranges]

        best = None
        for value, key, counter in partial:
            if _is_better(value, key, best):
                best = (value, key, counter)

        return make_witness(self._network, cut_from_counter(self._network, best[2]))


def bound_brute_force(network, **kwargs):
    """
    Return the :class:`~qnet.solvers.base.BoundReport` of the exhaustive solver

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork
        >>> from qnet.solvers.brute_force import bound_brute_force
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
        >>> bound_brute_force(net).bound
        1.0
    """
    return BruteForce(network, **kwargs).report()
