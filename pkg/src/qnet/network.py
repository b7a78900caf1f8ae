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
Quantum networks as undirected multigraphs with channel-labelled edges

A network holds named nodes in document order, a non-empty set of senders, a disjoint non-empty set
of receivers and a list of edges, each carrying a channel descriptor. A cut places every sender on
side A and every receiver on side B; its cut-set is the list of edges crossing the bipartition and
its multi-edge REE flow is the sum of their weights.
"""
import json

import networkx as nx

from .channels import BaseChannel, channel_from_dict
from .config import max_free_nodes
from .errors import CapacityError, DomainError, UsageError, ValidationError
from .utils import json_number, saturating_sum


NETWORK_FIELDS = ("nodes", "senders", "receivers", "edges")
EDGE_FIELDS = ("u", "v", "channel")


class Edge(object):
    """
    Construct an undirected edge carrying a channel

    INPUT:

    - ``u``, ``v`` -- endpoint names
    - ``channel`` -- a :class:`~qnet.channels.BaseChannel` or its JSON object
    - ``index`` -- position of the edge in the network's edge list (default: 0)

    EXAMPLES::

        >>> from qnet.network import Edge
        >>> e = Edge("a", "r", {"kind": "pure_loss", "eta": 0.5})
        >>> e
        Edge 0: a -- r pure_loss(0.5)
        >>> e.weight().value
        1.0
    """
    def __init__(self, u, v, channel, index=0):
        if not isinstance(channel, BaseChannel):
            channel = channel_from_dict(channel, position=f"/edges/{index}/channel")
        self._u = u
        self._v = v
        self._channel = channel
        self._index = index
        self._weight = None

    @property
    def u(self):
        return self._u

    @property
    def v(self):
        return self._v

    @property
    def channel(self):
        return self._channel

    @property
    def index(self):
        return self._index

    def endpoints(self):
        return self._u, self._v

    def weight(self):
        """
        Return the :class:`~qnet.channels.EdgeWeight` of the channel
        """
        if self._weight is None:
            self._weight = self._channel.weight()
        return self._weight

    def reindexed(self, index):
        return Edge(self._u, self._v, self._channel, index)

    def to_dict(self):
        return {"u": self._u, "v": self._v, "channel": self._channel.to_dict()}

    def __eq__(self, other):
        if not isinstance(other, Edge):
            return NotImplemented
        return (self._index, self._u, self._v, self._channel) == (other.index, other.u, other.v, other.channel)

    def __hash__(self):
        return hash((self._index, self._u, self._v, self._channel))

    def __repr__(self):
        return f"Edge {self._index}: {self._u} -- {self._v} {self._channel.label()}"


class QuantumNetwork(object):
    """
    Construct a quantum network

    INPUT:

    - ``nodes`` -- node names in document order
    - ``senders`` -- names of the senders `a_i`
    - ``receivers`` -- names of the receivers `b_j`
    - ``edges`` -- a list of :class:`Edge` or ``(u, v, channel)`` triples; parallel edges are allowed
    - ``validate`` -- raise :class:`~qnet.errors.ValidationError` on invariant violations (default: True)

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork
        >>> net = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
        ...                      [("a", "r", {"kind": "pure_loss", "eta": 0.5}),
        ...                       ("r", "b", {"kind": "ideal"})])
        >>> net
        Quantum network with 3 nodes, 2 edges, 1 sender and 1 receiver
        >>> net.free_nodes
        ('r',)

    TESTS::

        >>> QuantumNetwork(["a", "b"], ["a"], ["a", "b"], [])
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: senders and receivers must be disjoint
        >>> QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "a", {"kind": "ideal"})])
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: /edges/0: self-loop on node 'a'
    """
    def __init__(self, nodes, senders, receivers, edges, validate=True):
        self._nodes = tuple(nodes)
        self._senders = tuple(senders)
        self._receivers = tuple(receivers)

        normalized = []
        for index, edge in enumerate(edges):
            if isinstance(edge, Edge):
                normalized.append(edge if edge.index == index else edge.reindexed(index))
            else:
                u, v, channel = edge
                normalized.append(Edge(u, v, channel, index))
        self._edges = tuple(normalized)
        self._graph = None

        if validate:
            diagnostics = validate_network(self)
            if diagnostics.errors:
                raise ValidationError(diagnostics.errors)

    @property
    def nodes(self):
        return self._nodes

    @property
    def senders(self):
        return self._senders

    @property
    def receivers(self):
        return self._receivers

    @property
    def edges(self):
        return self._edges

    @property
    def free_nodes(self):
        """
        Return the nodes that are neither senders nor receivers, in document order
        """
        terminals = set(self._senders) | set(self._receivers)
        return tuple(node for node in self._nodes if node not in terminals)

    @property
    def graph(self):
        """
        Return the network as a ``networkx.MultiGraph``; edge keys are edge indices

        Edges whose endpoints are not nodes of the network are left out.

        EXAMPLES::

            >>> from qnet.network import QuantumNetwork
            >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"],
            ...                      [("a", "b", {"kind": "ideal"}), ("a", "b", {"kind": "custom", "w": 0.5})])
            >>> net.graph.number_of_edges("a", "b")
            2
        """
        if self._graph is None:
            graph = nx.MultiGraph()
            graph.add_nodes_from(self._nodes)
            known = set(self._nodes)
            for edge in self._edges:
                if edge.u in known and edge.v in known:
                    graph.add_edge(edge.u, edge.v, key=edge.index, channel=edge.channel)
            self._graph = graph
        return self._graph

    def weights(self):
        """
        Return the list of :class:`~qnet.channels.EdgeWeight`, one per edge
        """
        return [edge.weight() for edge in self._edges]

    def is_distillable(self):
        """
        Return ``True`` if every edge carries a distillable channel

        EXAMPLES::

            >>> from qnet.network import QuantumNetwork
            >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
            >>> net.is_distillable()
            True
            >>> net.add_edge("a", "b", {"kind": "custom", "w": 0.1}).is_distillable()
            False
        """
        return all(edge.channel.distillable for edge in self._edges)

    def with_senders(self, senders):
        """
        Return the same network with another sender set; former senders become free nodes
        """
        return QuantumNetwork(self._nodes, senders, self._receivers, self._edges)

    def add_edge(self, u, v, channel):
        """
        Return a copy of the network with one more edge
        """
        return QuantumNetwork(self._nodes, self._senders, self._receivers, self._edges + ((u, v, channel),))

    def remove_edge(self, index):
        """
        Return a copy of the network without the edge at ``index``; later edges are re-indexed
        """
        if not 0 <= index < len(self._edges):
            raise UsageError(f"no edge with index {index}")
        edges = self._edges[:index] + self._edges[index + 1:]
        return QuantumNetwork(self._nodes, self._senders, self._receivers, edges)

    def replace_edge(self, index, channel):
        """
        Return a copy of the network where the edge at ``index`` carries ``channel``
        """
        if not 0 <= index < len(self._edges):
            raise UsageError(f"no edge with index {index}")
        edge = self._edges[index]
        edges = list(self._edges)
        edges[index] = (edge.u, edge.v, channel)
        return QuantumNetwork(self._nodes, self._senders, self._receivers, edges)

    def to_dict(self):
        return {"nodes": list(self._nodes),
                "senders": list(self._senders),
                "receivers": list(self._receivers),
                "edges": [edge.to_dict() for edge in self._edges]}

    def __eq__(self, other):
        if not isinstance(other, QuantumNetwork):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(serialize_network(self))

    def __repr__(self):
        def count(n, noun):
            return f"{n} {noun}" if n == 1 else f"{n} {noun}s"
        return (f"Quantum network with {count(len(self._nodes), 'node')}, {count(len(self._edges), 'edge')}, "
                f"{count(len(self._senders), 'sender')} and {count(len(self._receivers), 'receiver')}")


class Diagnostics(object):
    """
    Errors and warnings found by :func:`validate_network`

    EXAMPLES::

        >>> from qnet.network import Diagnostics
        >>> d = Diagnostics(errors=[], warnings=["node 'z' is isolated"])
        >>> d.ok
        True
        >>> d
        Diagnostics with 0 errors and 1 warning
    """
    def __init__(self, errors=None, warnings=None):
        self._errors = list(errors or [])
        self._warnings = list(warnings or [])

    @property
    def errors(self):
        return list(self._errors)

    @property
    def warnings(self):
        return list(self._warnings)

    @property
    def ok(self):
        return not self._errors

    def to_dict(self):
        return {"errors": self.errors, "warnings": self.warnings}

    def __repr__(self):
        errors = "error" if len(self._errors) == 1 else "errors"
        warnings = "warning" if len(self._warnings) == 1 else "warnings"
        return f"Diagnostics with {len(self._errors)} {errors} and {len(self._warnings)} {warnings}"


def _duplicates(names):
    seen, repeated = set(), []
    for name in names:
        if name in seen and name not in repeated:
            repeated.append(name)
        seen.add(name)
    return repeated


def validate_network(net):
    """
    Return the :class:`Diagnostics` of a network

    Errors report invariant violations. Warnings report isolated nodes and receivers that no sender
    can reach; when no receiver is reachable the bound is zero.

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork, validate_network
        >>> net = QuantumNetwork(["a", "x", "b", "y"], ["a"], ["b"],
        ...                      [("a", "x", {"kind": "ideal"}), ("b", "y", {"kind": "ideal"})], validate=False)
        >>> validate_network(net).warnings
        ["receiver 'b' is unreachable from every sender", 'senders and receivers are disconnected: the bound is trivially zero']
        >>> net = QuantumNetwork(["a", "b", "a"], ["a"], ["b"], [], validate=False)
        >>> validate_network(net).errors
        ["duplicate node name 'a'"]
    """
    errors, warnings = [], []
    node_set = set(net.nodes)

    for name in _duplicates(net.nodes):
        errors.append(f"duplicate node name {name!r}")
    for field, names in (("sender", net.senders), ("receiver", net.receivers)):
        if not names:
            errors.append(f"at least one {field} is required")
        for name in _duplicates(names):
            errors.append(f"duplicate {field} {name!r}")
        for name in names:
            if name not in node_set:
                errors.append(f"{field} {name!r} is not a node")
    if set(net.senders) & set(net.receivers):
        errors.append("senders and receivers must be disjoint")

    for edge in net.edges:
        position = f"/edges/{edge.index}"
        for endpoint in edge.endpoints():
            if endpoint not in node_set:
                errors.append(f"{position}: unknown node {endpoint!r}")
        if edge.u == edge.v:
            errors.append(f"{position}: self-loop on node {edge.u!r}")
        for message in edge.channel.validate():
            errors.append(f"{position}/channel: {message}")

    graph = net.graph
    for node in nx.isolates(graph):
        warnings.append(f"node {node!r} is isolated")

    reachable = set()
    for sender in net.senders:
        if sender in graph and sender not in reachable:
            reachable |= nx.node_connected_component(graph, sender)
    unreachable = [b for b in net.receivers if b not in reachable]
    for receiver in unreachable:
        warnings.append(f"receiver {receiver!r} is unreachable from every sender")
    if net.receivers and len(unreachable) == len(net.receivers):
        warnings.append("senders and receivers are disconnected: the bound is trivially zero")

    return Diagnostics(errors, warnings)


def _field(d, name, position):
    if name not in d:
        raise ValidationError(f"missing field {name!r}", position=position or "/")
    return d[name]


def _names(value, position):
    if not isinstance(value, list):
        raise ValidationError("expected a list of node names", position=position)
    for i, name in enumerate(value):
        if not isinstance(name, str):
            raise ValidationError("a node name must be a string", position=f"{position}/{i}")
    return value


def parse_network(text):
    """
    Return the :class:`QuantumNetwork` described by a UTF-8 JSON document

    INPUT:

    - ``text`` -- ``bytes`` or ``str``

    EXAMPLES::

        >>> from qnet.network import parse_network
        >>> doc = '''{"nodes": ["a", "b"], "senders": ["a"], "receivers": ["b"],
        ...           "edges": [{"u": "a", "v": "b", "channel": {"kind": "pure_loss", "eta": 0.5}}]}'''
        >>> parse_network(doc)
        Quantum network with 2 nodes, 1 edge, 1 sender and 1 receiver

    TESTS::

        >>> parse_network('{"nodes": ["a", "b"], "senders": ["a"], "receivers": ["a"], "edges": []}')
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: senders and receivers must be disjoint
        >>> parse_network('{"nodes": ["a", "b"], "senders": ["a"], "receivers": ["b"], "edges": [], "name": "x"}')
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: /name: unknown field 'name'
        >>> parse_network('{"nodes": ["a", "b"], "senders": ["a"], "receivers": ["b"], "edges": [{"u": "a", "v": "b", '
        ...               '"channel": {"kind": "pure_loss", "eta": 1.5}}]}')
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: /edges/0/channel: η must lie in (0,1)
        >>> parse_network(b'{"nodes": [')
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: line 1 column 12: malformed JSON: Expecting value
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ValidationError("input is not valid UTF-8", position=f"byte {e.start}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"malformed JSON: {e.msg}", position=f"line {e.lineno} column {e.colno}") from e

    if not isinstance(doc, dict):
        raise ValidationError("a network document must be a JSON object", position="/")
    for name in doc:
        if name not in NETWORK_FIELDS:
            raise ValidationError(f"unknown field {name!r}", position=f"/{name}")

    nodes = _names(_field(doc, "nodes", ""), "/nodes")
    senders = _names(_field(doc, "senders", ""), "/senders")
    receivers = _names(_field(doc, "receivers", ""), "/receivers")
    raw_edges = _field(doc, "edges", "")
    if not isinstance(raw_edges, list):
        raise ValidationError("expected a list of edges", position="/edges")

    edges = []
    for index, raw in enumerate(raw_edges):
        position = f"/edges/{index}"
        if not isinstance(raw, dict):
            raise ValidationError("an edge must be a JSON object", position=position)
        for name in raw:
            if name not in EDGE_FIELDS:
                raise ValidationError(f"unknown field {name!r}", position=f"{position}/{name}")
        u, v = _field(raw, "u", position), _field(raw, "v", position)
        for name, endpoint in (("u", u), ("v", v)):
            if not isinstance(endpoint, str):
                raise ValidationError("a node name must be a string", position=f"{position}/{name}")
        channel = channel_from_dict(_field(raw, "channel", position), position=f"{position}/channel")
        edges.append(Edge(u, v, channel, index))

    return QuantumNetwork(nodes, senders, receivers, edges)


def serialize_network(net):
    """
    Return the canonical JSON form of a network

    Keys come in the order nodes, senders, receivers, edges; every channel lists ``kind`` first.

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork, serialize_network
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
        >>> serialize_network(net)
        '{"nodes":["a","b"],"senders":["a"],"receivers":["b"],"edges":[{"u":"a","v":"b","channel":{"kind":"pure_loss","eta":0.5}}]}'
    """
    return json.dumps(net.to_dict(), separators=(",", ":"), ensure_ascii=False)


class Cut(object):
    """
    Construct a bipartition `(A, B)` of the nodes of a network

    Use :meth:`from_side_a` to build a cut checked against a network.

    INPUT:

    - ``side_a`` -- the nodes on the sender side, in document order
    - ``side_b`` -- the remaining nodes, in document order

    EXAMPLES::

        >>> from qnet.network import Cut
        >>> Cut(["a", "x"], ["y", "b"])
        Cut {a, x} | {y, b}
    """
    def __init__(self, side_a, side_b):
        self._side_a = tuple(side_a)
        self._side_b = tuple(side_b)

    @classmethod
    def from_side_a(cls, net, side_a):
        """
        Return the cut of ``net`` whose sender side is ``side_a``

        EXAMPLES::

            >>> from qnet.network import Cut, QuantumNetwork
            >>> net = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
            ...                      [("a", "r", {"kind": "ideal"}), ("r", "b", {"kind": "ideal"})])
            >>> Cut.from_side_a(net, {"r", "a"})
            Cut {a, r} | {b}

        TESTS::

            >>> Cut.from_side_a(net, {"r"})
            Traceback (most recent call last):
            ...
            qnet.errors.UsageError: invalid cut: sender 'a' is not on side A
        """
        side_a = set(side_a)
        cut = cls([node for node in net.nodes if node in side_a], [node for node in net.nodes if node not in side_a])
        unknown = side_a - set(net.nodes)
        if unknown:
            raise UsageError(f"invalid cut: unknown node {sorted(unknown)[0]!r}")
        _check_cut(net, cut)
        return cut

    @property
    def side_a(self):
        return self._side_a

    @property
    def side_b(self):
        return self._side_b

    def key(self):
        """
        Return the sorted sender-side names, the tie-break key among cuts of equal flow
        """
        return tuple(sorted(self._side_a))

    def __eq__(self, other):
        if not isinstance(other, Cut):
            return NotImplemented
        return (frozenset(self._side_a), frozenset(self._side_b)) == (frozenset(other.side_a),
                                                                      frozenset(other.side_b))

    def __hash__(self):
        return hash((frozenset(self._side_a), frozenset(self._side_b)))

    def __repr__(self):
        return f"Cut {{{', '.join(self._side_a)}}} | {{{', '.join(self._side_b)}}}"


def _check_cut(net, cut):
    side_a, side_b = set(cut.side_a), set(cut.side_b)
    if side_a & side_b or side_a | side_b != set(net.nodes):
        raise UsageError("invalid cut: the two sides must partition the nodes")
    for sender in net.senders:
        if sender not in side_a:
            raise UsageError(f"invalid cut: sender {sender!r} is not on side A")
    for receiver in net.receivers:
        if receiver not in side_b:
            raise UsageError(f"invalid cut: receiver {receiver!r} is not on side B")


def cut_set(net, cut):
    """
    Return the edges with one endpoint on each side of ``cut``, in edge order

    EXAMPLES::

        >>> from qnet.network import Cut, QuantumNetwork, cut_set
        >>> net = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
        ...                      [("a", "r", {"kind": "ideal"}), ("r", "b", {"kind": "ideal"})])
        >>> cut_set(net, Cut.from_side_a(net, ["a"]))
        [Edge 0: a -- r ideal()]
        >>> cut_set(net, Cut.from_side_a(net, ["a", "r"]))
        [Edge 1: r -- b ideal()]
    """
    _check_cut(net, cut)
    side_a = set(cut.side_a)
    return [edge for edge in net.edges if (edge.u in side_a) != (edge.v in side_a)]


def multi_edge_ree_flow(net, cut):
    """
    Return the multi-edge REE flow through ``cut``: the saturating sum of the cut-set weights

    EXAMPLES::

        >>> from qnet.network import Cut, QuantumNetwork, multi_edge_ree_flow
        >>> net = QuantumNetwork(["a", "b", "c"], ["a"], ["b"],
        ...                      [("a", "c", {"kind": "pure_loss", "eta": 0.5})])
        >>> multi_edge_ree_flow(net, Cut.from_side_a(net, ["a"]))
        1.0
        >>> multi_edge_ree_flow(net, Cut.from_side_a(net, ["a", "c"]))
        0.0
    """
    return saturating_sum(edge.weight().value for edge in cut_set(net, cut))


class CutWitness(object):
    """
    Construct the certificate of a cut: its cut-set and multi-edge REE flow

    EXAMPLES::

        >>> from qnet.network import Cut, QuantumNetwork, make_witness
        >>> net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
        >>> w = make_witness(net, Cut.from_side_a(net, ["a"]))
        >>> w
        Cut {a} | {b} with flow 1.0 over 1 edge
        >>> w.to_dict()
        {'side_a': ['a'], 'cut_set': [{'u': 'a', 'v': 'b', 'index': 0, 'weight': 1.0}], 'flow_value': 1.0}
    """
    def __init__(self, cut, cut_set, flow_value):
        self._cut = cut
        self._cut_set = tuple(cut_set)
        self._flow_value = float(flow_value)

    @property
    def cut(self):
        return self._cut

    @property
    def cut_set(self):
        return self._cut_set

    @property
    def flow_value(self):
        return self._flow_value

    def to_dict(self, digits=12):
        return {"side_a": list(self._cut.side_a),
                "cut_set": [{"u": edge.u, "v": edge.v, "index": edge.index,
                             "weight": json_number(edge.weight().value, digits)} for edge in self._cut_set],
                "flow_value": json_number(self._flow_value, digits)}

    def __eq__(self, other):
        if not isinstance(other, CutWitness):
            return NotImplemented
        return (self._cut, self._cut_set, self._flow_value) == (other.cut, other.cut_set, other.flow_value)

    def __hash__(self):
        return hash((self._cut, self._cut_set, self._flow_value))

    def __repr__(self):
        n = len(self._cut_set)
        return f"{self._cut!r} with flow {self._flow_value} over {n} {'edge' if n == 1 else 'edges'}"


def make_witness(net, cut):
    """
    Return the :class:`CutWitness` of ``cut``
    """
    edges = cut_set(net, cut)
    return CutWitness(cut, edges, saturating_sum(edge.weight().value for edge in edges))


def cut_from_counter(net, counter):
    """
    Return the cut whose free nodes on side A are the set bits of ``counter``

    Bit `i` stands for the `i`-th free node in document order.
    """
    free = net.free_nodes
    chosen = {free[i] for i in range(len(free)) if counter >> i & 1}
    side_a = set(net.senders) | chosen
    return Cut([node for node in net.nodes if node in side_a], [node for node in net.nodes if node not in side_a])


def enumerate_cuts(net, limit=None):
    """
    Return an iterator over every valid cut of ``net``

    Senders stay on side A, receivers on side B, and the free nodes are assigned in binary-counter
    order, so ``2^k`` cuts are produced for ``k`` free nodes.

    INPUT:

    - ``net`` -- a :class:`QuantumNetwork`
    - ``limit`` -- largest admissible number of free nodes (default: ``QNET_MAX_FREE_NODES`` or 22)

    EXAMPLES::

        >>> from qnet.network import QuantumNetwork, enumerate_cuts
        >>> net = QuantumNetwork(["a", "r", "b"], ["a"], ["b"],
        ...                      [("a", "r", {"kind": "ideal"}), ("r", "b", {"kind": "ideal"})])
        >>> list(enumerate_cuts(net))
        [Cut {a} | {r, b}, Cut {a, r} | {b}]

    TESTS::

        >>> list(enumerate_cuts(net, limit=0))
        Traceback (most recent call last):
        ...
        qnet.errors.CapacityError: 1 free nodes exceed the enumeration limit of 0; use the max-flow method
    """
    if limit is None:
        limit = max_free_nodes()
    k = len(net.free_nodes)
    if k > limit:
        raise CapacityError(f"{k} free nodes exceed the enumeration limit of {limit}; use the max-flow method")
    return (cut_from_counter(net, counter) for counter in range(2 ** k))


def check_weights(net):
    """
    Raise :class:`~qnet.errors.DomainError` naming the first edge whose channel has no valid weight
    """
    for edge in net.edges:
        try:
            edge.weight()
        except DomainError as e:
            raise DomainError(f"/edges/{edge.index}/channel: {e}") from e
