import math

import numpy as np
import pytest

from qnet.errors import CapacityError, UsageError, ValidationError
from qnet.network import (Cut, QuantumNetwork, cut_set, enumerate_cuts, make_witness, multi_edge_ree_flow,
                          parse_network, serialize_network, validate_network)


def chain(k):
    nodes = ["a"] + [f"r{i}" for i in range(k)] + ["b"]
    edges = [(u, v, {"kind": "ideal"}) for u, v in zip(nodes, nodes[1:])]
    return QuantumNetwork(nodes, ["a"], ["b"], edges)


def test_parse_fixture(load_network):
    net = load_network("mixed")
    assert net.nodes == ("a", "r", "b1", "b2")
    assert net.senders == ("a",)
    assert net.receivers == ("b1", "b2")
    assert [edge.index for edge in net.edges] == [0, 1, 2, 3]
    assert net.free_nodes == ("r",)
    assert not net.is_distillable()


def test_serialization_round_trip(load_network):
    for name in ("single_edge", "star", "diamond", "mixed", "two_senders"):
        net = load_network(name)
        text = serialize_network(net)
        assert parse_network(text) == net
        assert serialize_network(parse_network(text.encode("utf-8"))) == text


@pytest.mark.parametrize("text, message", [
    (b"\xff\xfe", "input is not valid UTF-8"),
    ('{"nodes": ["a", "b"], "senders": ["a"], "receivers": ["b"]}', "missing field 'edges'"),
    ('{"nodes": ["a", 1], "senders": ["a"], "receivers": ["b"], "edges": []}', "a node name must be a string"),
    ('[]', "a network document must be a JSON object"),
    ('{"nodes": ["a", "b"], "senders": ["a"], "receivers": ["b"], '
     '"edges": [{"u": "a", "v": "b", "w": 1, "channel": {"kind": "ideal"}}]}', "/edges/0/w: unknown field 'w'"),
    ('{"nodes": ["a", "b"], "senders": ["a"], "receivers": ["b"], '
     '"edges": [{"u": "a", "v": "c", "channel": {"kind": "ideal"}}]}', "/edges/0: unknown node 'c'"),
    ('{"nodes": ["a", "b"], "senders": [], "receivers": ["b"], "edges": []}', "at least one sender is required"),
])
def test_parse_errors(text, message):
    with pytest.raises(ValidationError) as e:
        parse_network(text)
    assert message in str(e.value)


def test_validation_error_lists_every_problem():
    with pytest.raises(ValidationError) as e:
        QuantumNetwork(["a", "b"], ["a", "c"], ["b"], [("a", "b", {"kind": "erasure", "p": 2.0})])
    assert e.value.errors == ["sender 'c' is not a node", "/edges/0/channel: p must lie in [0,1]"]


def test_diagnostics(load_network):
    assert validate_network(load_network("star")).warnings == []
    diagnostics = validate_network(load_network("disconnected"))
    assert diagnostics.ok
    assert "senders and receivers are disconnected: the bound is trivially zero" in diagnostics.warnings

    net = QuantumNetwork(["a", "z", "b"], ["a"], ["b"], [("a", "b", {"kind": "ideal"})])
    assert validate_network(net).warnings == ["node 'z' is isolated"]


def test_graph_keeps_parallel_edges(load_network):
    graph = load_network("mixed").graph
    assert graph.number_of_edges("r", "b2") == 2
    assert graph.number_of_edges("b2", "r") == 2


def test_cut_set_examples(load_network):
    diamond = load_network("diamond")
    assert [edge.index for edge in cut_set(diamond, Cut.from_side_a(diamond, ["a"]))] == [0, 1]
    assert [edge.index for edge in cut_set(diamond, Cut.from_side_a(diamond, ["a", "x"]))] == [1, 2]
    assert [edge.index for edge in cut_set(diamond, Cut.from_side_a(diamond, ["a", "x", "y"]))] == [2, 3]

    mixed = load_network("mixed")
    witness = make_witness(mixed, Cut.from_side_a(mixed, ["a", "r"]))
    assert [edge.index for edge in witness.cut_set] == [1, 2, 3]
    assert witness.flow_value == math.inf
    witness = make_witness(mixed, Cut.from_side_a(mixed, ["a"]))
    assert [edge.index for edge in witness.cut_set] == [0]
    assert witness.flow_value == pytest.approx(2.0)


def test_invalid_cuts(load_network):
    net = load_network("diamond")
    with pytest.raises(UsageError, match="receiver 'b' is not on side B"):
        Cut.from_side_a(net, ["a", "b"])
    with pytest.raises(UsageError, match="unknown node 'q'"):
        Cut.from_side_a(net, ["a", "q"])
    with pytest.raises(UsageError, match="partition"):
        cut_set(net, Cut(["a"], ["b"]))


def test_flow_is_undirected():
    forward = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": 0.5})])
    backward = QuantumNetwork(["a", "b"], ["a"], ["b"], [("b", "a", {"kind": "pure_loss", "eta": 0.5})])
    assert multi_edge_ree_flow(forward, Cut.from_side_a(forward, ["a"])) == 1.0
    assert multi_edge_ree_flow(backward, Cut.from_side_a(backward, ["a"])) == 1.0


@pytest.mark.parametrize("name", ["diamond", "mixed", "star"])
def test_cut_set_ignores_which_side_is_which(load_network, name):
    net = load_network(name)
    mirrored = QuantumNetwork(net.nodes, net.receivers, net.senders, net.edges)
    for cut in enumerate_cuts(net):
        swapped = Cut(cut.side_b, cut.side_a)
        forward = [edge.index for edge in cut_set(net, cut)]
        backward = [edge.index for edge in cut_set(mirrored, swapped)]
        assert forward == backward
        assert multi_edge_ree_flow(net, cut) == multi_edge_ree_flow(mirrored, swapped)


def test_infinite_flow_saturates(load_network):
    net = load_network("star")
    assert multi_edge_ree_flow(net, Cut.from_side_a(net, ["a", "r"])) == math.inf


@pytest.mark.parametrize("k", [0, 1, 2, 5, 12])
def test_enumeration_counts(k):
    cuts = list(enumerate_cuts(chain(k)))
    assert len(cuts) == 2 ** k
    assert len({cut.key() for cut in cuts}) == 2 ** k
    assert all(cut.side_a[0] == "a" and cut.side_b[-1] == "b" for cut in cuts)


def test_enumeration_counts_of_fixtures(load_network):
    assert len(list(enumerate_cuts(load_network("single_edge")))) == 1
    assert len(list(enumerate_cuts(load_network("mixed")))) == 2
    assert len(list(enumerate_cuts(load_network("diamond")))) == 4


def test_enumeration_limit(monkeypatch):
    with pytest.raises(CapacityError, match="3 free nodes exceed the enumeration limit of 2"):
        enumerate_cuts(chain(3), limit=2)
    monkeypatch.setenv("QNET_MAX_FREE_NODES", "1")
    with pytest.raises(CapacityError):
        enumerate_cuts(chain(2))


def test_adding_an_edge_never_decreases_a_flow(random_networks):
    rng = np.random.default_rng(31)
    for net in random_networks(50, seed=31, max_nodes=8):
        u, v = rng.choice(len(net.nodes), size=2, replace=False)
        bigger = net.add_edge(net.nodes[u], net.nodes[v], {"kind": "custom", "w": float(rng.uniform(0, 2))})
        for cut in enumerate_cuts(net):
            assert multi_edge_ree_flow(bigger, cut) >= multi_edge_ree_flow(net, cut)


def test_edit_operations(load_network):
    net = load_network("diamond")
    smaller = net.remove_edge(0)
    assert [edge.index for edge in smaller.edges] == [0, 1, 2]
    assert smaller.edges[0].endpoints() == ("a", "y")
    replaced = net.replace_edge(3, {"kind": "custom", "w": 2.0})
    assert replaced.edges[3].weight().value == 2.0
    with pytest.raises(UsageError, match="no edge with index 7"):
        net.remove_edge(7)
    assert net.with_senders(["a", "x"]).free_nodes == ("y",)
