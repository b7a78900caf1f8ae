import json
import math

import networkx as nx
import numpy as np
import pytest

from qnet.errors import CapacityError, DomainError
from qnet.network import Cut, QuantumNetwork, enumerate_cuts, multi_edge_ree_flow
from qnet.solvers import BruteForce, MaxFlow, bound_brute_force, bound_max_flow


def networkx_min_cut(net):
    graph = nx.DiGraph()
    graph.add_nodes_from(net.nodes)
    for edge in net.edges:
        w = edge.weight().value
        for u, v in ((edge.u, edge.v), (edge.v, edge.u)):
            if graph.has_edge(u, v):
                graph[u][v]["capacity"] += w
            else:
                graph.add_edge(u, v, capacity=w)
    value, _ = nx.minimum_cut(graph, net.senders[0], net.receivers[0])
    return value


def grid(rng, size=3):
    nodes = [f"g{i}{j}" for i in range(size) for j in range(size)]
    edges = []
    for i in range(size):
        for j in range(size):
            if i + 1 < size:
                edges.append((f"g{i}{j}", f"g{i + 1}{j}", {"kind": "custom", "w": float(rng.uniform(0.1, 2))}))
            if j + 1 < size:
                edges.append((f"g{i}{j}", f"g{i}{j + 1}", {"kind": "custom", "w": float(rng.uniform(0.1, 2))}))
    return QuantumNetwork(nodes, ["g00"], [f"g{size - 1}{size - 1}"], edges)


@pytest.mark.parametrize("eta", [0.1, 0.5, 0.9])
def test_single_edge_is_the_plob_bound(eta):
    net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "pure_loss", "eta": eta})])
    expected = -math.log2(1 - eta)
    for report in (bound_brute_force(net), bound_max_flow(net)):
        assert report.bound == pytest.approx(expected, abs=1e-12)
        assert report.distillable_network


def test_router_star(load_network):
    net = load_network("star")
    for Solver in (BruteForce, MaxFlow):
        witness = Solver(net).witness()
        assert witness.flow_value == pytest.approx(2.0, abs=1e-12)
        assert [(edge.u, edge.v) for edge in witness.cut_set] == [("a", "r")]


def test_diamond_has_a_unique_minimum(load_network):
    net = load_network("diamond")
    brute, flow = bound_brute_force(net), bound_max_flow(net)
    assert brute.witness.cut.side_a == ("a", "x", "y")
    assert brute.bound == pytest.approx(1.0, abs=1e-12)
    assert brute.witness == flow.witness

    a, b = brute.to_dict(), flow.to_dict()
    assert a.pop("method") == "brute_force"
    assert b.pop("method") == "max_flow"
    assert json.dumps(a) == json.dumps(b)


def test_disconnected_network_has_zero_bound(load_network):
    net = load_network("disconnected")
    assert bound_brute_force(net).bound == 0.0
    assert bound_max_flow(net).bound == 0.0


def test_infinite_bound():
    net = QuantumNetwork(["a", "b"], ["a"], ["b"], [("a", "b", {"kind": "ideal"})])
    assert bound_brute_force(net).bound == math.inf
    report = bound_max_flow(net)
    assert report.bound == math.inf
    assert report.to_dict()["bound"] == "inf"


def test_brute_force_and_max_flow_agree(random_networks):
    for net in random_networks(200, seed=2024, max_nodes=12):
        brute = BruteForce(net).witness()
        flow = MaxFlow(net).witness()
        assert abs(brute.flow_value - flow.flow_value) <= 1e-9
        assert multi_edge_ree_flow(net, flow.cut) == flow.flow_value


def test_brute_force_is_the_minimum_over_all_cuts(random_networks):
    for net in random_networks(20, seed=7, max_nodes=8):
        witness = BruteForce(net).witness()
        flows = [multi_edge_ree_flow(net, cut) for cut in enumerate_cuts(net)]
        assert min(flows) <= witness.flow_value <= min(flows) + 1e-12


def test_single_pair_matches_networkx(random_networks):
    for net in random_networks(50, seed=5, max_nodes=10, nsenders=1, nreceivers=1):
        assert bound_max_flow(net).bound == pytest.approx(networkx_min_cut(net), abs=1e-9)


def test_grid_matches_networkx():
    rng = np.random.default_rng(3)
    for _ in range(10):
        net = grid(rng)
        expected = networkx_min_cut(net)
        assert bound_brute_force(net).bound == pytest.approx(expected, abs=1e-9)
        assert bound_max_flow(net).bound == pytest.approx(expected, abs=1e-9)


def test_bound_is_monotone_in_the_edge_weights(random_networks):
    rng = np.random.default_rng(17)
    for net in random_networks(100, seed=17, max_nodes=9):
        bound = bound_brute_force(net).bound
        index = int(rng.integers(len(net.edges)))
        old = net.edges[index].weight().value

        raised = net.replace_edge(index, {"kind": "custom", "w": old + float(rng.uniform(0, 1))})
        assert bound_brute_force(raised).bound >= bound - 1e-12
        assert bound_brute_force(net.remove_edge(index)).bound <= bound + 1e-12


def test_senders_act_as_a_super_source(random_networks):
    for net in random_networks(30, seed=23, max_nodes=9):
        if len(net.senders) < 2 and len(net.receivers) < 2:
            continue
        joined = net
        for group in (net.senders, net.receivers):
            for u, v in zip(group, group[1:]):
                joined = joined.add_edge(u, v, {"kind": "ideal"})
        assert bound_brute_force(joined).bound == bound_brute_force(net).bound
        assert bound_max_flow(joined).bound == pytest.approx(bound_max_flow(net).bound, abs=1e-9)


def test_parallel_jobs_give_the_same_witness(random_networks):
    for net in random_networks(5, seed=41, max_nodes=12):
        assert BruteForce(net, jobs=2).witness() == BruteForce(net).witness()


def test_tie_break_is_lexicographic():
    edges = [("a", "x", {"kind": "custom", "w": 1.0}), ("x", "b", {"kind": "custom", "w": 1.0})]
    net = QuantumNetwork(["a", "x", "b"], ["a"], ["b"], edges)
    assert BruteForce(net).witness().cut == Cut(["a"], ["x", "b"])


def test_witness_is_cached(load_network):
    solver = BruteForce(load_network("diamond"))
    assert solver.results == {}
    assert solver.witness() is solver.witness()
    assert list(solver.results) == ["witness"]


def test_solver_errors(load_network):
    net = load_network("diamond")
    with pytest.raises(CapacityError):
        BruteForce(net, limit=1)
    with pytest.raises(DomainError, match="tolerance must be > 0"):
        MaxFlow(net, tolerance=-1)
    solver = MaxFlow(net, tolerance=1e-6)
    assert solver.network is net
    assert solver.report().tolerance == 1e-6
