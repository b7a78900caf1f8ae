from pathlib import Path

import numpy as np
import pytest

from qnet.network import QuantumNetwork, parse_network


FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_path():
    def path(name):
        return str(FIXTURES / f"{name}.json")
    return path


@pytest.fixture
def load_network():
    def load(name):
        return parse_network((FIXTURES / f"{name}.json").read_bytes())
    return load


def random_channel(rng):
    kind = rng.choice(["pure_loss", "qlim_amp", "dephasing", "erasure", "pauli", "custom"])
    if kind == "pure_loss":
        return {"kind": kind, "eta": float(rng.uniform(0.01, 0.99))}
    if kind == "qlim_amp":
        return {"kind": kind, "g": float(rng.uniform(1.1, 10.0))}
    if kind in ("dephasing", "erasure"):
        return {"kind": kind, "p": float(rng.uniform(0.0, 1.0))}
    if kind == "pauli":
        probs = rng.dirichlet(np.ones(4))
        return {"kind": kind, "probs": [float(p) for p in probs]}
    return {"kind": kind, "w": float(rng.uniform(0.0, 3.0))}


def make_random_network(rng, max_nodes=12, max_edges=30, nsenders=None, nreceivers=None):
    nsenders = nsenders or int(rng.integers(1, 4))
    nreceivers = nreceivers or int(rng.integers(1, 4))
    nnodes = int(rng.integers(nsenders + nreceivers, max_nodes + 1))
    nodes = [f"n{i}" for i in range(nnodes)]
    order = rng.permutation(nnodes)
    senders = [nodes[i] for i in order[:nsenders]]
    receivers = [nodes[i] for i in order[nsenders:nsenders + nreceivers]]

    edges = []
    for _ in range(int(rng.integers(1, max_edges + 1))):
        u, v = rng.choice(nnodes, size=2, replace=False)
        edges.append((nodes[u], nodes[v], random_channel(rng)))
    return QuantumNetwork(nodes, senders, receivers, edges)


@pytest.fixture
def random_networks():
    def networks(count, seed=2024, **kwargs):
        rng = np.random.default_rng(seed)
        return [make_random_network(rng, **kwargs) for _ in range(count)]
    return networks
