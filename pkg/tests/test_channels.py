import json
import math

import numpy as np
import pytest

from qnet.channels import (CHANNEL_KINDS, EDGE_KINDS, Dephasing, Erasure, Pauli, PureLoss, QuantumLimitedAmplifier,
                           channel_from_dict, edge_weight, kraus_of, validate)
from qnet.errors import DomainError, UnsupportedChannelError, ValidationError
from qnet.quantum import (BellDiagonalSpectrum, closest_separable_bell_diagonal, is_weyl_covariant,
                          ree_bell_diagonal, ree_numeric_oracle, relative_entropy)


@pytest.mark.parametrize("eta, expected", [(0.1, 0.15200309344504997), (0.5, 1.0), (0.9, 3.321928094887362)])
def test_pure_loss_weight(eta, expected):
    weight = edge_weight({"kind": "pure_loss", "eta": eta})
    assert weight.value == pytest.approx(expected, abs=1e-9)
    assert weight.distillable
    assert weight.provenance == "closed_form_paper"


def test_catalog_weights():
    assert edge_weight({"kind": "qlim_amp", "g": 2.0}).value == pytest.approx(1.0)
    assert edge_weight({"kind": "dephasing", "p": 0.25}).value == pytest.approx(0.18872187554086717)
    assert edge_weight({"kind": "dephasing", "p": 0.75}).value == pytest.approx(0.18872187554086717)
    assert edge_weight({"kind": "erasure", "p": 1.0}).value == 0.0
    assert edge_weight({"kind": "ideal"}).value == math.inf
    assert edge_weight({"kind": "custom", "w": 0.42}).value == 0.42
    pauli = edge_weight({"kind": "pauli", "probs": [0.7, 0.1, 0.1, 0.1]})
    assert pauli.value == pytest.approx(ree_bell_diagonal([0.7, 0.1, 0.1, 0.1]))
    assert not pauli.distillable


def test_distillable_kinds():
    distillable = {kind for kind in EDGE_KINDS if CHANNEL_KINDS[kind].distillable}
    assert distillable == {"pure_loss", "qlim_amp", "dephasing", "erasure"}


@pytest.mark.parametrize("desc, message", [
    ({"kind": "pure_loss", "eta": 1.0}, "η must lie in (0,1)"),
    ({"kind": "pure_loss", "eta": 0.0}, "η must lie in (0,1)"),
    ({"kind": "qlim_amp", "g": 1.0}, "g must be greater than 1"),
    ({"kind": "dephasing", "p": -0.1}, "p must lie in [0,1]"),
    ({"kind": "pauli", "probs": [0.5, 0.5, 0.1, 0]}, "probabilities must sum to 1"),
    ({"kind": "custom", "w": -1}, "w must be a finite non-negative number"),
])
def test_validation_messages(desc, message):
    assert validate(desc) == [message]
    with pytest.raises(DomainError):
        edge_weight(desc)


def test_valid_descriptors():
    assert validate({"kind": "pure_loss", "eta": 0.5}) == []
    assert PureLoss(eta=0.5).is_valid()


def test_schema_errors():
    with pytest.raises(ValidationError, match="unknown channel kind"):
        channel_from_dict({"kind": "thermal_loss", "eta": 0.5})
    with pytest.raises(ValidationError, match="unknown field"):
        channel_from_dict({"kind": "ideal", "eta": 0.5})
    with pytest.raises(ValidationError, match="expected a number"):
        channel_from_dict({"kind": "erasure", "p": "0.5"})
    with pytest.raises(ValidationError, match="not allowed on network edges"):
        channel_from_dict({"kind": "kraus", "operators": [[[1, 0], [0, 1]]]})


def test_monotonicity_and_limits():
    etas = np.linspace(0.01, 0.99, 50)
    weights = [PureLoss(eta=eta).weight().value for eta in etas]
    assert all(a < b for a, b in zip(weights, weights[1:]))
    assert PureLoss(eta=1e-12).weight().value < 1e-10

    gains = np.linspace(1.01, 50, 50)
    weights = [QuantumLimitedAmplifier(g=g).weight().value for g in gains]
    assert all(a > b for a, b in zip(weights, weights[1:]))
    assert QuantumLimitedAmplifier(g=1e12).weight().value < 1e-10

    ps = np.linspace(0, 0.5, 50)
    weights = [Dephasing(p=p).weight().value for p in ps]
    assert all(a > b for a, b in zip(weights, weights[1:]))
    assert Dephasing(p=0.5).weight().value == 0.0

    weights = [Erasure(p=p).weight().value for p in np.linspace(0, 1, 50)]
    assert all(a > b for a, b in zip(weights, weights[1:]))


@pytest.mark.parametrize("desc", [{"kind": "pure_loss", "eta": 1e-17}, {"kind": "qlim_amp", "g": 1e20}])
def test_vanishing_weights_are_positive_zero(desc):
    value = edge_weight(desc).value
    assert value == 0.0
    assert math.copysign(1.0, value) == 1.0
    assert json.dumps(value) == "0.0"


@pytest.mark.parametrize("p", [0.1, 0.25, 0.4])
def test_dephasing_weight_is_certified(p):
    weight = edge_weight({"kind": "dephasing", "p": p}).value
    assert weight == pytest.approx(1 - (-p * math.log2(p) - (1 - p) * math.log2(1 - p)), abs=1e-12)

    choi = kraus_of({"kind": "dephasing", "p": p}).choi_matrix()
    spectrum = BellDiagonalSpectrum.from_state(choi)
    assert ree_bell_diagonal(spectrum) == pytest.approx(weight, abs=1e-9)
    assert ree_numeric_oracle(spectrum) == pytest.approx(weight, abs=1e-4)
    assert relative_entropy(choi, closest_separable_bell_diagonal(spectrum)) == pytest.approx(weight, abs=1e-9)


def test_pauli_weight_is_certified():
    rng = np.random.default_rng(11)
    for _ in range(20):
        probs = [float(p) for p in rng.dirichlet(np.ones(4))]
        channel = Pauli(probs=probs)
        spectrum = BellDiagonalSpectrum.from_state(channel.kraus().choi_matrix())
        assert ree_bell_diagonal(spectrum) == pytest.approx(channel.weight().value, abs=1e-9)
        assert ree_numeric_oracle(spectrum) == pytest.approx(channel.weight().value, abs=1e-4)


@pytest.mark.parametrize("p", [0.3, 0.5])
def test_erasure_block_identity(p):
    channel = Erasure(p=p)
    choi = channel.kraus().choi_matrix()
    assert choi.dims == (2, 3)
    assert relative_entropy(choi, channel.separable_candidate()) == pytest.approx(1 - p, abs=1e-9)


def test_kraus_realisations():
    assert np.allclose(kraus_of({"kind": "ideal"}).kraus_ops[0], np.eye(2))
    erasure = kraus_of({"kind": "erasure", "p": 0.3})
    assert (erasure.dim_in, erasure.dim_out) == (2, 3)
    for kind in ("pure_loss", "qlim_amp", "custom"):
        desc = {"kind": kind, **{name: 2.0 if name == "g" else 0.5 for name in CHANNEL_KINDS[kind].parameter_names}}
        with pytest.raises(UnsupportedChannelError):
            kraus_of(desc)


def test_covariance_only_kinds():
    damping = channel_from_dict({"kind": "amplitude_damping", "gamma": 0.5}, edge=False)
    assert not is_weyl_covariant(damping.kraus()).covariant
    y = channel_from_dict({"kind": "kraus", "operators": [[[0, [0, -1]], [[0, 1], 0]]]}, edge=False)
    assert is_weyl_covariant(y.kraus()).covariant
    with pytest.raises(UnsupportedChannelError):
        damping.weight()


def test_round_trip_of_descriptors():
    for desc in ({"kind": "pure_loss", "eta": 0.75}, {"kind": "ideal"}, {"kind": "pauli", "probs": [0.7, 0.1, 0.1, 0.1]},
                 {"kind": "custom", "w": 0.42}):
        assert channel_from_dict(desc).to_dict() == desc
