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
Catalog of channel models and their REE edge weights
"""
import math

from ..errors import DomainError, ValidationError
from .base import BaseChannel, EdgeWeight, PROVENANCES
from .pure_loss import PureLoss
from .amplifier import QuantumLimitedAmplifier
from .dephasing import Dephasing
from .erasure import Erasure
from .pauli import Pauli
from .ideal import Ideal
from .custom import Custom
from .kraus import AmplitudeDamping, KrausOperators


CHANNEL_KINDS = {Channel.kind: Channel for Channel in (PureLoss, QuantumLimitedAmplifier, Dephasing, Erasure,
                                                        Pauli, Ideal, Custom, AmplitudeDamping, KrausOperators)}
EDGE_KINDS = tuple(kind for kind, Channel in CHANNEL_KINDS.items() if Channel.edge_kind)


def _number(value, position):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError("expected a number", position=position)
    value = float(value)
    if math.isnan(value):
        raise ValidationError("expected a number", position=position)
    return value


def _parameter(name, value, position):
    if name == "probs":
        if not isinstance(value, list):
            raise ValidationError("expected a list of numbers", position=position)
        return tuple(_number(v, f"{position}/{i}") for i, v in enumerate(value))
    if name == "operators":
        if not isinstance(value, list):
            raise ValidationError("expected a list of matrices", position=position)
        return value
    return _number(value, position)


def channel_from_dict(d, position="", edge=True):
    """
    Return the channel described by the JSON object ``d``

    INPUT:

    - ``d`` -- a dictionary with a ``kind`` key and the kind-specific parameters
    - ``position`` -- JSON-pointer of ``d`` inside its document, used in error messages (default: "")
    - ``edge`` -- if ``True`` only the kinds allowed on network edges are accepted (default: True)

    EXAMPLES::

        >>> from qnet.channels import channel_from_dict
        >>> channel_from_dict({"kind": "pure_loss", "eta": 0.75})
        Channel pure_loss(0.75)
        >>> channel_from_dict({"kind": "amplitude_damping", "gamma": 0.5}, edge=False)
        Channel amplitude_damping(0.5)

    TESTS::

        >>> channel_from_dict({"kind": "thermal_loss", "eta": 0.5}, position="/edges/0/channel")
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: /edges/0/channel/kind: unknown channel kind 'thermal_loss'
        >>> channel_from_dict({"kind": "amplitude_damping", "gamma": 0.5})
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: /kind: channel kind 'amplitude_damping' is not allowed on network edges
        >>> channel_from_dict({"kind": "pure_loss", "eta": 0.5, "nbar": 0.1})
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: /nbar: unknown field 'nbar'
        >>> channel_from_dict({"kind": "dephasing", "p": True})
        Traceback (most recent call last):
        ...
        qnet.errors.ValidationError: /p: expected a number
    """
    if not isinstance(d, dict):
        raise ValidationError("a channel must be a JSON object", position=position or None)
    kind = d.get("kind")
    if not isinstance(kind, str):
        raise ValidationError("missing channel kind", position=f"{position}/kind")
    if kind not in CHANNEL_KINDS:
        raise ValidationError(f"unknown channel kind {kind!r}", position=f"{position}/kind")

    Channel = CHANNEL_KINDS[kind]
    if edge and not Channel.edge_kind:
        raise ValidationError(f"channel kind {kind!r} is not allowed on network edges", position=f"{position}/kind")

    params = {}
    for name, value in d.items():
        if name == "kind":
            continue
        if name not in Channel.parameter_names:
            raise ValidationError(f"unknown field {name!r}", position=f"{position}/{name}")
        params[name] = _parameter(name, value, f"{position}/{name}")
    return Channel(**params)


def _as_channel(desc):
    if isinstance(desc, BaseChannel):
        return desc
    return channel_from_dict(desc, edge=False)


def validate(desc):
    """
    Return the list of problems with a channel descriptor; an empty list means it is valid

    INPUT:

    - ``desc`` -- a :class:`BaseChannel` or its JSON object

    EXAMPLES::

        >>> from qnet.channels import validate
        >>> validate({"kind": "pure_loss", "eta": 0.5})
        []
        >>> validate({"kind": "pure_loss", "eta": 1.0})
        ['η must lie in (0,1)']
        >>> validate({"kind": "pauli", "probs": [0.5, 0.5, 0.1, 0]})
        ['probabilities must sum to 1']
        >>> validate({"kind": "pure_loss"})
        ["missing parameter 'eta'"]
        >>> validate({"kind": "squeezer"})
        ["/kind: unknown channel kind 'squeezer'"]
    """
    try:
        channel = _as_channel(desc)
    except ValidationError as e:
        return [str(e)]
    return channel.validate()


def edge_weight(desc):
    """
    Return the :class:`EdgeWeight` of a channel descriptor

    EXAMPLES::

        >>> from qnet.channels import edge_weight
        >>> edge_weight({"kind": "pure_loss", "eta": 0.5})
        EdgeWeight(1.0, distillable, closed_form_paper)
        >>> edge_weight({"kind": "erasure", "p": 1.0}).value
        0.0
        >>> edge_weight({"kind": "ideal"}).value
        inf

    TESTS::

        >>> edge_weight({"kind": "dephasing", "p": 1.5})
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: p must lie in [0,1]
    """
    try:
        channel = _as_channel(desc)
    except ValidationError as e:
        raise DomainError(str(e)) from e
    return channel.weight()


def kraus_of(desc):
    """
    Return a :class:`~qnet.quantum.kraus.KrausChannel` realising a discrete-variable channel

    EXAMPLES::

        >>> from qnet.channels import kraus_of
        >>> from qnet.quantum.states import BellDiagonalSpectrum
        >>> BellDiagonalSpectrum.from_state(kraus_of({"kind": "dephasing", "p": 0.25}).choi_matrix())
        Bell-diagonal spectrum (0.75, 0.0, 0.0, 0.25)
        >>> kraus_of({"kind": "ideal"})
        Quantum channel with 1 Kraus operator from dimension 2 to 2

    TESTS::

        >>> kraus_of({"kind": "qlim_amp", "g": 2.0})
        Traceback (most recent call last):
        ...
        qnet.errors.UnsupportedChannelError: no finite-dimensional Kraus realisation for kind 'qlim_amp'
    """
    channel = _as_channel(desc)
    errors = channel.validate()
    if errors:
        raise DomainError("; ".join(errors))
    return channel.kraus()
