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


import math

from ..errors import DomainError, UnsupportedChannelError


PROVENANCES = ("closed_form_paper", "closed_form_literature", "custom")


class EdgeWeight(object):
    """
    Construct the REE weight carried by an edge, in bits per network use

    INPUT:

    - ``value`` -- non-negative float, possibly ``math.inf``
    - ``distillable`` -- ``True`` if the weight is also the secret-key capacity of the channel
    - ``provenance`` -- one of ``closed_form_paper``, ``closed_form_literature``, ``custom``

    EXAMPLES::

        >>> from qnet.channels.base import EdgeWeight
        >>> EdgeWeight(1.0, True, "closed_form_paper")
        EdgeWeight(1.0, distillable, closed_form_paper)

    TESTS::

        >>> EdgeWeight(-0.5, False, "custom")
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: an edge weight must be non-negative, got -0.5
        >>> EdgeWeight(0.5, False, "measured")
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: unknown provenance 'measured'
    """
    def __init__(self, value, distillable, provenance):
        value = float(value)
        if math.isnan(value) or value < 0:
            raise DomainError(f"an edge weight must be non-negative, got {value}")
        if provenance not in PROVENANCES:
            raise DomainError(f"unknown provenance {provenance!r}")
        self._value = value
        self._distillable = bool(distillable)
        self._provenance = provenance

    @property
    def value(self):
        return self._value

    @property
    def distillable(self):
        return self._distillable

    @property
    def provenance(self):
        return self._provenance

    def __eq__(self, other):
        if not isinstance(other, EdgeWeight):
            return NotImplemented
        return (self._value, self._distillable, self._provenance) == (other.value, other.distillable,
                                                                       other.provenance)

    def __hash__(self):
        return hash((self._value, self._distillable, self._provenance))

    def __repr__(self):
        flag = "distillable" if self._distillable else "not distillable"
        return f"EdgeWeight({self._value}, {flag}, {self._provenance})"


class BaseChannel(object):
    """
    Base class for the channel descriptors attached to network edges

    Subclasses declare ``kind``, the ordered ``parameter_names``, whether the channel is
    ``distillable`` and the ``provenance`` of its weight formula, and implement ``_check`` and
    ``_weight``. Channels with a finite-dimensional realisation also implement ``kraus``.

    INPUT:

    - ``**params`` -- the kind-specific parameters

    TESTS::

        >>> from qnet.channels.base import BaseChannel
        >>> BaseChannel().weight()
        Traceback (most recent call last):
        ...
        NotImplementedError
    """
    kind = None
    parameter_names = ()
    distillable = False
    provenance = "closed_form_literature"
    edge_kind = True

    def __init__(self, **params):
        self._params = {name: params[name] for name in self.parameter_names if name in params}

    def parameters(self):
        """
        Return the parameters as an ordered dictionary

        EXAMPLES::

            >>> from qnet.channels import PureLoss
            >>> PureLoss(eta=0.5).parameters()
            {'eta': 0.5}
        """
        return dict(self._params)

    def validate(self):
        """
        Return the list of violated parameter constraints (empty when the descriptor is valid)

        EXAMPLES::

            >>> from qnet.channels import PureLoss
            >>> PureLoss(eta=0.5).validate()
            []
            >>> PureLoss(eta=1.0).validate()
            ['η must lie in (0,1)']
        """
        missing = [name for name in self.parameter_names if name not in self._params]
        if missing:
            return [f"missing parameter {name!r}" for name in missing]
        return self._check()

    def is_valid(self):
        return not self.validate()

    def weight(self):
        """
        Return the :class:`EdgeWeight` of the channel

        EXAMPLES::

            >>> from qnet.channels import PureLoss
            >>> PureLoss(eta=0.5).weight()
            EdgeWeight(1.0, distillable, closed_form_paper)

        TESTS::

            >>> PureLoss(eta=0.0).weight()
            Traceback (most recent call last):
            ...
            qnet.errors.DomainError: η must lie in (0,1)
        """
        if self.kind is None:
            raise NotImplementedError
        errors = self.validate()
        if errors:
            raise DomainError("; ".join(errors))
        return EdgeWeight(self._weight(), self.distillable, self.provenance)

    def kraus(self):
        """
        Return a :class:`~qnet.quantum.kraus.KrausChannel` realising the channel

        TESTS::

            >>> from qnet.channels import PureLoss
            >>> PureLoss(eta=0.5).kraus()
            Traceback (most recent call last):
            ...
            qnet.errors.UnsupportedChannelError: no finite-dimensional Kraus realisation for kind 'pure_loss'
        """
        raise UnsupportedChannelError(f"no finite-dimensional Kraus realisation for kind {self.kind!r}")

    def label(self):
        """
        Return a short label such as ``pure_loss(0.5)``

        EXAMPLES::

            >>> from qnet.channels import Pauli, Ideal
            >>> Pauli(probs=[0.7, 0.1, 0.1, 0.1]).label()
            'pauli(0.7,0.1,0.1,0.1)'
            >>> Ideal().label()
            'ideal()'
        """
        values = []
        for value in self._params.values():
            if isinstance(value, (list, tuple)):
                values.extend(f"{v:g}" for v in value)
            else:
                values.append(f"{value:g}")
        return f"{self.kind}({','.join(values)})"

    def to_dict(self):
        """
        Return the canonical JSON object of the descriptor, ``kind`` first

        EXAMPLES::

            >>> from qnet.channels import Dephasing
            >>> Dephasing(p=0.1).to_dict()
            {'kind': 'dephasing', 'p': 0.1}
        """
        d = {"kind": self.kind}
        for name, value in self._params.items():
            d[name] = list(value) if isinstance(value, (list, tuple)) else value
        return d

    def _check(self):
        raise NotImplementedError

    def _weight(self):
        raise NotImplementedError

    def __eq__(self, other):
        if not isinstance(other, BaseChannel):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(repr(self.to_dict()))

    def __repr__(self):
        return f"Channel {self.label()}"


def check_probability(name, value):
    if not 0 <= value <= 1:
        return [f"{name} must lie in [0,1]"]
    return []
