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
Exceptions raised by the estimator

Every error derives from :class:`QNetError` and from the builtin exception that best describes it, so
callers that only know about ``ValueError`` keep working.
"""


class QNetError(Exception):
    """
    Base class of every error raised by the package
    """


class DomainError(QNetError, ValueError):
    """
    An argument lies outside the mathematical domain of an operation

    EXAMPLES::

        >>> from qnet.errors import DomainError
        >>> isinstance(DomainError("p must lie in [0, 1]"), ValueError)
        True
    """


class UsageError(QNetError, ValueError):
    """
    An operation was called with structurally incompatible arguments
    """


class ValidationError(QNetError, ValueError):
    """
    A network document or channel descriptor violates the schema or an invariant

    INPUT:

    - ``errors`` -- a message or a list of messages
    - ``position`` -- JSON-pointer of the offending value (default: None)

    EXAMPLES::

        >>> from qnet.errors import ValidationError
        >>> e = ValidationError(["eta must lie in (0, 1)"], position="/edges/0/channel/eta")
        >>> str(e)
        '/edges/0/channel/eta: eta must lie in (0, 1)'
        >>> e.errors
        ['eta must lie in (0, 1)']
    """
    def __init__(self, errors, position=None):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        self.position = position
        message = "; ".join(self.errors)
        if position is not None:
            message = f"{position}: {message}"
        super().__init__(message)


class CapacityError(QNetError, RuntimeError):
    """
    Exhaustive cut enumeration would exceed the configured free-node limit
    """


class UnsupportedChannelError(QNetError, NotImplementedError):
    """
    The requested operation is not available for this channel kind
    """
