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


from ..config import DEFAULT_TOLERANCE
from ..errors import UsageError
from .linalg import PAULIS, trace_norm


class CovarianceReport(object):
    """
    Outcome of a Weyl-covariance check: the verdict and the four per-Pauli residuals

    EXAMPLES::

        >>> from qnet.quantum.covariance import CovarianceReport
        >>> r = CovarianceReport((0.0, 0.0, 0.0, 0.0), tolerance=1e-9)
        >>> bool(r), r.covariant
        (True, True)
        >>> r
        Weyl-covariant channel (largest residual 0)
    """
    def __init__(self, residuals, tolerance):
        self._residuals = tuple(float(r) for r in residuals)
        self._tolerance = float(tolerance)

    @property
    def residuals(self):
        """
        Return the trace-norm residuals for `U_0, U_1, U_2, U_3`
        """
        return self._residuals

    @property
    def tolerance(self):
        return self._tolerance

    @property
    def covariant(self):
        return all(r <= self._tolerance for r in self._residuals)

    def __bool__(self):
        return self.covariant

    def to_dict(self):
        return {"weyl_covariant": self.covariant, "residuals": list(self._residuals), "tolerance": self._tolerance}

    def __repr__(self):
        verdict = "Weyl-covariant" if self.covariant else "Non-covariant"
        return f"{verdict} channel (largest residual {max(self._residuals):.3g})"


def is_weyl_covariant(channel, tol=DEFAULT_TOLERANCE):
    r"""
    Check whether a qubit channel is Weyl (Pauli) covariant

    For every Pauli `U_k` the Choi matrix of `\rho \mapsto U_k^\dagger \mathcal{E}(U_k \rho U_k^\dagger) U_k`
    is compared with the Choi matrix of `\mathcal{E}` in trace norm, i.e. covariance is tested with
    output unitaries `V_k = U_k`.

    INPUT:

    - ``channel`` -- a :class:`~qnet.quantum.kraus.KrausChannel` on a qubit
    - ``tol`` -- largest admissible trace-norm residual (default: 1e-9)

    EXAMPLES::

        >>> from qnet.quantum.covariance import is_weyl_covariant
        >>> from qnet.quantum.kraus import amplitude_damping_channel, dephasing_channel
        >>> is_weyl_covariant(dephasing_channel(0.3)).covariant
        True
        >>> report = is_weyl_covariant(amplitude_damping_channel(0.5))
        >>> report.covariant
        False
        >>> report.residuals[1] > 0.1
        True

    TESTS::

        >>> from qnet.quantum.kraus import erasure_channel
        >>> is_weyl_covariant(erasure_channel(0.3))
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: the covariance check needs a qubit-to-qubit channel
    """
    if channel.dim_in != 2 or channel.dim_out != 2:
        raise UsageError("the covariance check needs a qubit-to-qubit channel")

    choi = channel.choi_matrix().matrix
    residuals = [trace_norm(channel.conjugated(u).choi_matrix().matrix - choi) for u in PAULIS]
    return CovarianceReport(residuals, tolerance=tol)
