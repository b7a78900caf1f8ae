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


import numpy as np

from ..config import TOL_CPTP
from ..errors import DomainError, UsageError
from .linalg import PAULIS
from .states import DensityMatrix, bell_state


class KrausChannel(object):
    r"""
    Construct a quantum channel from its Kraus operators

    INPUT:

    - ``kraus_ops`` -- a non-empty list of ``dim_out x dim_in`` complex matrices with
      `\sum_k K_k^\dagger K_k = I`

    EXAMPLES::

        >>> from qnet.quantum.kraus import KrausChannel
        >>> KrausChannel([[[1, 0], [0, 1]]])
        Quantum channel with 1 Kraus operator from dimension 2 to 2

    TESTS::

        >>> KrausChannel([[[1, 0], [0, 0.5]]])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: Kraus operators do not satisfy the completeness relation (deviation 0.75)
        >>> KrausChannel([])
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: at least one Kraus operator is required
    """
    def __init__(self, kraus_ops):
        ops = [np.array(k, dtype=complex) for k in kraus_ops]
        if not ops:
            raise UsageError("at least one Kraus operator is required")
        shape = ops[0].shape
        if len(shape) != 2 or any(k.shape != shape for k in ops):
            raise UsageError("Kraus operators must be matrices of the same shape")
        if not all(np.all(np.isfinite(k)) for k in ops):
            raise DomainError("Kraus operator entries must be finite")

        dim_out, dim_in = shape
        completeness = sum(k.conj().T @ k for k in ops)
        deviation = float(np.max(np.abs(completeness - np.eye(dim_in))))
        if deviation > TOL_CPTP:
            raise DomainError("Kraus operators do not satisfy the completeness relation "
                              f"(deviation {round(deviation, 12)})")

        for k in ops:
            k.setflags(write=False)
        self._kraus_ops = tuple(ops)
        self._dim_in = dim_in
        self._dim_out = dim_out

    @property
    def dim_in(self):
        """
        Return the input dimension
        """
        return self._dim_in

    @property
    def dim_out(self):
        """
        Return the output dimension
        """
        return self._dim_out

    @property
    def kraus_ops(self):
        """
        Return the tuple of Kraus operators
        """
        return self._kraus_ops

    def apply(self, rho):
        """
        Return `\\mathcal{E}(\\rho)`

        EXAMPLES::

            >>> import numpy as np
            >>> from qnet.quantum.kraus import dephasing_channel
            >>> from qnet.quantum.states import pure_state
            >>> out = dephasing_channel(0.5).apply(pure_state([1, 1]))
            >>> bool(np.allclose(out.matrix, np.eye(2) / 2))
            True
        """
        if rho.dim != self._dim_in:
            raise UsageError(f"channel input dimension {self._dim_in} does not match state dimension {rho.dim}")
        m = rho.matrix
        return DensityMatrix(sum(k @ m @ k.conj().T for k in self._kraus_ops))

    def apply_local(self, rho, dim_a):
        r"""
        Return `(\mathcal{I} \otimes \mathcal{E})(\rho)` for a bipartite ``rho`` whose first factor has
        dimension ``dim_a``

        EXAMPLES::

            >>> from qnet.quantum.kraus import erasure_channel
            >>> from qnet.quantum.states import bell_state
            >>> erasure_channel(0.3).apply_local(bell_state(), 2).dims
            (2, 3)
        """
        if rho.dim != dim_a * self._dim_in:
            raise UsageError(f"state of dimension {rho.dim} does not factor as {dim_a} x {self._dim_in}")
        m = rho.matrix
        eye = np.eye(dim_a)
        local_ops = [np.kron(eye, k) for k in self._kraus_ops]
        return DensityMatrix(sum(k @ m @ k.conj().T for k in local_ops), dims=(dim_a, self._dim_out))

    def choi_matrix(self):
        r"""
        Return the Choi matrix `\sigma_{\mathcal{E}} = (\mathcal{I} \otimes \mathcal{E})(\Phi)` of a qubit-input channel

        EXAMPLES::

            >>> import numpy as np
            >>> from qnet.quantum.kraus import identity_channel
            >>> from qnet.quantum.states import bell_state
            >>> bool(np.allclose(identity_channel().choi_matrix().matrix, bell_state().matrix))
            True

        TESTS::

            >>> from qnet.quantum.kraus import KrausChannel
            >>> KrausChannel([np.eye(3)]).choi_matrix()
            Traceback (most recent call last):
            ...
            qnet.errors.UsageError: Choi matrices are built for qubit-input channels only
        """
        if self._dim_in != 2:
            raise UsageError("Choi matrices are built for qubit-input channels only")
        return self.apply_local(bell_state(), 2)

    def conjugated(self, u):
        r"""
        Return the channel `\rho \mapsto U^\dagger \mathcal{E}(U \rho U^\dagger) U`

        EXAMPLES::

            >>> from qnet.quantum.kraus import identity_channel
            >>> from qnet.quantum.linalg import pauli
            >>> identity_channel().conjugated(pauli(1))
            Quantum channel with 1 Kraus operator from dimension 2 to 2
        """
        u = np.asarray(u, dtype=complex)
        if self._dim_in != self._dim_out or u.shape != (self._dim_in, self._dim_in):
            raise UsageError("conjugation needs a unitary matching a channel with equal input and output dimensions")
        return KrausChannel([u.conj().T @ k @ u for k in self._kraus_ops])

    def __repr__(self):
        n = len(self._kraus_ops)
        noun = "operator" if n == 1 else "operators"
        return f"Quantum channel with {n} Kraus {noun} from dimension {self._dim_in} to {self._dim_out}"


def _probability(p, name="p"):
    p = float(p)
    if not 0 <= p <= 1:
        raise DomainError(f"{name} must lie in [0,1], got {p}")
    return p


def identity_channel():
    """
    Return the ideal qubit channel

    EXAMPLES::

        >>> from qnet.quantum.kraus import identity_channel
        >>> identity_channel().kraus_ops[0].real
        array([[1., 0.],
               [0., 1.]])
    """
    return KrausChannel([np.eye(2)])


def pauli_channel(probabilities):
    r"""
    Return the Pauli channel `\rho \mapsto \sum_k p_k U_k \rho U_k^\dagger`

    EXAMPLES::

        >>> from qnet.quantum.kraus import pauli_channel
        >>> pauli_channel([0.7, 0.1, 0.1, 0.1])
        Quantum channel with 4 Kraus operators from dimension 2 to 2

    TESTS::

        >>> pauli_channel([0.5, 0.5, 0.1, 0.0])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: Kraus operators do not satisfy the completeness relation (deviation 0.1)
    """
    probabilities = [_probability(p) for p in probabilities]
    if len(probabilities) != 4:
        raise DomainError("a Pauli channel has exactly 4 probabilities")
    return KrausChannel([np.sqrt(p) * u for p, u in zip(probabilities, PAULIS)])


def dephasing_channel(p):
    r"""
    Return the dephasing channel `\rho \mapsto (1-p)\rho + pZ\rho Z`

    EXAMPLES::

        >>> from qnet.quantum.kraus import dephasing_channel
        >>> dephasing_channel(0.25)
        Quantum channel with 2 Kraus operators from dimension 2 to 2
    """
    p = _probability(p)
    return KrausChannel([np.sqrt(1 - p) * PAULIS[0], np.sqrt(p) * PAULIS[3]])


def erasure_channel(p):
    r"""
    Return the qubit erasure channel `\rho \mapsto (1-p)\rho \oplus p|e\rangle\langle e|` with a qutrit output

    EXAMPLES::

        >>> from qnet.quantum.kraus import erasure_channel
        >>> erasure_channel(0.3)
        Quantum channel with 3 Kraus operators from dimension 2 to 3
    """
    p = _probability(p)
    embed = np.array([[1, 0], [0, 1], [0, 0]], dtype=complex)
    flag_0 = np.array([[0, 0], [0, 0], [1, 0]], dtype=complex)
    flag_1 = np.array([[0, 0], [0, 0], [0, 1]], dtype=complex)
    return KrausChannel([np.sqrt(1 - p) * embed, np.sqrt(p) * flag_0, np.sqrt(p) * flag_1])


def amplitude_damping_channel(gamma):
    """
    Return the amplitude-damping channel with damping probability ``gamma``

    EXAMPLES::

        >>> from qnet.quantum.kraus import amplitude_damping_channel
        >>> amplitude_damping_channel(0.5)
        Quantum channel with 2 Kraus operators from dimension 2 to 2
    """
    gamma = _probability(gamma, name="gamma")
    k0 = np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex)
    k1 = np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex)
    return KrausChannel([k0, k1])


def pauli_twirl(rho):
    r"""
    Return the bilateral Pauli twirl `\frac14 \sum_k (U_k \otimes U_k^*) \rho (U_k \otimes U_k^*)^\dagger`

    The twirl is a trace-preserving LOCC that maps every two-qubit state to a Bell-diagonal one and
    leaves Bell-diagonal states unchanged.

    EXAMPLES::

        >>> from qnet.quantum.kraus import pauli_twirl
        >>> from qnet.quantum.states import BellDiagonalSpectrum, pure_state
        >>> BellDiagonalSpectrum.from_state(pauli_twirl(pure_state([1, 0, 0, 0])))
        Bell-diagonal spectrum (0.5, 0.0, 0.0, 0.5)
    """
    if rho.dim != 4:
        raise UsageError("the Pauli twirl acts on two qubits")
    m = rho.matrix
    ops = [np.kron(u, u.conj()) for u in PAULIS]
    return DensityMatrix(sum(k @ m @ k.conj().T for k in ops) / 4, dims=(2, 2))
