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

from ..config import TOL_HERMITIAN, TOL_PSD, TOL_TRACE
from ..errors import DomainError, UsageError
from .linalg import PAULIS, eigvalsh, trace_norm


class DensityMatrix(object):
    """
    Construct a density matrix, i.e. a Hermitian positive-semidefinite operator with unit trace

    INPUT:

    - ``matrix`` -- square complex matrix
    - ``dims`` -- local dimensions of a multipartite system (default: a single system)

    EXAMPLES::

        >>> from qnet.quantum.states import DensityMatrix
        >>> DensityMatrix([[0.5, 0], [0, 0.5]])
        Density matrix of dimension 2

    TESTS::

        >>> DensityMatrix([[1, 0], [0, 1]])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: density matrix must have unit trace, got 2.0
        >>> DensityMatrix([[1.5, 0], [0, -0.5]])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: density matrix must be positive semidefinite, smallest eigenvalue is -0.5
        >>> DensityMatrix([[0.5, 0.5], [0, 0.5]])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: density matrix must be Hermitian
        >>> DensityMatrix([[0.5, 0], [0, 0.5]], dims=(2, 2))
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: dims (2, 2) do not multiply to dimension 2
    """
    def __init__(self, matrix, dims=None):
        matrix = np.array(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise UsageError("density matrix must be a non-empty square matrix")
        if not np.all(np.isfinite(matrix)):
            raise DomainError("density matrix entries must be finite")
        if np.max(np.abs(matrix - matrix.conj().T)) > TOL_HERMITIAN:
            raise DomainError("density matrix must be Hermitian")

        trace = np.trace(matrix).real
        if abs(trace - 1) > TOL_TRACE:
            raise DomainError(f"density matrix must have unit trace, got {round(trace, 12)}")

        matrix = (matrix + matrix.conj().T) / 2
        eigenvalues = eigvalsh(matrix)
        if eigenvalues[0] < -TOL_PSD:
            raise DomainError("density matrix must be positive semidefinite, smallest eigenvalue is "
                              f"{round(float(eigenvalues[0]), 12)}")

        dim = matrix.shape[0]
        dims = (dim,) if dims is None else tuple(int(d) for d in dims)
        if int(np.prod(dims)) != dim:
            raise UsageError(f"dims {dims} do not multiply to dimension {dim}")

        matrix.setflags(write=False)
        eigenvalues.setflags(write=False)
        self._matrix = matrix
        self._dims = dims
        self._eigenvalues = eigenvalues

    @property
    def dim(self):
        """
        Return the dimension of the Hilbert space

        EXAMPLES::

            >>> from qnet.quantum.states import bell_state
            >>> bell_state().dim
            4
        """
        return self._matrix.shape[0]

    @property
    def dims(self):
        """
        Return the local dimensions

        EXAMPLES::

            >>> from qnet.quantum.states import bell_state
            >>> bell_state().dims
            (2, 2)
        """
        return self._dims

    @property
    def matrix(self):
        """
        Return the (read-only) complex matrix
        """
        return self._matrix

    def eigenvalues(self):
        """
        Return the eigenvalues in ascending order

        EXAMPLES::

            >>> import numpy as np
            >>> from qnet.quantum.states import maximally_mixed
            >>> np.round(maximally_mixed(2).eigenvalues(), 12)
            array([0.5, 0.5])
        """
        return self._eigenvalues

    def trace_distance(self, other):
        r"""
        Return `\|\rho - \sigma\|_{tr}`

        EXAMPLES::

            >>> from qnet.quantum.states import pure_state
            >>> round(pure_state([1, 0]).trace_distance(pure_state([0, 1])), 12)
            2.0
        """
        if self.dim != other.dim:
            raise UsageError(f"dimension mismatch: {self.dim} != {other.dim}")
        return trace_norm(self._matrix - other.matrix)

    def tensor(self, other):
        """
        Return the tensor product state

        EXAMPLES::

            >>> from qnet.quantum.states import bell_state
            >>> bell_state().tensor(bell_state()).dims
            (2, 2, 2, 2)
        """
        return DensityMatrix(np.kron(self._matrix, other.matrix), dims=self._dims + other.dims)

    def __eq__(self, other):
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self._dims == other.dims and np.array_equal(self._matrix, other.matrix)

    def __hash__(self):
        return hash((self._dims, self._matrix.tobytes()))

    def __repr__(self):
        return f"Density matrix of dimension {self.dim}"


def pure_state(vector, dims=None):
    """
    Return the projector onto the normalised ``vector``

    EXAMPLES::

        >>> from qnet.quantum.states import pure_state
        >>> pure_state([1, 0]).matrix.real
        array([[1., 0.],
               [0., 0.]])
    """
    vector = np.asarray(vector, dtype=complex).ravel()
    norm = np.linalg.norm(vector)
    if norm == 0:
        raise DomainError("state vector must be non-zero")
    vector = vector / norm
    return DensityMatrix(np.outer(vector, vector.conj()), dims=dims)


def maximally_mixed(dim):
    """
    Return `I/d`

    EXAMPLES::

        >>> from qnet.quantum.states import maximally_mixed
        >>> maximally_mixed(4)
        Density matrix of dimension 4
    """
    return DensityMatrix(np.eye(dim) / dim)


def bell_basis():
    r"""
    Return the Bell basis as the columns of a `4 \times 4` matrix

    Column `k` is `\beta_k = (I \otimes U_k)|\Phi\rangle` with `U = (I, X, Y, Z)` and
    `|\Phi\rangle = (|00\rangle + |11\rangle)/\sqrt{2}`.

    EXAMPLES::

        >>> import numpy as np
        >>> from qnet.quantum.states import bell_basis
        >>> B = bell_basis()
        >>> bool(np.allclose(B.conj().T @ B, np.eye(4)))
        True
    """
    phi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return np.column_stack([np.kron(np.eye(2), u) @ phi for u in PAULIS])


def bell_state():
    r"""
    Return the maximally entangled two-qubit state `\Phi`

    EXAMPLES::

        >>> from qnet.quantum.states import bell_state
        >>> bell_state()
        Density matrix of dimension 4
    """
    return pure_state(bell_basis()[:, 0], dims=(2, 2))


class BellDiagonalSpectrum(object):
    r"""
    Construct the spectrum of a Bell-diagonal two-qubit state

    The weights are given in Bell-basis order, weight `k` sitting on `(I \otimes U_k)|\Phi\rangle`.
    ``lambdas`` is the same spectrum sorted in descending order.

    INPUT:

    - ``weights`` -- four probabilities summing to one

    EXAMPLES::

        >>> from qnet.quantum.states import BellDiagonalSpectrum
        >>> s = BellDiagonalSpectrum([0.1, 0.0, 0.0, 0.9])
        >>> s
        Bell-diagonal spectrum (0.1, 0.0, 0.0, 0.9)
        >>> s.lambdas
        (0.9, 0.1, 0.0, 0.0)
        >>> s.lambda_max, s.argmax
        (0.9, 3)

    TESTS::

        >>> BellDiagonalSpectrum([0.5, 0.5, 0.1, 0.0])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: Bell-diagonal weights must sum to 1
        >>> BellDiagonalSpectrum([1.2, -0.2, 0.0, 0.0])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: Bell-diagonal weights must lie in [0, 1]
        >>> BellDiagonalSpectrum([0.5, 0.5])
        Traceback (most recent call last):
        ...
        qnet.errors.DomainError: a Bell-diagonal spectrum has exactly 4 weights
    """
    def __init__(self, weights):
        weights = np.array(weights, dtype=float).ravel()
        if weights.shape != (4,):
            raise DomainError("a Bell-diagonal spectrum has exactly 4 weights")
        if not np.all(np.isfinite(weights)) or np.any(weights < -TOL_TRACE) or np.any(weights > 1 + TOL_TRACE):
            raise DomainError("Bell-diagonal weights must lie in [0, 1]")
        if abs(weights.sum() - 1) > TOL_TRACE:
            raise DomainError("Bell-diagonal weights must sum to 1")

        self._weights = tuple(float(w) for w in np.clip(weights, 0.0, 1.0))

    @property
    def weights(self):
        """
        Return the weights in Bell-basis order
        """
        return self._weights

    @property
    def lambdas(self):
        """
        Return the weights in descending order
        """
        return tuple(sorted(self._weights, reverse=True))

    @property
    def lambda_max(self):
        """
        Return the largest weight
        """
        return max(self._weights)

    @property
    def argmax(self):
        """
        Return the Bell index carrying the largest weight (the first one on ties)
        """
        return self._weights.index(self.lambda_max)

    def state(self):
        """
        Return the Bell-diagonal density matrix with this spectrum

        EXAMPLES::

            >>> import numpy as np
            >>> from qnet.quantum.states import BellDiagonalSpectrum, bell_state
            >>> rho = BellDiagonalSpectrum([1, 0, 0, 0]).state()
            >>> bool(np.allclose(rho.matrix, bell_state().matrix))
            True
        """
        basis = bell_basis()
        return DensityMatrix((basis * np.array(self._weights)) @ basis.conj().T, dims=(2, 2))

    @classmethod
    def from_state(cls, rho, tol=TOL_HERMITIAN):
        """
        Return the Bell-basis spectrum of a Bell-diagonal two-qubit state

        INPUT:

        - ``rho`` -- a :class:`DensityMatrix` of dimension 4
        - ``tol`` -- largest admissible off-diagonal Bell-basis entry (default: 1e-9)

        EXAMPLES::

            >>> from qnet.quantum.states import BellDiagonalSpectrum, maximally_mixed
            >>> BellDiagonalSpectrum.from_state(maximally_mixed(4))
            Bell-diagonal spectrum (0.25, 0.25, 0.25, 0.25)

        TESTS::

            >>> from qnet.quantum.states import pure_state
            >>> BellDiagonalSpectrum.from_state(pure_state([1, 0, 0, 0]))
            Traceback (most recent call last):
            ...
            qnet.errors.DomainError: state is not Bell-diagonal
        """
        if rho.dim != 4:
            raise UsageError("a Bell-diagonal state acts on two qubits")
        basis = bell_basis()
        m = basis.conj().T @ rho.matrix @ basis
        if np.max(np.abs(m - np.diag(np.diag(m)))) > tol:
            raise DomainError("state is not Bell-diagonal")
        return cls(np.clip(np.diag(m).real, 0.0, 1.0))

    def __eq__(self, other):
        """
        Return ``True`` if both spectra agree weight by weight within the trace tolerance

        EXAMPLES::

            >>> from qnet.quantum.states import BellDiagonalSpectrum
            >>> BellDiagonalSpectrum([0.5, 0.5, 0, 0]) == BellDiagonalSpectrum([0.5 + 1e-16, 0.5 - 1e-16, 0, 0])
            True
            >>> BellDiagonalSpectrum([0.5, 0.5, 0, 0]) == BellDiagonalSpectrum([0.5, 0, 0.5, 0])
            False
        """
        if not isinstance(other, BellDiagonalSpectrum):
            return NotImplemented
        return bool(np.allclose(self._weights, other.weights, rtol=0.0, atol=TOL_TRACE))

    __hash__ = None

    def __repr__(self):
        weights = ", ".join(str(round(w, 12) + 0.0) for w in self._weights)
        return f"Bell-diagonal spectrum ({weights})"
