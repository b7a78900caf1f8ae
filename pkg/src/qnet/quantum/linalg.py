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


r"""
Dense linear algebra for the small operators of the numerical core

Every Hermitian matrix handled by the package has dimension at most 6, so spectra are computed by
cyclic Jacobi rotations. A complex Hermitian matrix `H = A + iB` is diagonalised through its real
symmetric embedding

.. MATH::

    M = \begin{pmatrix} A & -B \\ B & A \end{pmatrix},

whose spectrum is the spectrum of `H` with every eigenvalue doubled, and for any function `f` the
matrix `f(M)` is the embedding of `f(H)`.
"""
import logging

import numpy as np

from ..config import JACOBI_MAX_SWEEPS, JACOBI_THRESHOLD, TOL_HERMITIAN
from ..errors import DomainError, UsageError


logger = logging.getLogger(__name__)


PAULIS = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
for _u in PAULIS:
    _u.setflags(write=False)


def pauli(k):
    """
    Return the single-qubit Pauli unitary `U_k` (`U_0 = I, U_1 = X, U_2 = Y, U_3 = Z`)

    EXAMPLES::

        >>> from qnet.quantum.linalg import pauli
        >>> pauli(3).real
        array([[ 1.,  0.],
               [ 0., -1.]])

    TESTS::

        >>> pauli(4)
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: Pauli index must be in {0, 1, 2, 3}
    """
    if k not in (0, 1, 2, 3):
        raise UsageError("Pauli index must be in {0, 1, 2, 3}")
    return PAULIS[k]


def jacobi_eigh(a, threshold=JACOBI_THRESHOLD, max_sweeps=JACOBI_MAX_SWEEPS):
    """
    Return the eigenvalues (ascending) and eigenvectors (columns) of a real symmetric matrix

    INPUT:

    - ``a`` -- real symmetric square matrix
    - ``threshold`` -- stop once the off-diagonal Frobenius norm is below this value (default: 1e-12)
    - ``max_sweeps`` -- maximum number of cyclic sweeps (default: 100)

    EXAMPLES::

        >>> import numpy as np
        >>> from qnet.quantum.linalg import jacobi_eigh
        >>> w, v = jacobi_eigh(np.array([[2.0, 1.0], [1.0, 2.0]]))
        >>> np.round(w, 12)
        array([1., 3.])
        >>> bool(np.allclose(v @ np.diag(w) @ v.T, [[2.0, 1.0], [1.0, 2.0]]))
        True

    TESTS::

        >>> jacobi_eigh(np.array([[1.0, 2.0], [0.0, 1.0]]))
        Traceback (most recent call last):
        ...
        qnet.errors.UsageError: matrix must be symmetric
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise UsageError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix entries must be finite")
    if np.max(np.abs(a - a.T), initial=0.0) > TOL_HERMITIAN * max(1.0, np.max(np.abs(a), initial=0.0)):
        raise UsageError("matrix must be symmetric")

    a = (a + a.T) / 2
    n = a.shape[0]
    v = np.eye(n)

    for sweep in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= threshold:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue

                theta = (a[q, q] - a[p, p]) / (2 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        logger.warning("Jacobi rotations stopped after %d sweeps without reaching %g", max_sweeps, threshold)

    logger.debug("Jacobi converged on a %dx%d matrix after %d sweeps", n, n, sweep)
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _real_embedding(h):
    a, b = h.real, h.imag
    return np.block([[a, -b], [b, a]])


def _hermitian(h):
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise UsageError("matrix must be square")
    if not np.all(np.isfinite(h)):
        raise DomainError("matrix entries must be finite")
    scale = max(1.0, np.max(np.abs(h), initial=0.0))
    if np.max(np.abs(h - h.conj().T), initial=0.0) > TOL_HERMITIAN * scale:
        raise DomainError("matrix must be Hermitian")
    return (h + h.conj().T) / 2


def eigvalsh(h):
    """
    Return the eigenvalues of a Hermitian matrix in ascending order

    EXAMPLES::

        >>> import numpy as np
        >>> from qnet.quantum.linalg import eigvalsh, pauli
        >>> np.round(eigvalsh(pauli(2)), 12)
        array([-1.,  1.])
    """
    h = _hermitian(h)
    w, _ = jacobi_eigh(_real_embedding(h))
    return w[0::2]


def hermitian_function(h, f):
    """
    Return `f(H)` for a Hermitian matrix `H`

    INPUT:

    - ``h`` -- Hermitian matrix
    - ``f`` -- vectorised real function applied to the eigenvalues

    EXAMPLES::

        >>> import numpy as np
        >>> from qnet.quantum.linalg import hermitian_function, pauli
        >>> bool(np.allclose(hermitian_function(pauli(1), np.abs), np.eye(2)))
        True
    """
    h = _hermitian(h)
    n = h.shape[0]
    w, v = jacobi_eigh(_real_embedding(h))
    m = (v * f(w)) @ v.T
    return m[:n, :n] + 1j * m[n:, :n]


def trace_norm(x):
    r"""
    Return the trace norm `\|X\|_{tr} = \sum_i |x_i|` of a Hermitian matrix

    EXAMPLES::

        >>> import numpy as np
        >>> from qnet.quantum.linalg import trace_norm
        >>> round(trace_norm(np.diag([0.5, -0.25])), 12)
        0.75
    """
    return float(np.sum(np.abs(eigvalsh(x))))


def partial_transpose(x, dims, subsystem=1):
    """
    Return the partial transpose of a bipartite operator

    INPUT:

    - ``x`` -- square matrix acting on a space of dimension ``dims[0] * dims[1]``
    - ``dims`` -- pair of local dimensions
    - ``subsystem`` -- index of the transposed subsystem (default: 1)

    EXAMPLES::

        >>> import numpy as np
        >>> from qnet.quantum.linalg import partial_transpose
        >>> swap = np.eye(4)[[0, 2, 1, 3]]
        >>> partial_transpose(swap, (2, 2)).real.astype(int)
        array([[1, 0, 0, 1],
               [0, 0, 0, 0],
               [0, 0, 0, 0],
               [1, 0, 0, 1]])
    """
    da, db = dims
    x = np.asarray(x)
    if x.shape != (da * db, da * db):
        raise UsageError(f"operator of shape {x.shape} does not act on a {da}x{db} system")
    t = x.reshape(da, db, da, db)
    if subsystem == 1:
        t = t.transpose(0, 3, 2, 1)
    elif subsystem == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        raise UsageError("subsystem must be 0 or 1")
    return t.reshape(da * db, da * db)
