# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Small-matrix numerical kernel.

The matrices handled here are tiny (at most 8×8) and symmetric: covariance matrices, their
blocks, and the real embedding of the Hermitian uncertainty matrix.

Attributes:
    DEFAULT_TOL (float): the default absolute tolerance on eigenvalues and margins.
"""

import logging
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .exceptions import BracketError, InvalidInput


DEFAULT_TOL = 1e-10

_ALLOWED_DIMENSIONS = (2, 4, 8)
_SYMMETRY_TOL = 1e-12
_MAX_SWEEPS = 64
_MAX_BISECTIONS = 200

_log = logging.getLogger(__name__)


class EigenDecomposition(NamedTuple):
    """Eigenvalues (ascending) and the matching orthonormal eigenvectors (as columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def sym_matrix(entries):
    """Build a read-only symmetric matrix.

    Args:
        entries (array-like): a square matrix of dimension 2, 4 or 8.

    Returns:
        numpy.ndarray: the symmetrized float matrix, flagged as non-writeable.

    Raises:
        InvalidInput: if the matrix is not square, has an unsupported dimension, contains
            non-finite entries, or is not symmetric.
    """
    matrix = np.array(entries, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidInput(f"Expected a square matrix, got shape {matrix.shape}")
    if matrix.shape[0] not in _ALLOWED_DIMENSIONS:
        raise InvalidInput(f"Unsupported matrix dimension: {matrix.shape[0]}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidInput("The matrix contains non-finite entries")
    scale = max(1.0, float(np.max(np.abs(matrix))))
    if np.max(np.abs(matrix - matrix.T)) > _SYMMETRY_TOL * scale:
        raise InvalidInput("The matrix is not symmetric")
    matrix = (matrix + matrix.T) / 2
    matrix.setflags(write=False)
    return matrix


def sym_eigen(matrix):
    """Diagonalize a small symmetric matrix with cyclic Jacobi rotations.

    Args:
        matrix (array-like): a symmetric matrix of dimension 2, 4 or 8.

    Returns:
        EigenDecomposition: ascending eigenvalues and orthonormal eigenvectors.
    """
    a = np.array(sym_matrix(matrix))
    size = a.shape[0]
    vectors = np.eye(size)
    eps = np.finfo(float).eps
    for sweep in range(_MAX_SWEEPS):
        off_diagonal = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off_diagonal <= eps * np.linalg.norm(a):
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta >= 0 else -1.0
                t = sign / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p = vectors[:, p].copy()
                vec_q = vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q
    else:
        _log.warning("Jacobi iteration stopped after %d sweeps without converging", _MAX_SWEEPS)
    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return EigenDecomposition(eigenvalues[order], vectors[:, order])


def min_eigenvalue(matrix):
    """Return the smallest eigenvalue of a symmetric matrix."""
    return float(sym_eigen(matrix).eigenvalues[0])


def is_psd(matrix, tol=DEFAULT_TOL):
    """Check whether a symmetric matrix is positive semi-definite.

    Args:
        matrix (array-like): the symmetric matrix to check.
        tol (float): eigenvalues down to ``-tol`` are accepted.

    Returns:
        bool: ``True`` if the smallest eigenvalue is at least ``-tol``.
    """
    if tol < 0:
        raise InvalidInput(f"The tolerance must be non-negative, got {tol}")
    return min_eigenvalue(matrix) >= -tol


def bisect_root(func, lo, hi, tol=1e-12):
    """Find a root of a continuous function bracketed by ``[lo, hi]``.

    Args:
        func (callable): the function, real to real.
        lo (float): the lower end of the bracket.
        hi (float): the upper end of the bracket.
        tol (float): the absolute width at which bisection stops.

    Returns:
        float: the root.

    Raises:
        BracketError: if ``func`` has the same strict sign at both ends.
    """
    if tol <= 0:
        raise InvalidInput(f"The tolerance must be positive, got {tol}")
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0:
        return float(lo)
    if f_hi == 0:
        return float(hi)
    if f_lo * f_hi > 0:
        raise BracketError(f"No sign change between f({lo})={f_lo} and f({hi})={f_hi}")
    root = optimize.bisect(func, lo, hi, xtol=tol, maxiter=_MAX_BISECTIONS)
    _log.debug("Bisection on [%s, %s] converged to %s", lo, hi, root)
    return float(root)


def hermitian_embedding(matrix, omega):
    """Real embedding of ``V + (i/2)Ω``.

    The returned 2d×2d matrix ``[[V, -Ω/2], [Ω/2, V]]`` is positive semi-definite iff the
    Hermitian matrix is.
    """
    half = np.asarray(omega, dtype=float) / 2
    matrix = np.asarray(matrix, dtype=float)
    return np.block([[matrix, -half], [half, matrix]])
