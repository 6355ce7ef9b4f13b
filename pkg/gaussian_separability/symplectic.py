# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Local symplectic group ``Sp(2,R)⊗Sp(2,R)`` and its action on two-mode covariance matrices.

The phase-space ordering is ``(q1, p1, q2, p2)`` everywhere.

Attributes:
    J (numpy.ndarray): the single-mode symplectic form ``[[0, 1], [-1, 0]]``.
    OMEGA (numpy.ndarray): the two-mode symplectic form ``J ⊕ J``.
    S3 (numpy.ndarray): the mirror ``diag(1, -1)`` (a partial transposition, not symplectic).
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import block_diag

from .exceptions import InvalidInput
from .linalg import sym_matrix


_log = logging.getLogger(__name__)

_DET_TOL = 1e-10

J = np.array([[0.0, 1.0], [-1.0, 0.0]])
J.setflags(write=False)
OMEGA = block_diag(J, J)
OMEGA.setflags(write=False)
S3 = np.diag([1.0, -1.0])
S3.setflags(write=False)


@dataclass(frozen=True)
class SymplecticForm:
    """The symplectic forms for one mode (``J``) and for two modes (``Omega``)."""

    J: np.ndarray = field(default_factory=lambda: J)
    Omega: np.ndarray = field(default_factory=lambda: OMEGA)


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """A two-mode covariance matrix ``V = [[A, C], [Cᵀ, B]]``.

    Args:
        V (array-like): the 4×4 symmetric matrix, in ``(q1, p1, q2, p2)`` ordering.
    """

    V: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "V", sym_matrix(self.V))
        if self.V.shape != (4, 4):
            raise InvalidInput(f"A two-mode covariance matrix is 4×4, got {self.V.shape}")

    @classmethod
    def from_blocks(cls, A, B, C):
        """Assemble the matrix from its mode blocks ``A``, ``B`` and cross block ``C``."""
        A, B, C = (np.asarray(block, dtype=float).reshape(2, 2) for block in (A, B, C))
        return cls(np.block([[A, C], [C.T, B]]))

    @property
    def A(self):
        """The first mode's block."""
        return self.V[:2, :2]

    @property
    def B(self):
        """The second mode's block."""
        return self.V[2:, 2:]

    @property
    def C(self):
        """The cross-correlation block."""
        return self.V[:2, 2:]

    def allclose(self, other, atol=1e-10):
        return bool(np.allclose(self.V, other.V, rtol=0, atol=atol))


@dataclass(frozen=True, eq=False)
class LocalSymplectic:
    """A pair of single-mode symplectic matrices acting on mode 1 and mode 2.

    Args:
        s1 (array-like): the 2×2 matrix acting on mode 1.
        s2 (array-like): the 2×2 matrix acting on mode 2.

    Raises:
        InvalidInput: if either factor does not have unit determinant.
    """

    s1: np.ndarray
    s2: np.ndarray

    def __post_init__(self):
        for name in ("s1", "s2"):
            factor = np.array(getattr(self, name), dtype=float)
            if factor.shape != (2, 2) or not np.all(np.isfinite(factor)):
                raise InvalidInput(f"{name} must be a finite 2×2 matrix")
            if abs(np.linalg.det(factor) - 1.0) > _DET_TOL:
                raise InvalidInput(f"{name} is not symplectic: det = {np.linalg.det(factor)}")
            factor.setflags(write=False)
            object.__setattr__(self, name, factor)

    @classmethod
    def identity(cls):
        return cls(np.eye(2), np.eye(2))

    @property
    def matrix(self):
        """The 4×4 block-diagonal matrix ``S1 ⊕ S2``."""
        return block_diag(self.s1, self.s2)

    def compose(self, other):
        """Return ``self ∘ other``: ``other`` acts first."""
        return LocalSymplectic(self.s1 @ other.s1, self.s2 @ other.s2)

    def inverse(self):
        return LocalSymplectic(np.linalg.inv(self.s1), np.linalg.inv(self.s2))


def rotation(theta):
    """Phase-space rotation ``[[cos θ, sin θ], [-sin θ, cos θ]]``."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def squeeze(x):
    """Single-mode squeezer ``diag(x, 1/x)``.

    Raises:
        InvalidInput: if ``x`` is not strictly positive.
    """
    if not x > 0:
        raise InvalidInput(f"The squeezing factor must be positive, got {x}")
    return np.diag([x, 1.0 / x])


def apply(transform, cov):
    """Apply a local symplectic transformation by congruence.

    ``A → S1 A S1ᵀ``, ``B → S2 B S2ᵀ`` and ``C → S1 C S2ᵀ``.

    Args:
        transform (LocalSymplectic): the transformation.
        cov (CovarianceMatrix): the covariance matrix.

    Returns:
        CovarianceMatrix: the transformed matrix.
    """
    s1, s2 = transform.s1, transform.s2
    return CovarianceMatrix.from_blocks(
        s1 @ cov.A @ s1.T, s2 @ cov.B @ s2.T, s1 @ cov.C @ s2.T
    )


def is_symplectic(matrix, tol=1e-10):
    """Check ``S J Sᵀ = J`` for a 2×2 matrix, in the max norm."""
    matrix = np.asarray(matrix, dtype=float)
    return bool(np.max(np.abs(matrix @ J @ matrix.T - J)) <= tol)


def random_local_symplectic(seed=None, spread=1.0):
    """Draw a random local symplectic transformation.

    Each factor is ``rotation · squeeze · rotation`` with uniform angles in ``[0, 2π)`` and a
    squeezing factor ``exp(u)``, ``u`` uniform in ``[-spread, spread]``.

    Args:
        seed (int or numpy.random.Generator or None): the seed, or a generator to draw from.
        spread (float): the half-width of the log-squeezing interval.

    Returns:
        LocalSymplectic: the transformation.
    """
    if spread < 0:
        raise InvalidInput(f"The spread must be non-negative, got {spread}")
    rng = np.random.default_rng(seed)

    def _factor():
        theta, phi = rng.uniform(0.0, 2 * np.pi, size=2)
        x = np.exp(rng.uniform(-spread, spread))
        return rotation(theta) @ squeeze(x) @ rotation(phi)

    return LocalSymplectic(_factor(), _factor())


def mirror_c2(cov):
    """Mirror mode 2's momentum: ``B → S3 B S3`` and ``C → C S3``.

    On a standard form this flips the sign of ``c2``.
    """
    return CovarianceMatrix.from_blocks(cov.A, S3 @ cov.B @ S3, cov.C @ S3)
