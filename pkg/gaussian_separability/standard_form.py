# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Reduction of two-mode covariance matrices to their standard form.

Any covariance matrix can be brought by local symplectic transformations to::

    [[a,  0,  c1, 0 ],
     [0,  a,  0,  c2],
     [c1, 0,  b,  0 ],
     [0,  c2, 0,  b ]]

with ``c1 >= |c2|``; the sign of ``c2`` is the sign of ``det C``, a local invariant.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import NotAState, NotPhysical
from .linalg import sym_eigen
from .symplectic import apply, CovarianceMatrix, LocalSymplectic, rotation, squeeze


_log = logging.getLogger(__name__)

_POSDEF_TOL = 1e-12


@dataclass(frozen=True)
class StandardForm:
    """The four local invariants ``(a, b, c1, c2)`` of a two-mode covariance matrix."""

    a: float
    b: float
    c1: float
    c2: float

    def canonical(self):
        """Return the equivalent form with ``c1 >= |c2|``.

        Swapping ``c1`` and ``c2`` is a quarter-turn of both modes, flipping both signs is a
        half-turn of mode 2.
        """
        c1, c2 = self.c1, self.c2
        if abs(c2) > abs(c1):
            c1, c2 = c2, c1
        if c1 < 0:
            c1, c2 = -c1, -c2
        return StandardForm(self.a, self.b, c1 + 0.0, c2 + 0.0)

    def mirrored(self):
        """Return the partially transposed form, where ``c2`` changes sign."""
        return StandardForm(self.a, self.b, self.c1, -self.c2)

    @property
    def t(self):
        """The ratio ``|c2| / |c1|`` (0 when ``c1`` vanishes)."""
        return abs(self.c2) / abs(self.c1) if self.c1 else 0.0


@dataclass(frozen=True)
class ReductionResult:
    """A standard form and the transformation ``S`` with ``S V Sᵀ`` in that form."""

    form: StandardForm
    transform: LocalSymplectic


@dataclass(frozen=True)
class DgczForm:
    """A standard form in the ``M = 2V`` normalization, with parties ordered so ``n >= m``.

    Attributes:
        swapped (bool): ``True`` if the parties were relabeled to get ``n >= m``.
    """

    n: float
    m: float
    c: float
    cprime: float
    swapped: bool = False


def _svd2(matrix):
    """Closed-form signed SVD of a 2×2 matrix.

    Returns ``(phi, theta, sx, sy)`` with ``K = R(phi) · diag(sx, sy) · R(theta)``, where
    ``R(x) = [[cos x, -sin x], [sin x, cos x]]``, ``sx >= |sy|`` and ``sign(sy) = sign(det K)``.
    """
    e = (matrix[0, 0] + matrix[1, 1]) / 2
    f = (matrix[0, 0] - matrix[1, 1]) / 2
    g = (matrix[1, 0] + matrix[0, 1]) / 2
    h = (matrix[1, 0] - matrix[0, 1]) / 2
    q = math.hypot(e, h)
    r = math.hypot(f, g)
    a1 = math.atan2(g, f)
    a2 = math.atan2(h, e)
    return (a2 + a1) / 2, (a2 - a1) / 2, q + r, q - r


def _det2(block):
    return block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0]


def _diagonalizing_rotation(block):
    """Return a rotation ``R`` (det +1) such that ``R · block · Rᵀ`` is diagonal."""
    vectors = sym_eigen(block).eigenvectors
    if _det2(vectors) < 0:
        vectors = vectors[:, ::-1]
    return vectors.T


def reduce(cov):
    """Reduce a covariance matrix to its standard form.

    The reduction rotates each mode to diagonalize ``A`` and ``B``, squeezes each mode so that
    ``A → √det(A)·I`` and ``B → √det(B)·I``, then rotates both modes by the singular angles of
    ``C``.

    Args:
        cov (CovarianceMatrix): the covariance matrix.

    Returns:
        ReductionResult: the canonical standard form and the local transformation reaching it.

    Raises:
        NotAState: if ``A`` or ``B`` is not positive definite.
    """
    for name, block in (("A", cov.A), ("B", cov.B)):
        lowest = sym_eigen(block).eigenvalues[0]
        if lowest <= _POSDEF_TOL:
            raise NotAState(f"Block {name} is not positive definite (eigenvalue {lowest})")

    diagonalize = LocalSymplectic(_diagonalizing_rotation(cov.A), _diagonalizing_rotation(cov.B))
    step = apply(diagonalize, cov)
    x1 = (step.A[1, 1] / step.A[0, 0]) ** 0.25
    x2 = (step.B[1, 1] / step.B[0, 0]) ** 0.25
    equalize = LocalSymplectic(squeeze(x1), squeeze(x2))
    step = apply(equalize, step)
    phi, theta, sx, sy = _svd2(step.C)
    align = LocalSymplectic(rotation(phi), rotation(-theta))
    transform = align.compose(equalize.compose(diagonalize))

    a = math.sqrt(_det2(cov.A))
    b = math.sqrt(_det2(cov.B))
    form = StandardForm(a, b, sx, sy)
    _log.debug("Reduced to a=%r b=%r c1=%r c2=%r", a, b, sx, sy)
    return ReductionResult(form, transform)


def from_standard(form):
    """Materialize the 4×4 covariance matrix of a standard form."""
    return CovarianceMatrix.from_blocks(
        form.a * np.eye(2), form.b * np.eye(2), np.diag([form.c1, form.c2])
    )


def to_dgcz(form, tol=0.0):
    """Convert a standard form to the ``M = 2V`` normalization with ``n >= m``.

    Args:
        form (StandardForm): the standard form, with ``a, b >= 1/2``.
        tol (float): the tolerance on the ``a, b >= 1/2`` conditions.

    Returns:
        DgczForm: the rescaled, relabeled form. Relabeling the parties transposes ``C``, which
        leaves the diagonal entries ``c`` and ``c'`` unchanged.

    Raises:
        NotPhysical: if ``a`` or ``b`` is below ``1/2``.
    """
    if form.a < 0.5 - tol or form.b < 0.5 - tol:
        raise NotPhysical(f"Local variances must be at least 1/2, got a={form.a}, b={form.b}")
    swapped = form.b > form.a
    n, m = 2 * max(form.a, form.b), 2 * min(form.a, form.b)
    return DgczForm(n=n, m=m, c=2 * form.c1, cprime=2 * form.c2, swapped=swapped)


def from_dgcz(form):
    """Convert back from the ``M = 2V`` normalization (parties stay in ``n >= m`` order)."""
    return StandardForm(form.n / 2, form.m / 2, form.c / 2, form.cprime / 2)
