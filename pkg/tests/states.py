# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

import math

import numpy as np

from gaussian_separability.standard_form import StandardForm
from gaussian_separability.symplectic import CovarianceMatrix


def tmsv_form(r):
    """Standard form of the two-mode squeezed vacuum."""
    c, s = math.cosh(2 * r) / 2, math.sinh(2 * r) / 2
    return StandardForm(c, c, s, -s)


def tmsv_matrix(r):
    """The two-mode squeezed vacuum in its usual frame."""
    c, s = math.cosh(2 * r) / 2, math.sinh(2 * r) / 2
    return CovarianceMatrix.from_blocks(c * np.eye(2), c * np.eye(2), s * np.diag([1.0, -1.0]))


def random_form(rng, a_range=(0.5, 3.0)):
    """A random standard form with ``|c2| <= c1``, not necessarily physical."""
    a, b = rng.uniform(*a_range, size=2)
    c1 = rng.uniform(0.0, math.sqrt(a * b))
    c2 = rng.uniform(-1.0, 1.0) * c1
    return StandardForm(a, b, c1, c2)
