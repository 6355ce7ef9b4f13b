# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""Gaussian Separability

Decide physicality, separability and P-representability of two-mode Gaussian states from their
covariance matrix, with explicit certificates.

Attributes:
    __version__ (str): this package's version.
"""

import importlib.metadata

from .analysis import AnalysisStatus, analyzer_from_config, SeparabilityAnalyzer
from .criteria import (
    c1sq_bound,
    dgcz_sum_bound,
    physicality,
    search_witness,
    Separability,
    simon_separable,
    Verdict,
    witness_value,
    WitnessVectors,
)
from .exceptions import (
    BracketError,
    BranchError,
    DomainError,
    InvalidInput,
    NoBracket,
    NotAState,
    NotPhysical,
    PoleError,
    SeparabilityError,
)
from .prep import prep_certificate, PrepCertificate, squeeze_params, SqueezeParams
from .standard_form import from_standard, reduce, StandardForm, to_dgcz
from .symplectic import apply, CovarianceMatrix, LocalSymplectic


# Set the version
try:
    __version__ = importlib.metadata.version("gaussian_separability")
except importlib.metadata.PackageNotFoundError:  # pragma: no cover
    __version__ = None
