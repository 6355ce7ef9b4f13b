# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Settings for the analysis pipeline.

Every field can be set from the environment with the ``GAUSSIAN_SEPARABILITY_`` prefix, for
example ``GAUSSIAN_SEPARABILITY_TOL=1e-8``. Command-line flags take precedence.
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Defaults for :class:`~gaussian_separability.analysis.SeparabilityAnalyzer`."""

    model_config = SettingsConfigDict(env_prefix="GAUSSIAN_SEPARABILITY_")

    tol: float = Field(default=1e-10, ge=0)
    seed: int = 0
    convention: Literal["half", "dgcz"] = "half"
    witness_restarts: int = Field(default=64, ge=0)
    spread: float = Field(default=1.0, ge=0)
    grid: int = Field(default=400, ge=2)
    workers: int = Field(default=4, ge=1)
    bisect_tol: float = Field(default=1e-12, gt=0)
