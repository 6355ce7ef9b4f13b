# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

import json

import numpy as np
import pytest

from gaussian_separability.analysis import SeparabilityAnalyzer
from gaussian_separability.standard_form import from_standard, StandardForm
from gaussian_separability.symplectic import CovarianceMatrix

from .states import tmsv_form


@pytest.fixture
def vacuum():
    return StandardForm(0.5, 0.5, 0.0, 0.0)


@pytest.fixture
def vacuum_cov():
    return CovarianceMatrix(np.eye(4) / 2)


@pytest.fixture
def tmsv():
    return tmsv_form


@pytest.fixture
def separable_form():
    return StandardForm(1.0, 1.0, 0.6, 0.3)


@pytest.fixture
def sample_form():
    return StandardForm(1.0, 0.8, 0.3, 0.15)


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture
def analyzer():
    return SeparabilityAnalyzer(seed=7, witness_restarts=4, grid=60, workers=2)


@pytest.fixture
def write_input(tmp_path):
    def _write(document, name="state.json"):
        path = tmp_path / name
        if isinstance(document, StandardForm):
            document = {"V": from_standard(document).V.flatten().tolist()}
        elif isinstance(document, CovarianceMatrix):
            document = {"V": document.V.flatten().tolist()}
        path.write_text(json.dumps(document))
        return str(path)

    return _write
