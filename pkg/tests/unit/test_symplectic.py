# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

import math

import numpy as np
import pytest

from gaussian_separability.exceptions import InvalidInput
from gaussian_separability.standard_form import from_standard, StandardForm
from gaussian_separability.symplectic import (
    apply,
    CovarianceMatrix,
    is_symplectic,
    J,
    LocalSymplectic,
    mirror_c2,
    OMEGA,
    random_local_symplectic,
    rotation,
    S3,
    squeeze,
    SymplecticForm,
)


def test_symplectic_form():
    form = SymplecticForm()
    assert np.array_equal(form.J @ form.J, -np.eye(2))
    assert np.array_equal(form.Omega, -form.Omega.T)
    assert np.array_equal(OMEGA[2:, 2:], J)


def test_covariance_blocks(sample_form):
    cov = from_standard(sample_form)
    assert np.array_equal(cov.A, np.eye(2))
    assert np.array_equal(cov.B, 0.8 * np.eye(2))
    assert np.array_equal(cov.C, np.diag([0.3, 0.15]))


def test_covariance_rejects_non_symmetric():
    matrix = np.eye(4)
    matrix[0, 3] = 0.2
    with pytest.raises(InvalidInput):
        CovarianceMatrix(matrix)
    with pytest.raises(InvalidInput):
        CovarianceMatrix(np.eye(2))


def test_rotation():
    assert np.array_equal(rotation(0), np.eye(2))
    assert np.allclose(rotation(math.pi / 2), J, atol=1e-15)
    assert np.allclose(rotation(math.pi), -np.eye(2), atol=1e-15)
    assert np.linalg.det(rotation(0.3)) == pytest.approx(1.0)


def test_squeeze():
    assert np.array_equal(squeeze(1), np.eye(2))
    assert np.array_equal(squeeze(2), np.diag([2.0, 0.5]))
    assert np.array_equal(squeeze(2) @ squeeze(0.5), np.eye(2))
    with pytest.raises(InvalidInput):
        squeeze(0)
    with pytest.raises(InvalidInput):
        squeeze(-1.0)


def test_local_symplectic_validates_determinant():
    with pytest.raises(InvalidInput):
        LocalSymplectic(np.diag([1.0, -1.0]), np.eye(2))
    with pytest.raises(InvalidInput):
        LocalSymplectic(np.eye(2), 2 * np.eye(2))


def test_apply_identity(sample_form):
    cov = from_standard(sample_form)
    assert apply(LocalSymplectic.identity(), cov).allclose(cov, atol=0)


def test_apply_half_turn(sample_form):
    cov = from_standard(sample_form)
    half_turn = LocalSymplectic(rotation(math.pi), rotation(math.pi))
    assert apply(half_turn, cov).allclose(cov, atol=1e-15)


def test_apply_squeezes_vacuum(vacuum_cov):
    result = apply(LocalSymplectic(squeeze(2), np.eye(2)), vacuum_cov)
    assert np.allclose(result.A, np.diag([2.0, 0.125]))
    assert np.allclose(result.B, np.eye(2) / 2)
    assert np.array_equal(result.V, result.V.T)


def test_is_symplectic():
    assert is_symplectic(rotation(0.3))
    assert is_symplectic(squeeze(3))
    assert not is_symplectic(S3)


def test_random_local_symplectic():
    first = random_local_symplectic(42)
    second = random_local_symplectic(42)
    assert np.array_equal(first.matrix, second.matrix)
    for seed in range(100):
        transform = random_local_symplectic(seed)
        assert is_symplectic(transform.s1, 1e-10)
        assert is_symplectic(transform.s2, 1e-10)


def test_random_local_symplectic_without_spread():
    transform = random_local_symplectic(3, spread=0)
    for factor in (transform.s1, transform.s2):
        assert np.allclose(factor @ factor.T, np.eye(2), atol=1e-12)
    with pytest.raises(InvalidInput):
        random_local_symplectic(3, spread=-1)


def test_compose(sample_form, rng):
    cov = from_standard(sample_form)
    first = random_local_symplectic(rng)
    second = random_local_symplectic(rng)
    chained = apply(second, apply(first, cov))
    assert chained.allclose(apply(second.compose(first), cov), atol=1e-10)
    assert apply(first.inverse(), apply(first, cov)).allclose(cov, atol=1e-10)


def test_mirror_c2(sample_form, vacuum_cov):
    cov = from_standard(sample_form)
    mirrored = mirror_c2(cov)
    assert mirrored.allclose(from_standard(StandardForm(1.0, 0.8, 0.3, -0.15)), atol=0)
    assert mirror_c2(mirrored).allclose(cov, atol=0)
    assert mirror_c2(vacuum_cov).allclose(vacuum_cov, atol=0)
