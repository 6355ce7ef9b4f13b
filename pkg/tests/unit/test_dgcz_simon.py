# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

import logging
import math

import numpy as np
import pytest

from gaussian_separability.criteria import c1sq_bound
from gaussian_separability.dgcz_simon import (
    constraint_residual,
    convexity_gap,
    dgcz_c_bound,
    dgcz_prep_margins,
    discriminant_factored,
    f_dgcz,
    find_root,
    kappa_eigs,
    outer_root,
    prep_conditions_dgcz,
    r2_branches,
    r2_continuous,
    simon_certificate,
    simon_frame,
    simon_prep_equivalence,
    simon_ratio_bounds,
    simon_x4,
    simon_y4,
    standard_form_ii,
    StandardFormII,
    weak_sum_condition,
    x_of,
)
from gaussian_separability.exceptions import (
    BranchError,
    DomainError,
    InvalidInput,
    NoBracket,
    PoleError,
)
from gaussian_separability.prep import squeeze_params
from gaussian_separability.standard_form import DgczForm, StandardForm, to_dgcz

from ..states import tmsv_form


@pytest.fixture
def dgcz_form():
    return DgczForm(n=2.0, m=1.5, c=0.6, cprime=0.2)


def test_x_of():
    assert x_of(1.5, 2.0) == pytest.approx(6.0)
    assert x_of(1.0, 2.0) == pytest.approx(1.0)
    assert x_of(2 + math.sqrt(3), 2.0) == pytest.approx(-13.9282032)


def test_x_of_errors():
    with pytest.raises(PoleError):
        x_of(2.0, 2.0)
    with pytest.raises(InvalidInput):
        x_of(0.5, 2.0)


def test_r2_branches():
    branch = r2_branches(1.5, 2.0, 1.5)
    assert branch.X == pytest.approx(6.0)
    assert branch.r2_plus == pytest.approx((-5 + math.sqrt(79)) / 3)
    assert branch.r2_plus * branch.r2_minus == pytest.approx(-6.0)
    for r2 in (branch.r2_plus, branch.r2_minus):
        assert 1.5 * r2**2 + (6.0 - 1) * r2 - 6.0 * 1.5 == pytest.approx(0.0, abs=1e-12)


def test_r2_branches_negative_discriminant():
    # with n < m, X reaches its largest value -(n + √(n²-1))² at r1 = n + √(n²-1)
    n = 1.5
    r1 = n + math.sqrt(n**2 - 1)
    assert x_of(r1, n) == pytest.approx(-((n + math.sqrt(n**2 - 1)) ** 2))
    with pytest.raises(BranchError):
        r2_branches(r1, n, 2.0)


def test_discriminant_factored():
    first, second = discriminant_factored(1.0, 1.5)
    assert first * second == pytest.approx(9.0)
    for x in (-13.9282032, -3.0, 0.5, 6.0):
        first, second = discriminant_factored(x, 1.5)
        assert first * second == pytest.approx((1 - x) ** 2 + 4 * 1.5**2 * x)


def test_r2_continuous():
    assert r2_continuous(1.0, 2.0, 1.5) == pytest.approx(1.0)
    assert r2_continuous(2.0, 2.0, 1.5) == 1.5
    assert r2_continuous(1.7, 2.0, 2.0) == 1.7
    # continuous across the pole
    below = r2_continuous(2.0 - 1e-7, 2.0, 1.5)
    above = r2_continuous(2.0 + 1e-7, 2.0, 1.5)
    assert below == pytest.approx(1.5, abs=1e-5)
    assert above == pytest.approx(1.5, abs=1e-5)


def test_f_dgcz_endpoints(dgcz_form):
    assert f_dgcz(1.0, dgcz_form) == pytest.approx(0.4)
    assert f_dgcz(2.0, dgcz_form) == pytest.approx(
        math.sqrt(3) * 0.6 - 0.2 / math.sqrt(3) - math.sqrt(3 * 1.25)
    )
    assert f_dgcz(2.0, dgcz_form) == pytest.approx(-1.01273, abs=1e-5)


def test_dgcz_c_bound(dgcz_form):
    assert dgcz_c_bound(dgcz_form) == pytest.approx(math.sqrt(2 * (1.5 - 1 / 1.5)) - 0.6)


def test_find_root(dgcz_form):
    root = find_root(dgcz_form)
    assert 1.0 < root < 2.0
    assert f_dgcz(root, dgcz_form) == pytest.approx(0.0, abs=1e-10)
    r2 = r2_continuous(root, 2.0, 1.5)
    assert constraint_residual(2.0, 1.5, root, r2) == pytest.approx(0.0, abs=1e-12)
    sf2 = standard_form_ii(dgcz_form, root)
    assert prep_conditions_dgcz(sf2)
    assert weak_sum_condition(sf2) >= -1e-10


def test_find_root_uncorrelated():
    assert find_root(DgczForm(n=2.0, m=1.5, c=0.0, cprime=0.0)) == 1.0


def test_find_root_prime_zero():
    form = DgczForm(n=2.0, m=1.5, c=0.6, cprime=0.0)
    root = find_root(form)
    assert f_dgcz(root, form) == pytest.approx(0.0, abs=1e-10)


def test_find_root_equal_variances():
    form = to_dgcz(StandardForm(1.0, 1.0, 0.6, 0.3))
    root = find_root(form)
    assert r2_continuous(root, form.n, form.m) == root
    assert prep_conditions_dgcz(standard_form_ii(form, root))


def test_find_root_no_bracket():
    with pytest.raises(NoBracket):
        find_root(to_dgcz(tmsv_form(0.5)))
    with pytest.raises(NoBracket):
        find_root(DgczForm(n=2.0, m=1.5, c=0.2, cprime=0.6))


def test_outer_root(dgcz_form):
    with pytest.raises(InvalidInput):
        outer_root(dgcz_form, 1.5)
    root = outer_root(dgcz_form, 10.0)
    if root is not None:
        assert root > 2.0
        assert f_dgcz(root, dgcz_form) == pytest.approx(0.0, abs=1e-8)


def test_standard_form_ii(dgcz_form):
    sf2 = standard_form_ii(dgcz_form, 1.0)
    assert sf2 == StandardFormII(n1=2.0, n2=2.0, m1=1.5, m2=1.5, c1=0.6, c2=0.2)
    np.testing.assert_array_equal(np.diag(sf2.matrix), [2.0, 2.0, 1.5, 1.5])
    assert sf2.matrix[0, 2] == sf2.matrix[2, 0] == 0.6


def test_dgcz_prep_margins_closed_form_matches_eigenvalues(dgcz_form):
    root = find_root(dgcz_form)
    margins = dgcz_prep_margins(standard_form_ii(dgcz_form, root))
    eigen = margins.pop("eigen")
    assert (min(margins.values()) >= -1e-10) == (eigen >= -1e-10)


def test_prep_conditions_dgcz_needs_the_traces(caplog):
    sf2 = StandardFormII(n1=0.5, n2=2.0, m1=0.5, m2=2.0, c1=0.0, c2=0.0)
    margins = dgcz_prep_margins(sf2)
    assert margins["product_q"] > 0
    assert margins["trace_q"] < 0
    with caplog.at_level(logging.WARNING):
        assert not prep_conditions_dgcz(sf2)
    assert caplog.records == []


def test_convexity_gap():
    lhs, rhs = convexity_gap(3.0, 1.2, 2.0, 1.1)
    assert lhs == pytest.approx(1.555635, rel=1e-6)
    assert rhs == pytest.approx(lhs)
    lhs, rhs = convexity_gap(3.0, 2.0, 2.0, 1.1)
    assert lhs > rhs
    with pytest.raises(DomainError):
        convexity_gap(0.5, 1.0, 2.0, 2.0)


def test_simon_x4(sample_form):
    assert simon_x4(sample_form) == pytest.approx(0.42 / 0.39)
    low, high = simon_ratio_bounds(sample_form)
    assert (low, high) == (1.0, pytest.approx(1.25))
    assert low <= simon_x4(sample_form) <= high
    assert simon_ratio_bounds(StandardForm(0.8, 1.0, 0.3, 0.1)) == (pytest.approx(0.8), 1.0)
    with pytest.raises(DomainError):
        simon_x4(StandardForm(1.0, 1.0, 0.0, 0.0))


def test_simon_x4_matches_extremal_ratio(sample_form):
    params = squeeze_params(1.0, 0.8, 0.5)
    assert simon_x4(sample_form) == pytest.approx(params.r1 / params.r2)


def test_simon_y4_interior(sample_form):
    x4 = simon_x4(sample_form)
    y4 = simon_y4(sample_form, x4)
    assert y4 == pytest.approx(1.272147, rel=1e-5)
    r1, r2 = simon_frame(sample_form)
    assert r1 == pytest.approx(1.170471, rel=1e-5)
    assert r2 == pytest.approx(1.086867, rel=1e-5)
    params = squeeze_params(1.0, 0.8, 0.5)
    # off the boundary Simon's frame differs from the extremal one
    assert y4 != pytest.approx(params.r1 * params.r2, rel=1e-3)


def test_simon_y4_on_the_boundary():
    c1 = math.sqrt(c1sq_bound(1.0, 1.0, 0.5))
    form = StandardForm(1.0, 1.0, c1, 0.5 * c1)
    x4 = simon_x4(form)
    assert x4 == pytest.approx(1.0)
    params = squeeze_params(1.0, 1.0, 0.5)
    assert simon_y4(form, x4) == pytest.approx(params.r1 * params.r2)
    assert simon_y4(form, x4) == pytest.approx(1 + math.sqrt(3) / 2)


def test_simon_y4_domain_error():
    with pytest.raises(DomainError):
        simon_y4(StandardForm(1.0, 1.0, 1.0, 0.5), 1.0)


def test_kappa_eigs_coincide_in_simon_frame(sample_form):
    x = simon_x4(sample_form) ** 0.25
    y = simon_y4(sample_form, x**4) ** 0.25
    kappas = kappa_eigs(sample_form, x, y)
    assert kappas[1] == pytest.approx(kappas[3])
    assert kappas[0] >= kappas[1] and kappas[2] >= kappas[3]


def test_simon_certificate(sample_form, tmsv, vacuum):
    certificate = simon_certificate(sample_form)
    assert certificate is not None
    assert certificate.squeeze.r1 == pytest.approx(1.170471, rel=1e-5)
    assert min(certificate.lambda_eigs) >= -1e-10
    assert simon_certificate(tmsv(0.5)) is None
    assert simon_certificate(vacuum) is None


def test_simon_prep_equivalence(sample_form, rng):
    for _index in range(200):
        x, y = rng.uniform(0.5, 2.0, size=2)
        kappas = kappa_eigs(sample_form, x, y)
        if abs(min(kappas[1], kappas[3]) - 0.5) < 1e-8:
            continue
        kappa_side, prep_side = simon_prep_equivalence(sample_form, x, y)
        assert kappa_side == prep_side
