# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
P-representation certificates.

A two-mode Gaussian state is a mixture of coherent states iff, in some locally squeezed frame,
its covariance matrix ``V'`` satisfies ``V' - I/2 >= 0``. For a standard form, the squeezing
``S = diag(1/√r1, √r1) ⊕ diag(1/√r2, √r2)`` with the extremal parameters of
:func:`squeeze_params` reaches that frame whenever the state is separable.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize, stats

from .criteria import c1sq_bound
from .exceptions import InvalidInput
from .linalg import DEFAULT_TOL, min_eigenvalue, sym_eigen
from .standard_form import from_standard
from .symplectic import apply, LocalSymplectic, squeeze


_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SqueezeParams:
    """The squeezing parameters ``r1``, ``r2`` and the correlation ratio ``t = |c2|/c1``."""

    r1: float
    r2: float
    t: float


@dataclass(frozen=True, eq=False)
class PFunctionParams:
    """A Gaussian P-function: its mean and its covariance ``Ṽ = V' - I/2``."""

    cov: np.ndarray
    mean: np.ndarray = field(default_factory=lambda: np.zeros(4))

    def __post_init__(self):
        cov = np.array(self.cov, dtype=float)
        if cov.shape != (4, 4):
            raise InvalidInput(f"The P-function covariance is 4×4, got {cov.shape}")
        cov = (cov + cov.T) / 2
        mean = np.array(self.mean, dtype=float).reshape(4)
        cov.setflags(write=False)
        mean.setflags(write=False)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "mean", mean)


@dataclass(frozen=True, eq=False)
class PrepCertificate:
    """Proof that a standard form has a P-representation.

    Attributes:
        squeeze (SqueezeParams): the squeezing parameters.
        pfun (PFunctionParams): the P-function in the squeezed frame.
        lambda_eigs (tuple): the eigenvalues of ``V - S Sᵀ/2``, all at least ``-tol``.
        frame (LocalSymplectic): the squeezing ``S``, with ``V' = S⁻¹ V S⁻ᵀ``.
    """

    squeeze: SqueezeParams
    pfun: PFunctionParams
    lambda_eigs: tuple
    frame: LocalSymplectic


def _check_range(a, b, t):
    if a < 0.5 or b < 0.5:
        raise InvalidInput(f"Local variances must be at least 1/2, got a={a}, b={b}")
    if not 0 <= t <= 1:
        raise InvalidInput(f"The ratio t must be in [0, 1], got {t}")


def _radicand(a, b, t):
    return (a * b * (1 - t * t)) ** 2 + t * (a + b * t) * (a * t + b)


def squeeze_params(a, b, t):
    """Return the extremal squeezing parameters for ``(a, b, t)``.

    ``r1 = [ab(1-t²) + √S] / (at + b)`` and ``r2 = [ab(1-t²) + √S] / (a + bt)`` with
    ``S = a²b²(1-t²)² + t(a+bt)(at+b)``. They always satisfy ``1 <= r1 <= 2a`` and
    ``1 <= r2 <= 2b``.

    Raises:
        InvalidInput: if ``a`` or ``b`` is below 1/2 or ``t`` is outside ``[0, 1]``.
    """
    _check_range(a, b, t)
    numerator = a * b * (1 - t * t) + math.sqrt(_radicand(a, b, t))
    r1 = numerator / (a * t + b)
    r2 = numerator / (a + b * t)
    # absorb rounding at the ends of the range
    r1 = min(max(r1, 1.0), 2 * a)
    r2 = min(max(r2, 1.0), 2 * b)
    return SqueezeParams(r1=r1, r2=r2, t=t)


def _half_gaps(a, b, t):
    """Return ``(a - r1/2, b - r2/2)`` at the extremal parameters, without cancellation."""
    root = math.sqrt(_radicand(a, b, t))
    base = a * b * (1 + t * t)
    gap_a = t * (4 * a * a - 1) * (a + b * t) / (2 * (base + 2 * a * a * t + root))
    gap_b = t * (4 * b * b - 1) * (a * t + b) / (2 * (base + 2 * b * b * t + root))
    return gap_a, gap_b


def _blocks(form, r1, r2):
    """The q-block and p-block of ``V - S Sᵀ/2`` for a standard form."""
    q_block = (form.a - 1 / (2 * r1), form.b - 1 / (2 * r2), form.c1)
    p_block = (form.a - r1 / 2, form.b - r2 / 2, form.c2)
    return q_block, p_block


def _pair_eigs(alpha, beta, gamma):
    center = (alpha + beta) / 2
    radius = math.hypot((alpha - beta) / 2, gamma)
    return center + radius, center - radius


def lambda_eigs(form, r1, r2):
    """Return the eigenvalues ``(λ1+, λ1-, λ2+, λ2-)`` of ``V - S Sᵀ/2`` in closed form.

    ``λ1±`` come from the position quadratures, ``λ2±`` from the momentum quadratures.
    """
    q_block, p_block = _blocks(form, r1, r2)
    return _pair_eigs(*q_block) + _pair_eigs(*p_block)


def prep_margins(form, r1, r2):
    """Return the named margins of the P-representation conditions."""
    (alpha, beta, c1), (gamma, delta, c2) = _blocks(form, r1, r2)
    return {
        "product_q": alpha * beta - c1**2,
        "product_p": gamma * delta - c2**2,
        "trace_q": alpha + beta,
        "trace_p": gamma + delta,
    }


def prep_test(form, r1, r2, tol=DEFAULT_TOL):
    """Check the P-representation condition in the frame squeezed by ``(r1, r2)``.

    Both the product inequalities and the trace inequalities are required; together they are
    equivalent to every :func:`lambda_eigs` being at least ``-tol``.
    """
    return min(prep_margins(form, r1, r2).values()) >= -tol


def _frame(r1, r2):
    return LocalSymplectic(squeeze(1 / math.sqrt(r1)), squeeze(1 / math.sqrt(r2)))


def prep_certificate(form, tol=DEFAULT_TOL):
    """Build a P-representation certificate for a standard form, if there is one.

    Args:
        form (StandardForm): the standard form (canonicalized first).
        tol (float): the tolerance on the P-representation margins.

    Returns:
        PrepCertificate or None: the certificate, or ``None`` if the extremal squeezing does not
        reach a classical frame.
    """
    form = form.canonical()
    if form.a < 0.5 - tol or form.b < 0.5 - tol:
        return None
    a, b = max(form.a, 0.5), max(form.b, 0.5)
    if form.c1 == 0:
        params = SqueezeParams(r1=2 * a, r2=2 * b, t=0.0)
    else:
        params = squeeze_params(a, b, min(abs(form.c2) / form.c1, 1.0))
    return certificate_at(form, params, tol)


def certificate_at(form, params, tol=DEFAULT_TOL):
    """Build the certificate for a standard form in the frame squeezed by ``params``.

    Returns:
        PrepCertificate or None: the certificate, or ``None`` if the frame is not classical.
    """
    if not prep_test(form, params.r1, params.r2, tol):
        _log.debug("No P-representation at r1=%r r2=%r", params.r1, params.r2)
        return None
    frame = _frame(params.r1, params.r2)
    squeezed = apply(frame.inverse(), from_standard(form))
    pfun = PFunctionParams(cov=squeezed.V - np.eye(4) / 2)
    return PrepCertificate(
        squeeze=params,
        pfun=pfun,
        lambda_eigs=lambda_eigs(form, params.r1, params.r2),
        frame=frame,
    )


def boundary_identity(a, b, t):
    """Evaluate both sides of the boundary coincidence identity.

    The left-hand side is ``(a - r1/2)(b - r2/2)/t²`` at the extremal squeezing parameters, the
    right-hand side is :func:`~gaussian_separability.criteria.c1sq_bound`. At ``t = 0`` the
    left-hand side takes its limit ``(a - 1/(4a))(b - 1/(4b))``.

    Returns:
        tuple: ``(lhs, rhs)``.
    """
    _check_range(a, b, t)
    rhs = c1sq_bound(a, b, t)
    if t == 0:
        lhs = (a - 1 / (4 * a)) * (b - 1 / (4 * b))
    else:
        gap_a, gap_b = _half_gaps(a, b, t)
        lhs = gap_a * gap_b / t**2
    return lhs, rhs


def extremality_conditions(a, b, t, r1, r2):
    """Return the residuals of the two stationarity equations, symmetric in ``r1`` and ``r2``.

    ``r1 = (r2·a/t + 1/2) / (a + r2/(2t))`` and its partner, multiplied through by ``t``.
    """
    res1 = r1 - (r2 * a + t / 2) / (a * t + r2 / 2)
    res2 = r2 - (r1 * b + t / 2) / (b * t + r1 / 2)
    return res1, res2


def extremal_condition_residual(a, b, r1, r2):
    """Residual of the stationarity condition with ``t`` eliminated."""
    lhs = (b - r2 / 2) * (a - 1 / (2 * r1)) / r2**2
    rhs = (a - r1 / 2) * (b - 1 / (2 * r2)) / r1**2
    return lhs - rhs


def chi(cov, lam):
    """Zero-mean Gaussian characteristic function ``exp(-λᵀVλ/2)``."""
    lam = np.asarray(lam, dtype=float)
    return float(np.exp(-0.5 * lam @ cov.V @ lam))


def p_characteristic(pfun, lam):
    """Characteristic function ``exp(-λᵀṼλ/2)`` of the (zero-mean) P-function."""
    lam = np.asarray(lam, dtype=float)
    return float(np.exp(-0.5 * lam @ pfun.cov @ lam))


def p_function_density(pfun, alpha, tol=DEFAULT_TOL):
    """Evaluate the Gaussian P-function at the phase-space point ``alpha``.

    Raises:
        InvalidInput: if the P-function is singular (a delta-like distribution).
    """
    if min_eigenvalue(pfun.cov) <= tol:
        raise InvalidInput("The P-function covariance is singular, it has no density")
    return float(stats.multivariate_normal(mean=pfun.mean, cov=pfun.cov).pdf(alpha))


def _psd_root(cov, tol):
    eigen = sym_eigen(cov)
    if eigen.eigenvalues[0] < -tol:
        raise InvalidInput(f"The covariance is not positive semi-definite: {eigen.eigenvalues[0]}")
    scales = np.sqrt(np.clip(eigen.eigenvalues, 0.0, None))
    return eigen.eigenvectors @ np.diag(scales) @ eigen.eigenvectors.T


def sample_p(pfun, n, seed=None, tol=DEFAULT_TOL):
    """Draw samples from a Gaussian P-function and estimate its covariance.

    Args:
        pfun (PFunctionParams): the P-function.
        n (int): the number of samples.
        seed (int or numpy.random.Generator or None): the seed.
        tol (float): the tolerance on the positivity of the covariance.

    Returns:
        tuple: ``(samples, cov_estimate)``, an ``n×4`` array and the 4×4 estimate of ``Ṽ``
        around the known mean. ``cov_estimate + I/2`` estimates the squeezed-frame ``V'``.

    Raises:
        InvalidInput: if ``n`` is not positive or the covariance is not positive semi-definite.
    """
    if n <= 0:
        raise InvalidInput(f"The number of samples must be positive, got {n}")
    root = _psd_root(pfun.cov, tol)
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal((n, 4))
    samples = pfun.mean + noise @ root
    centered = samples - pfun.mean
    estimate = centered.T @ centered / n
    _log.debug("Drew %d samples from the P-function", n)
    return samples, estimate


def moment_zscores(pfun, cov_estimate, n, tol=DEFAULT_TOL):
    """Return the per-entry z-scores of a covariance estimate from ``n`` samples.

    The scores are taken against the covariance :func:`sample_p` actually draws from, where the
    eigenvalues of ``Ṽ`` within ``tol`` below zero are clipped. The standard error of entry
    ``(i, j)`` is ``√((Ṽii Ṽjj + Ṽij²)/n)``. Entries with a zero standard error score 0 when the
    estimate is exact.
    """
    root = _psd_root(pfun.cov, tol)
    cov = root @ root.T
    variance = np.outer(np.diag(cov), np.diag(cov)) + cov**2
    stderr = np.sqrt(np.clip(variance, 0.0, None) / n)
    diff = np.asarray(cov_estimate, dtype=float) - cov
    with np.errstate(divide="ignore", invalid="ignore"):
        scores = np.where(stderr > 0, diff / np.where(stderr > 0, stderr, 1.0), 0.0)
    scores = np.where((stderr == 0) & (np.abs(diff) > 0), np.inf, scores)
    return scores


def _prep_bounds(a, b, t, r1, r2):
    bound_q = (a - 1 / (2 * r1)) * (b - 1 / (2 * r2))
    bound_p = (a - r1 / 2) * (b - r2 / 2)
    return bound_q, bound_p


def _ridge(a, b, t, r1):
    """Maximize ``min(bound_q, bound_p/t²)`` over ``r2`` for a fixed ``r1``."""

    def gap(r2):
        bound_q, bound_p = _prep_bounds(a, b, t, r1, r2)
        return bound_q - bound_p / t**2

    if gap(2 * b) <= 0:
        r2 = 2 * b
    elif gap(1.0) >= 0:
        r2 = 1.0
    else:
        r2 = optimize.brentq(gap, 1.0, 2 * b, xtol=1e-14)
    bound_q, bound_p = _prep_bounds(a, b, t, r1, r2)
    return min(bound_q, bound_p / t**2), r2


def maximize_prep_bound(a, b, t, grid=400):
    """Maximize the P-representation bound on ``c1²`` over the squeezing parameters.

    The value ``min(bound_q, bound_p/t²)`` is evaluated on a ``grid×grid`` mesh of
    ``[1, 2a]×[1, 2b]``, then refined along the ridge where both bounds cross: the ridge is
    sampled at every grid value of ``r1`` and its best sample is polished by a bounded search.

    Returns:
        tuple: ``(value, r1, r2)`` at the maximum.
    """
    _check_range(a, b, t)
    if t == 0:
        # bound_p >= 0 on the whole box
        return _prep_bounds(a, b, t, 2 * a, 2 * b)[0], 2 * a, 2 * b
    r1_axis = np.linspace(1.0, 2 * a, grid)
    r2_axis = np.linspace(1.0, 2 * b, grid)
    r1_mesh, r2_mesh = np.meshgrid(r1_axis, r2_axis, indexing="ij")
    bound_q, bound_p = _prep_bounds(a, b, t, r1_mesh, r2_mesh)
    values = np.minimum(bound_q, bound_p / t**2)
    i, j = np.unravel_index(np.argmax(values), values.shape)
    best = (float(values[i, j]), float(r1_axis[i]), float(r2_axis[j]))
    if 2 * a - 1 < 1e-12 or 2 * b - 1 < 1e-12:
        return best
    ridge = [_ridge(a, b, t, r1)[0] for r1 in r1_axis]
    k = int(np.argmax(ridge))
    lo, hi = r1_axis[max(k - 1, 0)], r1_axis[min(k + 1, grid - 1)]
    result = optimize.minimize_scalar(
        lambda r1: -_ridge(a, b, t, r1)[0],
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    value, r2 = _ridge(a, b, t, result.x)
    if value > best[0]:
        best = (value, float(result.x), float(r2))
    return best
