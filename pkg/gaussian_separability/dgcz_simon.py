# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Two alternative constructions of the P-representation certificate.

The DGCZ construction works in the ``M = 2V`` normalization: it squeezes the state to a
"standard form II" where the squeezing parameters satisfy the constraint
``(n/r1 - 1)/(n·r1 - 1) = (m/r2 - 1)/(m·r2 - 1)`` and the matching condition ``f(r1) = 0``.
Only roots with ``1 <= r1 <= n`` are certified: past ``r1 = n`` no P-representation exists.

Simon's construction picks ``r1 = (xy)²`` and ``r2 = y²/x²`` so that the two smaller symplectic
eigenvalues ``κ-`` and ``κ'-`` coincide.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import BracketError, BranchError, DomainError, InvalidInput, NoBracket, PoleError
from .linalg import bisect_root, DEFAULT_TOL, min_eigenvalue
from .prep import certificate_at, prep_test, SqueezeParams


_log = logging.getLogger(__name__)

_OUTER_SAMPLES = 200


@dataclass(frozen=True)
class StandardFormII:
    """The squeezed DGCZ form ``M = [[n1, 0, c1, 0], [0, n2, 0, c2], [c1, 0, m1, 0], ...]``."""

    n1: float
    n2: float
    m1: float
    m2: float
    c1: float
    c2: float

    @property
    def matrix(self):
        return np.array(
            [
                [self.n1, 0.0, self.c1, 0.0],
                [0.0, self.n2, 0.0, self.c2],
                [self.c1, 0.0, self.m1, 0.0],
                [0.0, self.c2, 0.0, self.m2],
            ]
        )


@dataclass(frozen=True)
class BranchPoint:
    """Both solutions ``r2±`` of ``r2(m·r2 - 1) = X(m - r2)`` at a given ``r1``."""

    r1: float
    X: float
    r2_plus: float
    r2_minus: float


def x_of(r1, n):
    """Return ``X = r1(n·r1 - 1)/(n - r1)``.

    Raises:
        PoleError: at ``r1 = n``.
    """
    if r1 < 1:
        raise InvalidInput(f"r1 must be at least 1, got {r1}")
    if r1 == n:
        raise PoleError(f"X has a pole at r1 = n = {n}")
    return r1 * (n * r1 - 1) / (n - r1)


def r2_branches(r1, n, m):
    """Solve the quadratic ``m·r2² + (X - 1)·r2 - X·m = 0`` for both branches.

    Each root is computed with the formula that avoids cancellation.

    Raises:
        BranchError: if the discriminant ``(1 - X)² + 4m²X`` is negative.
    """
    x = x_of(r1, n)
    disc = (1 - x) ** 2 + 4 * m**2 * x
    if disc < 0:
        raise BranchError(f"Negative discriminant {disc} at r1={r1} (n={n}, m={m})")
    root = math.sqrt(disc)
    if 1 - x >= 0:
        plus = (1 - x + root) / (2 * m)
    else:
        plus = 2 * m * x / (root + x - 1)
    if 1 - x <= 0:
        minus = (1 - x - root) / (2 * m)
    else:
        minus = -2 * m * x / (1 - x + root)
    return BranchPoint(r1=r1, X=x, r2_plus=plus, r2_minus=minus)


def r2_continuous(r1, n, m):
    """The continuous physical branch: ``r2+`` below ``n``, ``m`` at ``n``, ``r2-`` above.

    For ``n = m`` the constraint is solved by ``r2 = r1``.
    """
    if n == m:
        return r1
    if r1 == n:
        return m
    branch = r2_branches(r1, n, m)
    return branch.r2_plus if r1 < n else branch.r2_minus


def discriminant_factored(X, m):
    """Return the two factors of ``(1 - X)² + 4m²X``."""
    s = math.sqrt(m**2 - 1)
    return X + (m + s) ** 2, X + (m - s) ** 2


def _sqrt_clamped(value, tol):
    if value < -tol:
        raise DomainError(f"Negative square-root argument {value}")
    return math.sqrt(max(value, 0.0))


def f_dgcz(r1, form, tol=DEFAULT_TOL):
    """The DGCZ matching function ``f(r1)`` along the continuous branch ``r2(r1)``.

    ``f = √(r1r2)|c| - |c'|/√(r1r2) - [√((n·r1-1)(m·r2-1)) - √((n/r1-1)(m/r2-1))]``.

    Raises:
        DomainError: if a square-root argument is below ``-tol``.
    """
    n, m = form.n, form.m
    r2 = r2_continuous(r1, n, m)
    scale = math.sqrt(r1 * r2)
    upper = _sqrt_clamped((n * r1 - 1) * (m * r2 - 1), tol)
    lower = _sqrt_clamped((n / r1 - 1) * (m / r2 - 1), tol)
    return scale * abs(form.c) - abs(form.cprime) / scale - (upper - lower)


def dgcz_c_bound(form):
    """Margin of the weak bound ``|c| <= √(n(m - 1/m))``."""
    return math.sqrt(form.n * (form.m - 1 / form.m)) - abs(form.c)


def find_root(form, tol=DEFAULT_TOL, xtol=1e-12):
    """Find ``r1`` in ``[1, n]`` with ``f(r1) = 0``.

    Args:
        form (DgczForm): the state in the ``M = 2V`` normalization.
        tol (float): the tolerance on the bracketing conditions.
        xtol (float): the bisection stops when the bracket is narrower.

    Returns:
        float: the root.

    Raises:
        NoBracket: if ``|c| < |c'|`` or if
            ``√((n²-1)(m²-1)) < √(nm)|c| + |c'|/√(nm)``: the state fails the
            separability-derived bound.
    """
    n, m = form.n, form.m
    f_one = abs(form.c) - abs(form.cprime)
    if f_one < -tol:
        raise NoBracket(f"f(1) = {f_one} is negative")
    nm = math.sqrt(n * m)
    bound = math.sqrt((n**2 - 1) * (m**2 - 1)) - (nm * abs(form.c) + abs(form.cprime) / nm)
    if bound < -tol:
        raise NoBracket(f"The separability-derived bound fails by {-bound}")
    if f_one <= 0:
        return 1.0
    if f_dgcz(n, form, tol) >= 0:
        return n
    try:
        root = bisect_root(lambda r1: f_dgcz(r1, form, tol), 1.0, n, xtol)
    except BracketError as e:
        raise NoBracket(str(e)) from e
    _log.debug("DGCZ root r1=%r for %r", root, form)
    return root


def outer_root(form, upper, tol=DEFAULT_TOL):
    """Look for a root of ``f`` on ``(n, upper]``, along the ``r2-`` branch.

    Roots there are never certified; this is a diagnostic.

    Returns:
        float or None: the first root found, if any.
    """
    n = form.n
    if upper <= n:
        raise InvalidInput(f"The upper end {upper} must exceed n = {n}")
    previous = None
    for r1 in np.linspace(n, upper, _OUTER_SAMPLES + 1)[1:]:
        try:
            value = f_dgcz(r1, form, tol)
        except (DomainError, BranchError):
            previous = None
            continue
        if value == 0:
            return float(r1)
        if previous is not None and previous[1] * value < 0:
            try:
                return bisect_root(lambda x: f_dgcz(x, form, tol), previous[0], r1)
            except (DomainError, BranchError):
                return None
        previous = (r1, value)
    return None


def standard_form_ii(form, r1_star):
    """Squeeze a DGCZ form by ``(r1*, r2(r1*))``."""
    r2 = r2_continuous(r1_star, form.n, form.m)
    scale = math.sqrt(r1_star * r2)
    return StandardFormII(
        n1=form.n * r1_star,
        n2=form.n / r1_star,
        m1=form.m * r2,
        m2=form.m / r2,
        c1=form.c * scale,
        c2=form.cprime / scale,
    )


def constraint_residual(n, m, r1, r2):
    """Residual of the squeezing constraint ``(n/r1-1)/(n·r1-1) - (m/r2-1)/(m·r2-1)``."""
    return (n / r1 - 1) / (n * r1 - 1) - (m / r2 - 1) / (m * r2 - 1)


def _signed_sqrt(value):
    return math.copysign(math.sqrt(abs(value)), value)


def dgcz_prep_margins(sf2):
    """Return the named margins of the P-representation conditions on a standard form II.

    The ``eigen`` margin is the smallest eigenvalue of ``M - I``.
    """
    return {
        "product_q": _signed_sqrt((sf2.n1 - 1) * (sf2.m1 - 1)) - abs(sf2.c1),
        "product_p": _signed_sqrt((sf2.n2 - 1) * (sf2.m2 - 1)) - abs(sf2.c2),
        "trace_q": (sf2.n1 - 1) + (sf2.m1 - 1),
        "trace_p": (sf2.n2 - 1) + (sf2.m2 - 1),
        "eigen": min_eigenvalue(sf2.matrix - np.eye(4)),
    }


def prep_conditions_dgcz(sf2, tol=DEFAULT_TOL):
    """Check the P-representation conditions on a standard form II.

    Both product inequalities and both trace inequalities are required: without the trace
    conditions, two negative factors pass the product test.
    """
    margins = dgcz_prep_margins(sf2)
    eigen = margins.pop("eigen")
    closed_form = min(margins.values()) >= -tol
    if closed_form != (eigen >= -tol):
        _log.warning("Closed-form conditions and eigenvalues of M - I disagree for %r", sf2)
    return closed_form


def weak_sum_condition(sf2):
    """Margin of ``√((n1+n2-2)(m1+m2-2)) >= |c1| + |c2|``."""
    radicand = max((sf2.n1 + sf2.n2 - 2) * (sf2.m1 + sf2.m2 - 2), 0.0)
    return math.sqrt(radicand) - (abs(sf2.c1) + abs(sf2.c2))


def convexity_gap(n1, n2, m1, m2):
    """Return both sides of ``√((n1+n2-2)(m1+m2-2)) >= √((n1-1)(m1-1)) + √((n2-1)(m2-1))``.

    Equality holds iff ``(n2-1)/(n1-1) = (m2-1)/(m1-1)``, the squeezing constraint.

    Raises:
        DomainError: if a square-root argument is negative.
    """
    radicands = ((n1 + n2 - 2) * (m1 + m2 - 2), (n1 - 1) * (m1 - 1), (n2 - 1) * (m2 - 1))
    if min(radicands) < 0:
        raise DomainError(f"Negative square-root arguments: {radicands}")
    lhs = math.sqrt(radicands[0])
    rhs = math.sqrt(radicands[1]) + math.sqrt(radicands[2])
    return lhs, rhs


def simon_x4(form):
    """Return ``x⁴ = (|c1|a + |c2|b)/(|c2|a + |c1|b)``, equal to ``r1/r2``.

    Raises:
        DomainError: if ``c1 = c2 = 0``.
    """
    c1, c2 = abs(form.c1), abs(form.c2)
    if c1 == 0 and c2 == 0:
        raise DomainError("x⁴ is undefined for uncorrelated states")
    return (c1 * form.a + c2 * form.b) / (c2 * form.a + c1 * form.b)


def simon_ratio_bounds(form):
    """Return the interval that contains ``r1/r2``: ``[1, a/b]`` if ``a >= b``."""
    ratio = form.a / form.b
    return (1.0, ratio) if ratio >= 1 else (ratio, 1.0)


def _kappa_minus(form, x2):
    q = form.a * x2 + form.b / x2
    p = form.a / x2 + form.b * x2
    q_minus = q - math.hypot(form.a * x2 - form.b / x2, 2 * form.c1)
    p_minus = p - math.hypot(form.a / x2 - form.b * x2, 2 * form.c2)
    return q_minus, p_minus


def simon_y4(form, x4):
    """Return the ``y⁴`` that makes the two smaller eigenvalues ``κ-`` and ``κ'-`` equal.

    Raises:
        DomainError: if ``c1² >= ab`` or ``c2² >= ab``, where a smaller eigenvalue vanishes.
    """
    q_minus, p_minus = _kappa_minus(form, math.sqrt(x4))
    if q_minus <= 0 or p_minus <= 0:
        raise DomainError(f"The quotient for y⁴ is not positive ({p_minus}/{q_minus})")
    return p_minus / q_minus


def kappa_eigs(form, x, y):
    """Return ``(κ+, κ-, κ'+, κ'-)`` for the frame parameters ``(x, y)``."""
    x2, y2 = x * x, y * y
    q = form.a * x2 + form.b / x2
    p = form.a / x2 + form.b * x2
    q_root = math.hypot(form.a * x2 - form.b / x2, 2 * form.c1)
    p_root = math.hypot(form.a / x2 - form.b * x2, 2 * form.c2)
    return (
        y2 * (q + q_root) / 2,
        y2 * (q - q_root) / 2,
        (p + p_root) / (2 * y2),
        (p - p_root) / (2 * y2),
    )


def simon_frame(form):
    """Return Simon's squeezing parameters ``(r1, r2) = (x²y², y²/x²)``."""
    x4 = simon_x4(form)
    y4 = simon_y4(form, x4)
    x2, y2 = math.sqrt(x4), math.sqrt(y4)
    return x2 * y2, y2 / x2


def simon_certificate(form, tol=DEFAULT_TOL):
    """P-representation certificate in Simon's frame.

    Returns:
        PrepCertificate or None: the certificate, or ``None`` if the frame is undefined or not
        classical.
    """
    form = form.canonical()
    try:
        r1, r2 = simon_frame(form)
    except DomainError as e:
        _log.debug("No Simon frame: %s", e)
        return None
    t = abs(form.c2) / form.c1
    return certificate_at(form, SqueezeParams(r1=r1, r2=r2, t=t), tol)


def simon_prep_equivalence(form, x, y, tol=DEFAULT_TOL):
    """Return both sides of ``κ-, κ'- >= 1/2  ⇔  P-representation at (x²y², y²/x²)``."""
    kappas = kappa_eigs(form, x, y)
    kappa_side = min(kappas[1], kappas[3]) >= 0.5 - tol
    return kappa_side, prep_test(form, (x * y) ** 2, (y / x) ** 2, tol)
