# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Physicality and separability criteria for two-mode Gaussian states.

All the criteria return margins (the slack of each inequality) rather than bare booleans: a
margin of at least ``-tol`` counts as satisfied.
"""

import enum
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from .exceptions import InvalidInput, NotAState, NotPhysical
from .linalg import DEFAULT_TOL, hermitian_embedding, min_eigenvalue
from .standard_form import from_standard, reduce
from .symplectic import J, OMEGA


_log = logging.getLogger(__name__)


class Separability(enum.Enum):
    """The outcome of a separability test."""

    YES = enum.auto()
    """Returned when every margin is above the tolerance."""
    NO = enum.auto()
    """Returned when a margin is below ``-tol``."""
    BOUNDARY = enum.auto()
    """Returned when the smallest margin lies within ``[-tol, tol]``. Counts as separable."""


@dataclass(frozen=True)
class Verdict:
    """The result of :func:`simon_separable`.

    Attributes:
        physical (bool): whether the state satisfies the uncertainty principle.
        separable (Separability): the tri-state separability outcome.
        margins (dict): the slack of each inequality, by name.
    """

    physical: bool
    separable: Separability
    margins: dict = field(default_factory=dict)

    @property
    def is_separable(self):
        return self.physical and self.separable != Separability.NO


@dataclass(frozen=True, eq=False)
class WitnessVectors:
    """Coefficients of the EPR-like operators ``u = dᵀξ₁ + fᵀξ₂`` and ``v = gᵀξ₁ + hᵀξ₂``."""

    d: np.ndarray
    f: np.ndarray
    g: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        for name in ("d", "f", "g", "h"):
            vector = np.array(getattr(self, name), dtype=float).reshape(2)
            if not np.all(np.isfinite(vector)):
                raise InvalidInput(f"Witness vector {name} has non-finite entries")
            vector.setflags(write=False)
            object.__setattr__(self, name, vector)

    @classmethod
    def epr(cls):
        """The ``x1 - x2``, ``p1 + p2`` pair."""
        return cls(d=(1, 0), f=(-1, 0), g=(0, 1), h=(0, 1))

    @classmethod
    def subsidiary(cls, d, f, sign=1):
        """Build the vectors satisfying ``g = Jᵀd`` and ``h = ±Jᵀf``."""
        if sign not in (1, -1):
            raise InvalidInput(f"The sign must be +1 or -1, got {sign}")
        d = np.asarray(d, dtype=float)
        f = np.asarray(f, dtype=float)
        return cls(d=d, f=f, g=J.T @ d, h=sign * (J.T @ f))

    @classmethod
    def from_flat(cls, values):
        values = np.asarray(values, dtype=float)
        return cls(d=values[0:2], f=values[2:4], g=values[4:6], h=values[6:8])

    def as_flat(self):
        return np.concatenate([self.d, self.f, self.g, self.h])

    def transformed(self, transform):
        """Map vectors used on ``S V Sᵀ`` to vectors giving the same value on ``V``."""
        s1t, s2t = transform.s1.T, transform.s2.T
        return WitnessVectors(d=s1t @ self.d, f=s2t @ self.f, g=s1t @ self.g, h=s2t @ self.h)


def _det_margin(form, product):
    a, b, c1, c2 = form.a, form.b, form.c1, form.c2
    return 4 * (a * b - c1**2) * (a * b - c2**2) - (a**2 + b**2 + 2 * product - 0.25)


def physicality_margins(form):
    """Return the named margins of the uncertainty principle for a standard form.

    The ``uncertainty`` margin is the smallest eigenvalue of the real embedding of
    ``V + (i/2)Ω``; it catches the states the closed-form conditions let through.
    """
    embedding = hermitian_embedding(from_standard(form).V, OMEGA)
    return {
        "a": form.a - 0.5,
        "b": form.b - 0.5,
        "det": _det_margin(form, form.c1 * form.c2),
        "uncertainty": min_eigenvalue(embedding),
    }


def physicality(form, tol=DEFAULT_TOL):
    """Check the uncertainty principle ``V + (i/2)Ω >= 0``.

    Args:
        form (StandardForm): the standard form, with ``a, b > 0``.
        tol (float): the tolerance on the margins.

    Returns:
        tuple: ``(physical, margin)`` where ``margin`` is the smallest margin.
    """
    if form.a <= 0 or form.b <= 0:
        raise InvalidInput(f"Local variances must be positive, got a={form.a}, b={form.b}")
    margins = physicality_margins(form)
    closed_form_ok = min(margins["a"], margins["b"], margins["det"]) >= -tol
    embedding_ok = margins["uncertainty"] >= -tol
    if closed_form_ok != embedding_ok:
        _log.debug("Closed-form physicality (%s) and embedding (%s) disagree for %r",
                   closed_form_ok, embedding_ok, form)
    margin = min(margins.values())
    return margin >= -tol, margin


def partial_transpose_physicality(form, tol=DEFAULT_TOL):
    """Physicality of the partially transposed state (the mirrored form)."""
    return physicality(form.mirrored(), tol)


def dgcz_sum_bound(form):
    """Return ``√((2a-1)(2b-1)) - (|c1| + |c2|)``."""
    radicand = max((2 * form.a - 1) * (2 * form.b - 1), 0.0)
    return math.sqrt(radicand) - (abs(form.c1) + abs(form.c2))


def _classify(margin, tol):
    if margin < -tol:
        return Separability.NO
    if margin <= tol:
        return Separability.BOUNDARY
    return Separability.YES


def simon_separable(form, tol=DEFAULT_TOL):
    """Evaluate the exact separability criterion for two-mode Gaussian states.

    The state is separable iff ``4(ab - c1²)(ab - c2²) >= a² + b² + 2|c1 c2| - 1/4`` and
    ``√((2a-1)(2b-1)) >= |c1| + |c2|``.

    Args:
        form (StandardForm): a physical standard form.
        tol (float): the tolerance on the margins.

    Returns:
        Verdict: the verdict, with the ``simon`` and ``sum`` margins.

    Raises:
        NotPhysical: if the state violates the uncertainty principle.
    """
    physical, margin = physicality(form, tol)
    if not physical:
        raise NotPhysical(f"The state is not physical (margin {margin})")
    margins = {
        "simon": _det_margin(form, abs(form.c1 * form.c2)),
        "sum": dgcz_sum_bound(form),
    }
    return Verdict(physical=True, separable=_classify(min(margins.values()), tol), margins=margins)


def _quadratic_part(cov, w):
    x = np.concatenate([w.d, w.f])
    y = np.concatenate([w.g, w.h])
    return float(x @ cov.V @ x + y @ cov.V @ y)


def witness_value(cov, w):
    """Return the separability witness margin of the EPR-like operators ``w``.

    A negative value certifies that the state is entangled (or unphysical); a non-negative value
    is inconclusive.
    """
    return _quadratic_part(cov, w) - (abs(w.d @ J @ w.g) + abs(w.f @ J @ w.h))


def kennard_value(cov, w):
    """Return the uncertainty-relation margin of the EPR-like operators ``w``.

    A negative value certifies that the state is unphysical.
    """
    return _quadratic_part(cov, w) - abs(w.d @ J @ w.g + w.f @ J @ w.h)


def c1sq_bound(a, b, t):
    """Return the largest ``c1²`` allowed for a separable state on the line ``|c2| = t·c1``.

    The bracket ``P - 2√S`` is evaluated through its rationalized form
    ``t²(4a²-1)(4b²-1) / (P + 2√S)``, which stays accurate when ``t`` goes to 0.

    Args:
        a (float): the first local variance, at least 1/2.
        b (float): the second local variance, at least 1/2.
        t (float): the ratio ``|c2|/c1``, in ``[0, 1]``.

    Returns:
        float: the bound on ``c1²``.
    """
    if not 0 <= t <= 1:
        raise InvalidInput(f"The ratio t must be in [0, 1], got {t}")
    if a < 0.5 or b < 0.5:
        raise InvalidInput(f"Local variances must be at least 1/2, got a={a}, b={b}")
    p = 2 * a * b * (1 + t**2) + t
    s = a**2 * b**2 * (1 - t**2) ** 2 + t * (a + b * t) * (a * t + b)
    return (4 * a**2 - 1) * (4 * b**2 - 1) / (4 * (p + 2 * math.sqrt(s)))


def _scaled_epr(form, weights):
    u, v, up, vp = weights
    s1 = -1.0 if form.c1 >= 0 else 1.0
    s2 = -1.0 if form.c2 >= 0 else 1.0
    return WitnessVectors(d=(u, 0), f=(s1 * v, 0), g=(0, up), h=(0, s2 * vp))


def _best_scaled_epr(form):
    """Minimize the witness margin over the weighted EPR pairs of the standard-form frame."""
    standard = from_standard(form)

    def _objective(weights):
        norm = np.linalg.norm(weights)
        if norm == 0:
            return 0.0
        return witness_value(standard, _scaled_epr(form, weights / norm))

    result = optimize.minimize(_objective, np.ones(4), method="Powell")
    norm = np.linalg.norm(result.x)
    if norm == 0:
        return None
    return _scaled_epr(form, result.x / norm)


def _epr_candidates(form):
    yield _scaled_epr(form, (1, 1, 1, 1))
    yield WitnessVectors.epr()
    scaled = _best_scaled_epr(form)
    if scaled is not None:
        yield scaled


def search_witness(cov, seed=None, iterations=64, tol=DEFAULT_TOL):
    """Look for EPR-like operators whose witness margin is negative.

    The EPR-like pairs of the standard-form frame are tried first, including the one with the
    best local weights, then ``iterations`` random restarts refined with Powell's method over
    the normalized 8-vector.

    Args:
        cov (CovarianceMatrix): the covariance matrix.
        seed (int or numpy.random.Generator or None): the seed for the random restarts.
        iterations (int): the number of random restarts.
        tol (float): the witness margin must be below ``-tol``.

    Returns:
        WitnessVectors or None: the best witness found, if it certifies entanglement.
    """
    try:
        reduction = reduce(cov)
    except NotAState:
        _log.debug("Witness search without a standard form")
    else:
        for candidate in _epr_candidates(reduction.form):
            candidate = candidate.transformed(reduction.transform)
            if witness_value(cov, candidate) < -tol:
                return candidate

    def _objective(values):
        norm = np.linalg.norm(values)
        if norm == 0:
            return 0.0
        return witness_value(cov, WitnessVectors.from_flat(values / norm))

    rng = np.random.default_rng(seed)
    best, best_value = None, 0.0
    for iteration in range(iterations):
        start = rng.standard_normal(8)
        result = optimize.minimize(_objective, start, method="Powell")
        if result.fun < best_value:
            best_value = float(result.fun)
            best = WitnessVectors.from_flat(result.x / np.linalg.norm(result.x))
        if best_value < -tol:
            _log.debug("Witness found after %d restarts (margin %r)", iteration + 1, best_value)
            return best
    return None
