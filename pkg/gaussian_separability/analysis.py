# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Analysis pipeline.

This must remain independent from the command-line interface: the CLI only parses, calls the
:class:`SeparabilityAnalyzer` and serializes its reports.
"""

import enum
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from .criteria import (
    c1sq_bound,
    partial_transpose_physicality,
    physicality,
    physicality_margins,
    search_witness,
    Separability,
    simon_separable,
    witness_value,
)
from .dgcz_simon import (
    constraint_residual,
    dgcz_prep_margins,
    f_dgcz,
    find_root,
    kappa_eigs,
    prep_conditions_dgcz,
    r2_continuous,
    simon_frame,
    simon_prep_equivalence,
    simon_x4,
    standard_form_ii,
    weak_sum_condition,
)
from .exceptions import DomainError, InvalidInput, NoBracket, SeparabilityError
from .linalg import DEFAULT_TOL
from .prep import maximize_prep_bound, moment_zscores, prep_certificate, sample_p, squeeze_params
from .standard_form import from_standard, reduce, StandardForm, to_dgcz
from .symplectic import apply, CovarianceMatrix, random_local_symplectic


_log = logging.getLogger(__name__)

# Disagreements between constructions inside this band around the boundary are not flagged.
_CROSS_CHECK_BAND = 1e-6
_MAX_ATTEMPTS = 100_000


class AnalysisStatus(enum.Enum):
    """The outcome of an analysis."""

    OK = enum.auto()
    """Returned when every stage completed and the constructions agree."""
    UNPHYSICAL = enum.auto()
    """Returned when the matrix is not the covariance matrix of a quantum state."""
    NO_CERTIFICATE = enum.auto()
    """Returned when a P-function was required but the state has none."""
    INCONSISTENT = enum.auto()
    """Returned when the criteria and the certificates contradict each other."""


class BlocksInput(BaseModel):
    A: List[float] = Field(min_length=4, max_length=4)
    B: List[float] = Field(min_length=4, max_length=4)
    C: List[float] = Field(min_length=4, max_length=4)


class CovarianceInput(BaseModel):
    """An input document: either ``V`` (16 numbers, row-major) or ``blocks``."""

    V: Optional[List[float]] = Field(default=None, min_length=16, max_length=16)
    blocks: Optional[BlocksInput] = None
    mean: Optional[List[float]] = Field(default=None, min_length=4, max_length=4)
    tol: Optional[float] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _one_matrix(self):
        if (self.V is None) == (self.blocks is None):
            raise ValueError("Exactly one of 'V' and 'blocks' must be given")
        return self

    def to_covariance(self, convention="half"):
        """Build the covariance matrix, converting from ``M = 2V`` if needed.

        Raises:
            InvalidInput: if the matrix is not symmetric or not finite.
        """
        if self.V is not None:
            cov = CovarianceMatrix(np.reshape(self.V, (4, 4)))
        else:
            cov = CovarianceMatrix.from_blocks(self.blocks.A, self.blocks.B, self.blocks.C)
        if convention == "dgcz":
            cov = CovarianceMatrix(cov.V / 2)
        elif convention != "half":
            raise InvalidInput(f"Unknown convention: {convention}")
        return cov


def parse_input(text):
    """Parse an input document. Raises :class:`pydantic.ValidationError` when malformed."""
    return CovarianceInput.model_validate_json(text)


class FormReport(BaseModel):
    a: float
    b: float
    c1: float
    c2: float

    @classmethod
    def from_form(cls, form):
        return cls(a=form.a, b=form.b, c1=form.c1, c2=form.c2)


class VerdictReport(BaseModel):
    physical: bool
    separable: Optional[Literal["yes", "no", "boundary"]] = None
    margins: Dict[str, float]
    ppt_margin: Optional[float] = None


class WitnessReport(BaseModel):
    d: List[float]
    f: List[float]
    g: List[float]
    h: List[float]
    margin: float


class CertificateReport(BaseModel):
    r1: float
    r2: float
    t: float
    lambda_eigs: List[float]
    pfun_mean: List[float]
    pfun_cov: List[List[float]]


class DgczReport(BaseModel):
    certified: bool
    consistent: bool
    root: Optional[float] = None
    r2: Optional[float] = None
    f_at_root: Optional[float] = None
    constraint_residual: Optional[float] = None
    weak_sum_margin: Optional[float] = None
    margins: Dict[str, float] = Field(default_factory=dict)
    message: Optional[str] = None


class SimonReport(BaseModel):
    certified: bool
    consistent: bool
    x4: Optional[float] = None
    ratio: Optional[float] = None
    y4: Optional[float] = None
    kappa_residual: Optional[float] = None
    message: Optional[str] = None


class AnalysisReport(BaseModel):
    """Everything the pipeline found out about a covariance matrix."""

    status: str
    input: List[float]
    form: Optional[FormReport] = None
    verdict: Optional[VerdictReport] = None
    witness: Optional[WitnessReport] = None
    certificate: Optional[CertificateReport] = None
    dgcz: Optional[DgczReport] = None
    simon: Optional[SimonReport] = None
    message: Optional[str] = None
    timings: Optional[Dict[str, float]] = None


class RegionRow(BaseModel):
    t: float
    c1sq_bound: float
    grid_bound: float
    grid_r1: float
    grid_r2: float
    r1: float
    r2: float
    rel_gap: float


class SampleReport(BaseModel):
    status: str
    n: int
    seed: Optional[int] = None
    max_abs_z: Optional[float] = None
    zscores: Optional[List[List[float]]] = None
    expected: Optional[List[List[float]]] = None
    estimate: Optional[List[List[float]]] = None
    message: Optional[str] = None


class _Stopwatch:
    def __init__(self, enabled):
        self.enabled = enabled
        self.laps = {}
        self._last = time.perf_counter()

    def lap(self, name):
        now = time.perf_counter()
        if self.enabled:
            self.laps[name] = now - self._last
        self._last = now

    @property
    def result(self):
        return self.laps if self.enabled else None


def _separable_label(separable):
    return separable.name.lower()


class SeparabilityAnalyzer:
    """Run the separability pipeline on two-mode covariance matrices.

    Args:
        tol (float): the tolerance on every margin.
        seed (int): the seed of the witness search and of the random generators.
        witness_restarts (int): the number of random restarts of the witness search.
        spread (float): the log-squeezing spread of random local transformations.
        grid (int): the grid size of the P-representation bound maximization.
        workers (int): the number of threads of region scans.
        bisect_tol (float): the bracket width at which root searches stop.
    """

    def __init__(
        self,
        tol=DEFAULT_TOL,
        *,
        seed=0,
        witness_restarts=64,
        spread=1.0,
        grid=400,
        workers=4,
        bisect_tol=1e-12,
    ):
        if tol < 0:
            raise InvalidInput(f"The tolerance must be non-negative, got {tol}")
        self.tol = tol
        self.seed = seed
        self.witness_restarts = witness_restarts
        self.spread = spread
        self.grid = grid
        self.workers = workers
        self.bisect_tol = bisect_tol

    def analyze(self, cov, mean=None, timings=False):
        """Analyze a covariance matrix.

        The pipeline reduces the matrix to its standard form, checks physicality and
        separability, builds the P-representation certificate, and cross-checks it against the
        DGCZ and Simon constructions.

        Args:
            cov (CovarianceMatrix): the covariance matrix.
            mean (array-like or None): the first moments; they do not affect separability.
            timings (bool): whether to record the duration of each stage.

        Returns:
            AnalysisReport: the report. Its status is one of :class:`AnalysisStatus`.
        """
        clock = _Stopwatch(timings)
        report = {"input": cov.V.flatten().tolist()}
        try:
            reduction = reduce(cov)
        except SeparabilityError as e:
            _log.debug("Reduction failed: %s", e)
            return AnalysisReport(
                status=AnalysisStatus.UNPHYSICAL.name, message=str(e), **report
            )
        clock.lap("reduce")
        form = reduction.form
        report["form"] = FormReport.from_form(form)

        physical, _margin = physicality(form, self.tol)
        clock.lap("physicality")
        if not physical:
            report["verdict"] = VerdictReport(
                physical=False, margins=physicality_margins(form)
            )
            return AnalysisReport(
                status=AnalysisStatus.UNPHYSICAL.name,
                message="The state violates the uncertainty principle",
                timings=clock.result,
                **report,
            )

        verdict = simon_separable(form, self.tol)
        ppt_margin = partial_transpose_physicality(form, self.tol)[1]
        report["verdict"] = VerdictReport(
            physical=True,
            separable=_separable_label(verdict.separable),
            margins=verdict.margins,
            ppt_margin=ppt_margin,
        )
        clock.lap("criteria")

        if not verdict.is_separable:
            witness = search_witness(cov, self.seed, self.witness_restarts, self.tol)
            if witness is not None:
                report["witness"] = WitnessReport(
                    d=witness.d.tolist(),
                    f=witness.f.tolist(),
                    g=witness.g.tolist(),
                    h=witness.h.tolist(),
                    margin=witness_value(cov, witness),
                )
            clock.lap("witness")

        certificate = prep_certificate(form, self.tol)
        if certificate is not None:
            full = certificate.frame.inverse().compose(reduction.transform)
            pfun_mean = full.matrix @ np.asarray(mean if mean is not None else np.zeros(4))
            report["certificate"] = CertificateReport(
                r1=certificate.squeeze.r1,
                r2=certificate.squeeze.r2,
                t=certificate.squeeze.t,
                lambda_eigs=list(certificate.lambda_eigs),
                pfun_mean=pfun_mean.tolist(),
                pfun_cov=certificate.pfun.cov.tolist(),
            )
        clock.lap("certificate")

        dgcz = self._dgcz_cross_check(form, verdict)
        report["dgcz"] = dgcz
        clock.lap("dgcz")
        simon = self._simon_cross_check(form, verdict, certificate)
        report["simon"] = simon
        clock.lap("simon")

        consistent = dgcz.consistent and simon.consistent
        if verdict.separable == Separability.YES and certificate is None:
            consistent = False
        if verdict.separable == Separability.NO and certificate is not None:
            consistent = False
        near_boundary = abs(min(verdict.margins.values())) <= _CROSS_CHECK_BAND
        status = AnalysisStatus.OK
        if not consistent and not near_boundary:
            _log.warning("Inconsistent constructions for %r", form)
            status = AnalysisStatus.INCONSISTENT
        return AnalysisReport(status=status.name, timings=clock.result, **report)

    def _dgcz_cross_check(self, form, verdict):
        separable = verdict.is_separable
        near_boundary = abs(min(verdict.margins.values())) <= _CROSS_CHECK_BAND
        dgcz = to_dgcz(form, self.tol)
        try:
            root = find_root(dgcz, self.tol, self.bisect_tol)
        except NoBracket as e:
            return DgczReport(
                certified=False,
                consistent=not separable or near_boundary,
                message=str(e),
            )
        r2 = r2_continuous(root, dgcz.n, dgcz.m)
        sf2 = standard_form_ii(dgcz, root)
        certified = prep_conditions_dgcz(sf2, self.tol)
        try:
            f_root = f_dgcz(root, dgcz, self.tol)
        except DomainError:  # pragma: no cover
            f_root = None
        residual = constraint_residual(dgcz.n, dgcz.m, root, r2) if dgcz.n != dgcz.m else 0.0
        return DgczReport(
            certified=certified,
            consistent=certified == separable or near_boundary,
            root=root,
            r2=r2,
            f_at_root=f_root,
            constraint_residual=residual,
            weak_sum_margin=weak_sum_condition(sf2),
            margins=dgcz_prep_margins(sf2),
        )

    def _simon_cross_check(self, form, verdict, certificate):
        try:
            x4 = simon_x4(form)
            r1, r2 = simon_frame(form)
        except DomainError as e:
            return SimonReport(certified=False, consistent=True, message=str(e))
        x, y = math.sqrt(math.sqrt(x4)), (r1 * r2) ** 0.25
        kappas = kappa_eigs(form, x, y)
        kappa_side, prep_side = simon_prep_equivalence(form, x, y, self.tol)
        consistent = kappa_side == prep_side
        ratio = None
        if certificate is not None and form.c1 != 0:
            ratio = certificate.squeeze.r1 / certificate.squeeze.r2
            consistent = consistent and abs(x4 - ratio) <= 1e-8 * max(1.0, ratio)
        if prep_side and not verdict.is_separable:
            consistent = False
        return SimonReport(
            certified=prep_side,
            consistent=consistent,
            x4=x4,
            ratio=ratio,
            y4=r1 * r2,
            kappa_residual=kappas[1] - kappas[3],
        )

    def region_scan(self, a, b, t_steps, grid=None):
        """Compare the closed-form ``c1²`` bound with the maximized P-representation bound.

        The ``t`` grid is evaluated concurrently, the rows come back in ``t`` order.

        Returns:
            list: one :class:`RegionRow` per value of ``t`` in ``linspace(0, 1, t_steps)``.
        """
        if t_steps < 1:
            raise InvalidInput(f"At least one t step is needed, got {t_steps}")
        grid = grid or self.grid

        def _row(t):
            t = float(t)
            bound = c1sq_bound(a, b, t)
            value, grid_r1, grid_r2 = maximize_prep_bound(a, b, t, grid)
            params = squeeze_params(a, b, t)
            gap = abs(value - bound)
            return RegionRow(
                t=t,
                c1sq_bound=bound,
                grid_bound=value,
                grid_r1=grid_r1,
                grid_r2=grid_r2,
                r1=params.r1,
                r2=params.r2,
                rel_gap=gap / abs(bound) if bound else gap,
            )

        t_values = np.linspace(0.0, 1.0, t_steps) if t_steps > 1 else np.array([1.0])
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(_row, t_values))

    def random_standard_form(self, rng, kind, band=_CROSS_CHECK_BAND):
        """Draw a random physical standard form of the requested class.

        Args:
            rng (numpy.random.Generator): the generator.
            kind (str): ``separable``, ``entangled`` or ``boundary``.
            band (float): the distance to the boundary required for the first two classes.

        Returns:
            StandardForm: the form, canonicalized.
        """
        if kind not in ("separable", "entangled", "boundary"):
            raise InvalidInput(f"Unknown kind of state: {kind}")
        for _attempt in range(_MAX_ATTEMPTS):
            a, b = rng.uniform(0.5, 3.0, size=2)
            t = rng.uniform(0.0, 1.0)
            if kind == "boundary":
                c1 = math.sqrt(c1sq_bound(a, b, t))
                form = StandardForm(a, b, c1, -t * c1 if rng.uniform() < 0.5 else t * c1)
            else:
                c1 = rng.uniform(0.0, math.sqrt(a * b))
                sign = -1.0 if kind == "entangled" or rng.uniform() < 0.5 else 1.0
                form = StandardForm(a, b, c1, sign * t * c1)
            physical, margin = physicality(form, self.tol)
            if not physical or (kind != "boundary" and margin < band):
                continue
            smallest = min(simon_separable(form, self.tol).margins.values())
            if kind == "separable" and smallest > band:
                return form
            if kind == "entangled" and smallest < -band:
                return form
            if kind == "boundary" and abs(smallest) <= self.tol:
                return form
        raise SeparabilityError(f"No {kind} state found after {_MAX_ATTEMPTS} attempts")

    def random_states(self, kind, count, seed=None):
        """Draw random covariance matrices of the requested class.

        Each one is a random standard form conjugated by a random local transformation.
        """
        rng = np.random.default_rng(self.seed if seed is None else seed)
        states = []
        for _index in range(count):
            form = self.random_standard_form(rng, kind)
            transform = random_local_symplectic(rng, self.spread)
            states.append(apply(transform, from_standard(form)))
        return states

    def sample_report(self, cov, n, seed=None):
        """Sample the P-function of a state and compare the moments with the certificate.

        Returns:
            SampleReport: the z-scores of the reconstructed squeezed-frame covariance. Its
            status is ``NO_CERTIFICATE`` for states without a P-representation.
        """
        seed = self.seed if seed is None else seed
        try:
            form = reduce(cov).form
            physical, _margin = physicality(form, self.tol)
        except SeparabilityError as e:
            return SampleReport(status=AnalysisStatus.UNPHYSICAL.name, n=n, message=str(e))
        if not physical:
            return SampleReport(
                status=AnalysisStatus.UNPHYSICAL.name,
                n=n,
                message="The state violates the uncertainty principle",
            )
        certificate = prep_certificate(form, self.tol)
        if certificate is None:
            return SampleReport(
                status=AnalysisStatus.NO_CERTIFICATE.name,
                n=n,
                message="The state has no P-representation",
            )
        _samples, estimate = sample_p(certificate.pfun, n, seed, self.tol)
        zscores = moment_zscores(certificate.pfun, estimate, n, self.tol)
        half = np.eye(4) / 2
        return SampleReport(
            status=AnalysisStatus.OK.name,
            n=n,
            seed=seed,
            max_abs_z=float(np.max(np.abs(zscores))),
            zscores=zscores.tolist(),
            expected=(certificate.pfun.cov + half).tolist(),
            estimate=(estimate + half).tolist(),
        )


def analyzer_from_config(settings, **kwargs):
    """Get the analyzer from a settings object or a plain dictionary."""
    if not isinstance(settings, dict):
        settings = settings.model_dump()
    options = {
        key: settings[key]
        for key in ("seed", "witness_restarts", "spread", "grid", "workers", "bisect_tol")
        if key in settings
    }
    options.update(kwargs)
    return SeparabilityAnalyzer(settings.get("tol", DEFAULT_TOL), **options)
