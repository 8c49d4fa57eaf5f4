"""Rectangle audits of the distance-sum identity for xi.

For a rectangle symmetric about the critical line, the distance-weighted
sum over enclosed zeros equals a boundary integral of log xi, split into
a vertical part (log-modulus differences, identically zero by the
functional symmetry of xi) and a horizontal part (continuously varied
argument differences).  The auditor evaluates both sides numerically,
decomposes the argument into its factor contributions, measures every
asymptotic estimate against its exactly computed counterpart, and checks
the resulting equality of line and strip zero counts.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from scipy.integrate import quad as _scipy_quad

from .config import DEFAULT_CONFIG, DEFAULT_ZERO_GUARD, EvalConfig
from .errors import (AccuracyError, DomainError, InconsistencyError,
                     OnPathZeroError)
from .arg_tracking import ZetaArgLine, arg_xi_components, probe_ordinate
from .special_functions import LOG_PI, log_abs_xi, log_gamma
from .zero_census import FullCensus, ZeroRecord, full_census

DEFAULT_QUADRATURE_TOL = 1e-8
DEFAULT_IDENTITY_TOL = 1e-6
DEFAULT_VERTICAL_TOL = 1e-7
DEFAULT_ASYMPTOTIC_TOL = 0.5


@dataclass(frozen=True)
class AuditRectangle:
    """Strip rectangle [alpha, 1-alpha] x [-T, T] hugging the critical line."""

    alpha: float
    T: float

    def __post_init__(self):
        if not (0.0 < self.alpha < 0.5):
            raise DomainError(f"alpha must lie in (0, 1/2), got {self.alpha!r}")
        if not (self.T > 0.0):
            raise DomainError(f"T must be positive, got {self.T!r}")

    @property
    def width_factor(self) -> float:
        return 1.0 - 2.0 * self.alpha


@dataclass
class ComponentCheck:
    """One argument summand: computed value, asymptotic prediction, error.

    samples holds per-sigma rows (sigma, computed, predicted, error) when
    the component varies along the top edge.
    """

    computed: float
    predicted: float
    error: float
    samples: list[tuple[float, float, float, float]] | None = None


@dataclass
class TermBreakdown:
    """Factor-by-factor audit of arg xi on the top edge of the rectangle."""

    arg_quadratic: ComponentCheck
    arg_pi_power: ComponentCheck
    arg_gamma: ComponentCheck
    arg_zeta: ComponentCheck
    c_sigma_integral: ComponentCheck
    log_skip: ComponentCheck
    arctan_pair: ComponentCheck


@dataclass
class LittlewoodReport:
    """Both sides of the rectangle identity plus residuals and checks."""

    rectangle: AuditRectangle
    lhs_sum_distances: float
    rhs_vertical: float
    rhs_horizontal: float
    rhs_total: float
    arg_xi_integral: float
    asymptotic_rhs: float
    n_of_T: int
    residual_identity: float
    residual_asymptotic: float
    residual_theorem: int
    checks: dict[str, bool] = field(default_factory=dict)
    breakdown: TermBreakdown | None = None
    flags: list[str] = field(default_factory=list)

    def __post_init__(self):
        total = self.rhs_vertical + self.rhs_horizontal
        if abs(total - self.rhs_total) > 1e-12 * max(1.0, abs(total)):
            raise AccuracyError("rhs_total must equal vertical + horizontal")


def _quad(f: Callable[[float], float], a: float, b: float, tol: float,
          perturb: float = 1e-9) -> float:
    """Adaptive Gauss-Kronrod integral with node-perturbation retry.

    A node colliding with a zero of the integrand's underlying function
    raises from f; the node is nudged once before giving up.
    """
    def g(x: float) -> float:
        try:
            return f(x)
        except (OnPathZeroError, ValueError):
            return f(x + perturb)

    val, est = _scipy_quad(g, a, b, epsabs=tol * 0.1, epsrel=1e-12, limit=400)
    if est > tol and est > 1e-10 * abs(val):
        raise AccuracyError(
            f"quadrature error estimate {est:.3e} above tolerance {tol:.3e}")
    return val


def validate_rectangle(rect: AuditRectangle, census: FullCensus,
                       cfg: EvalConfig = DEFAULT_CONFIG,
                       zero_guard: float = DEFAULT_ZERO_GUARD) -> None:
    """Admissibility: census clean, T off ordinates, no off-line zeros.

    The census's three-way agreement discharges the requirement that no
    zero with real part outside [alpha, 1-alpha] lies below T: every
    strip zero found is on the line, hence strictly inside.
    """
    if census.report.flags:
        raise InconsistencyError(
            "census carries flags; refusing to audit: "
            + "; ".join(census.report.flags))
    if abs(census.report.T - rect.T) > 1e-12 * max(1.0, rect.T):
        raise DomainError(
            f"census was taken at T={census.report.T}, rectangle has T={rect.T}")
    gammas = [r.ordinate for r in census.records]
    probe_ordinate(rect.T, cfg, known_zeros=gammas, guard=zero_guard)


def lhs_sum_distances(rect: AuditRectangle, zeros: Sequence[ZeroRecord],
                      census_flags: Sequence[str] = ()) -> float:
    """Distance sum over enclosed zeros: (1/2 - alpha) * 2 * N0(T).

    Zeros come in conjugate pairs over [-T, 0) and (0, T], hence the
    factor 2.  With every enclosed zero on the critical line each
    contributes its distance 1/2 - alpha to the left edge.
    """
    if census_flags:
        raise InconsistencyError(
            "census incomplete or inconsistent: " + "; ".join(census_flags))
    n0 = sum(1 for r in zeros if 0.0 < r.ordinate < rect.T)
    return (0.5 - rect.alpha) * 2.0 * n0


def rhs_vertical_integral(rect: AuditRectangle, cfg: EvalConfig = DEFAULT_CONFIG,
                          quadrature_tol: float = DEFAULT_QUADRATURE_TOL) -> float:
    """(1/2pi) int_{-T}^{T} (log|xi(alpha+it)| - log|xi(1-alpha+it)|) dt.

    Identically zero by |xi(alpha+it)| = |xi(1-alpha+it)|; the integrand
    symmetry is asserted pointwise at every quadrature node, so the
    integral value measures only evaluation and quadrature noise.
    """
    cfg_t = cfg.sized_for(rect.T)
    a = rect.alpha

    def integrand(t: float) -> float:
        left = log_abs_xi(complex(a, t), cfg_t)
        right = log_abs_xi(complex(1.0 - a, t), cfg_t)
        diff = left - right
        if abs(diff) > 1e-9 * max(1.0, abs(left), abs(right)):
            raise AccuracyError(
                f"|xi| symmetry violated at t={t}: log moduli {left!r} vs {right!r}")
        return diff

    return _quad(integrand, -rect.T, rect.T, quadrature_tol) / (2.0 * math.pi)


def _horizontal_lines(rect: AuditRectangle, cfg: EvalConfig,
                      line_up: ZetaArgLine | None = None,
                      line_down: ZetaArgLine | None = None,
                      ) -> tuple[ZetaArgLine, ZetaArgLine]:
    if line_up is None:
        line_up = ZetaArgLine(rect.T, cfg)
    if line_down is None:
        line_down = ZetaArgLine(-rect.T, cfg)
    return line_up, line_down


def rhs_horizontal_integral(rect: AuditRectangle,
                            cfg: EvalConfig = DEFAULT_CONFIG,
                            quadrature_tol: float = DEFAULT_QUADRATURE_TOL,
                            line_up: ZetaArgLine | None = None,
                            line_down: ZetaArgLine | None = None,
                            ) -> tuple[float, float]:
    """Top/bottom-edge argument integrals of the rectangle identity.

    Returns (full, reduced): the full form
    (1/2pi) int (arg xi(sigma+iT) - arg xi(sigma-iT)) dsigma with both
    arguments tracked independently, and the reduced form
    (1/pi) int arg xi(sigma+iT) dsigma obtained from the argument
    antisymmetry.  Both must agree within the quadrature tolerance.
    """
    line_up, line_down = _horizontal_lines(rect, cfg, line_up, line_down)
    T, a = rect.T, rect.alpha

    def arg_up(sig: float) -> float:
        return sum(arg_xi_components(sig, T, cfg, line_up).values())

    def arg_down(sig: float) -> float:
        return sum(arg_xi_components(sig, -T, cfg, line_down).values())

    full = _quad(lambda sg: arg_up(sg) - arg_down(sg), a, 1.0 - a,
                 quadrature_tol) / (2.0 * math.pi)
    reduced = _quad(arg_up, a, 1.0 - a, quadrature_tol) / math.pi
    if abs(full - reduced) > 10.0 * quadrature_tol:
        raise AccuracyError(
            f"full ({full!r}) and reduced ({reduced!r}) horizontal integrals "
            "disagree beyond quadrature tolerance")
    return full, reduced


def closed_form_antiderivative(sigma: float, T: float) -> float:
    """Antiderivative of log(sigma^2/4 + T^2/4) in sigma.

    sigma log(sigma^2/4 + T^2/4) - 2 sigma + 2T arctan(sigma/T); vanishes
    at sigma = 0.
    """
    if not T > 0.0:
        raise DomainError("closed_form_antiderivative requires T > 0")
    return (sigma * math.log(sigma * sigma / 4.0 + T * T / 4.0)
            - 2.0 * sigma + 2.0 * T * math.atan(sigma / T))


def asymptotic_rhs(rect: AuditRectangle, cfg: EvalConfig = DEFAULT_CONFIG,
                   known_zeros: Sequence[float] | None = None) -> float:
    """(1-2 alpha) times the counting-formula value at T.

    The bracketed main term plus arg zeta(1/2+iT)/pi, with the vanishing
    remainder dropped; compare against arg_xi_integral/(1-2 alpha).
    """
    from .zero_census import n_mangoldt
    mang = n_mangoldt(rect.T, cfg, known_zeros=list(known_zeros or ()))
    return rect.width_factor * mang.with_s


def _gamma_arg_prediction(sigma: float, T: float) -> float:
    """Stirling estimate of Im log Gamma(s/2) on the top edge."""
    return (T / 4.0 * math.log(sigma * sigma / 4.0 + T * T / 4.0)
            - T / 2.0 + (sigma / 2.0 - 0.5) * (math.pi / 2.0))


def c_sigma(sigma: float) -> float:
    """Constant absorber 3pi/4 + pi sigma/4 from the argument estimates."""
    return 3.0 * math.pi / 4.0 + math.pi * sigma / 4.0


def term_breakdown(rect: AuditRectangle, cfg: EvalConfig = DEFAULT_CONFIG,
                   quadrature_tol: float = DEFAULT_QUADRATURE_TOL,
                   line_up: ZetaArgLine | None = None) -> TermBreakdown:
    """Audit each argument summand against its asymptotic estimate.

    Components are evaluated exactly at sigma in {alpha, 1/2, 1-alpha}
    and integrated over [alpha, 1-alpha]; each carries the estimate it is
    measured against and the absolute error.
    """
    T, a = rect.T, rect.alpha
    w = rect.width_factor
    sig_points = (a, 0.5, 1.0 - a)
    if line_up is None:
        line_up = ZetaArgLine(T, cfg)

    def quadratic(sig: float) -> float:
        s = complex(sig, T)
        return cmath.phase(s) + cmath.phase(s - 1.0)

    quad_samples = [(sg, quadratic(sg), math.pi, abs(quadratic(sg) - math.pi))
                    for sg in sig_points]
    quad_int = _quad(quadratic, a, 1.0 - a, quadrature_tol)
    arg_quadratic = ComponentCheck(
        computed=quad_int, predicted=w * math.pi,
        error=abs(quad_int - w * math.pi), samples=quad_samples)

    pi_val = -(T / 2.0) * LOG_PI
    arg_pi_power = ComponentCheck(
        computed=w * pi_val, predicted=w * pi_val, error=0.0,
        samples=[(sg, pi_val, pi_val, 0.0) for sg in sig_points])

    def gamma_arg(sig: float) -> float:
        return log_gamma(complex(sig, T) / 2.0).imag

    gamma_samples = [
        (sg, gamma_arg(sg), _gamma_arg_prediction(sg, T),
         abs(gamma_arg(sg) - _gamma_arg_prediction(sg, T)))
        for sg in sig_points]
    gamma_int = _quad(gamma_arg, a, 1.0 - a, quadrature_tol)
    gamma_pred_int = _quad(lambda sg: _gamma_arg_prediction(sg, T), a, 1.0 - a,
                           quadrature_tol)
    arg_gamma = ComponentCheck(
        computed=gamma_int, predicted=gamma_pred_int,
        error=abs(gamma_int - gamma_pred_int), samples=gamma_samples)

    zeta_center = line_up.eval(0.5)
    zeta_samples = [
        (sg, line_up.eval(sg), zeta_center, abs(line_up.eval(sg) - zeta_center))
        for sg in sig_points]
    zeta_int = _quad(line_up.eval, a, 1.0 - a, quadrature_tol)
    arg_zeta = ComponentCheck(
        computed=zeta_int, predicted=w * zeta_center,
        error=abs(zeta_int - w * zeta_center), samples=zeta_samples)

    c2_int = _quad(c_sigma, a, 1.0 - a, quadrature_tol)
    c2_pred = w * 7.0 * math.pi / 8.0
    c_sigma_integral = ComponentCheck(
        computed=c2_int, predicted=c2_pred, error=abs(c2_int - c2_pred))

    log_skip_val = T * math.log(a * a / 4.0 + T * T / 4.0)
    log_skip_pred = 2.0 * T * math.log(T / 2.0)
    log_skip = ComponentCheck(
        computed=log_skip_val, predicted=log_skip_pred,
        error=abs(log_skip_val - log_skip_pred))

    arct_val = T * (math.atan((1.0 - a) / T) - math.atan(a / T))
    arctan_pair = ComponentCheck(
        computed=arct_val, predicted=w, error=abs(arct_val - w))

    return TermBreakdown(
        arg_quadratic=arg_quadratic, arg_pi_power=arg_pi_power,
        arg_gamma=arg_gamma, arg_zeta=arg_zeta,
        c_sigma_integral=c_sigma_integral, log_skip=log_skip,
        arctan_pair=arctan_pair)


@dataclass
class MvtRow:
    alpha: float
    mean_value: float
    deviation: float


def mvt_limit_check(T: float, alphas: Sequence[float],
                    cfg: EvalConfig = DEFAULT_CONFIG,
                    integrand: Callable[[float], float] | None = None,
                    quadrature_tol: float = DEFAULT_QUADRATURE_TOL,
                    ) -> list[MvtRow]:
    """Mean-value rows (alpha, I(alpha), |I(alpha) - center value|).

    I(alpha) averages the integrand over [alpha, 1-alpha]; by the mean
    value theorem it converges to the center value as alpha -> 1/2.  The
    default integrand is the tracked arg zeta(sigma + iT).
    """
    for a in alphas:
        if not (0.0 < a < 0.5):
            raise DomainError(f"alpha must lie in (0, 1/2), got {a!r}")
    if integrand is None:
        probe_ordinate(T, cfg)
        line = ZetaArgLine(T, cfg)
        integrand = line.eval
    center = integrand(0.5)
    rows = []
    for a in alphas:
        width = 1.0 - 2.0 * a
        mean = _quad(integrand, a, 1.0 - a, quadrature_tol) / width
        rows.append(MvtRow(alpha=a, mean_value=mean,
                           deviation=abs(mean - center)))
    return rows


def audit(rect: AuditRectangle, cfg: EvalConfig = DEFAULT_CONFIG,
          census: FullCensus | None = None,
          quadrature_tol: float = DEFAULT_QUADRATURE_TOL,
          identity_tol: float = DEFAULT_IDENTITY_TOL,
          vertical_tol: float = DEFAULT_VERTICAL_TOL,
          asymptotic_tol: float = DEFAULT_ASYMPTOTIC_TOL,
          threads: int = 1, with_breakdown: bool = True) -> LittlewoodReport:
    """Full audit of one rectangle: identity, estimates, count equality.

    residual_identity compares the distance sum with the boundary
    integrals (an exact identity); residual_asymptotic compares the
    scaled argument integral with the counting formula; residual_theorem
    is the integer |N0(T) - N(T)|.
    """
    if census is None:
        census = full_census(rect.T, cfg, threads=threads)
    validate_rectangle(rect, census, cfg)

    lhs = lhs_sum_distances(rect, census.records, census.report.flags)
    vertical = rhs_vertical_integral(rect, cfg, quadrature_tol)
    line_up, line_down = _horizontal_lines(rect, cfg)
    horizontal, reduced = rhs_horizontal_integral(
        rect, cfg, quadrature_tol, line_up, line_down)
    rhs_total = vertical + horizontal

    with_s = census.report.n_mangoldt_real
    asym = rect.width_factor * with_s
    n0 = census.report.n0
    n_strip = census.report.n_argument_principle

    residual_identity = abs(lhs - rhs_total)
    residual_asymptotic = abs(reduced / rect.width_factor - with_s)
    residual_theorem = abs(n0 - n_strip)

    checks = {
        "identity": residual_identity < identity_tol,
        "vertical_null": abs(vertical) < vertical_tol,
        "asymptotic": residual_asymptotic < asymptotic_tol,
        "theorem": residual_theorem == 0,
    }
    breakdown = (term_breakdown(rect, cfg, quadrature_tol, line_up)
                 if with_breakdown else None)
    report = LittlewoodReport(
        rectangle=rect, lhs_sum_distances=lhs, rhs_vertical=vertical,
        rhs_horizontal=horizontal, rhs_total=rhs_total,
        arg_xi_integral=reduced, asymptotic_rhs=asym, n_of_T=n_strip,
        residual_identity=residual_identity,
        residual_asymptotic=residual_asymptotic,
        residual_theorem=int(residual_theorem), checks=checks,
        breakdown=breakdown)
    if not checks["theorem"]:
        report.flags.append(
            f"off-line zero suspected: N0={n0} != N={n_strip}; "
            "distance sum must switch to the general per-zero form")
    return report
