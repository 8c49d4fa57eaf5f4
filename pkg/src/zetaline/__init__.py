"""Numerical audit toolkit for critical-line zero counting.

Evaluates the completed zeta function and its factors to configurable
accuracy, tracks continuously varied arguments along paths, locates and
counts zeros three independent ways, and verifies the rectangle identity
tying the distance-weighted zero sum to boundary integrals of log xi,
together with every asymptotic estimate feeding the counting formula.
"""

__version__ = "0.1.0"

from .config import DEFAULT_CONFIG, DEFAULT_ZERO_GUARD, EvalConfig
from .errors import (AccuracyError, ConfigError, DomainError,
                     InconsistencyError, InvalidBracketError, OnPathZeroError,
                     OrdinateCollisionError, PoleError, ResolutionError,
                     UsageError, ZetalineError)
from .special_functions import (CONSTANTS, EULER_MASCHERONI, Constants,
                                gamma_weierstrass, hardy_z, log_abs_xi,
                                log_gamma, riemann_siegel_theta, xi,
                                zeta_dirichlet, zeta_euler_maclaurin,
                                zeta_times_s_minus_one)
from .arg_tracking import (ArgTrace, PathSpec, ZetaArgLine, arg_xi_at,
                           arg_zeta_critical, continuous_arg, probe_ordinate)
from .zero_census import (CensusReport, FullCensus, MangoldtCount, ZeroRecord,
                          count_in_strip, count_on_line, default_scan_step,
                          full_census, n_mangoldt, ratio_report, refine_zero,
                          scan_sign_changes)
from .littlewood import (AuditRectangle, ComponentCheck, LittlewoodReport,
                         MvtRow, TermBreakdown, asymptotic_rhs, audit,
                         closed_form_antiderivative, lhs_sum_distances,
                         mvt_limit_check, rhs_horizontal_integral,
                         rhs_vertical_integral, term_breakdown)
from .report import ReportEnvelope, RunConfig

__all__ = [
    "__version__",
    "EvalConfig", "DEFAULT_CONFIG", "DEFAULT_ZERO_GUARD",
    "ZetalineError", "DomainError", "PoleError", "InvalidBracketError",
    "ConfigError", "AccuracyError", "OnPathZeroError", "ResolutionError",
    "OrdinateCollisionError", "InconsistencyError", "UsageError",
    "Constants", "CONSTANTS", "EULER_MASCHERONI",
    "zeta_dirichlet", "zeta_euler_maclaurin", "zeta_times_s_minus_one",
    "log_gamma", "gamma_weierstrass", "xi", "log_abs_xi",
    "riemann_siegel_theta", "hardy_z",
    "PathSpec", "ArgTrace", "continuous_arg", "arg_zeta_critical",
    "arg_xi_at", "ZetaArgLine", "probe_ordinate",
    "ZeroRecord", "CensusReport", "MangoldtCount", "FullCensus",
    "scan_sign_changes", "refine_zero", "count_on_line", "count_in_strip",
    "n_mangoldt", "ratio_report", "full_census", "default_scan_step",
    "AuditRectangle", "TermBreakdown", "ComponentCheck", "LittlewoodReport",
    "MvtRow", "lhs_sum_distances", "rhs_vertical_integral",
    "rhs_horizontal_integral", "closed_form_antiderivative", "asymptotic_rhs",
    "term_breakdown", "mvt_limit_check", "audit",
    "ReportEnvelope", "RunConfig",
]
