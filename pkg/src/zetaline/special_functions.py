"""Evaluators for zeta, Gamma, theta, Z and xi on the desk-scale region.

Primary evaluator is Euler-Maclaurin summation for zeta (valid for
Re(s) > -1, any moderate |t|), a Stirling-series log-gamma with recursion
shift, and a pole-free product form for xi.  The Dirichlet partial sum
and the Weierstrass product serve as slow independent oracles.

All functions are pure; configuration objects are immutable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import bernoulli as _scipy_bernoulli

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import AccuracyError, DomainError, OnPathZeroError, PoleError

PI = math.pi
LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)
EULER_MASCHERONI = 0.5772156649015329


@dataclass(frozen=True)
class Constants:
    """Named constants used across the toolkit."""

    euler_mascheroni: float = EULER_MASCHERONI
    log_pi: float = LOG_PI
    pi: float = PI


CONSTANTS = Constants()


def require_finite(z: complex, what: str = "value") -> complex:
    """No NaN/infinity escapes a public operation."""
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise AccuracyError(f"{what} overflowed or is undefined: {z!r}")
    return z


@lru_cache(maxsize=8)
def _bernoulli_over_factorial(m: int) -> np.ndarray:
    """B_{2k}/(2k)! for k = 1..m."""
    b = _scipy_bernoulli(2 * m)
    out = np.empty(m)
    fact = 1.0
    for k in range(1, m + 1):
        fact *= (2 * k - 1) * (2 * k)
        out[k - 1] = b[2 * k] / fact
    return out


# Stirling series coefficients B_{2k}/((2k-1)(2k)) for log Gamma.
_STIRLING_TERMS = 12
_STIRLING_COEFFS = tuple(
    float(c)
    for c in _scipy_bernoulli(2 * _STIRLING_TERMS)[2::2]
    / np.array([(2 * k - 1) * (2 * k) for k in range(1, _STIRLING_TERMS + 1)])
)


def zeta_dirichlet(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Partial sum of n^{-s} over n = 1..dirichlet_terms; requires Re(s) > 1.

    Truncation error is bounded by N^{1-sigma}/(sigma-1) for N terms, so
    convergence is slow near the boundary of the half-plane; this evaluator
    exists as an oracle, not a workhorse.
    """
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError(f"zeta_dirichlet requires Re(s) > 1, got {s.real}")
    n = np.arange(1, cfg.dirichlet_terms + 1, dtype=np.float64)
    val = complex(np.sum(np.exp(-s * np.log(n))))
    return require_finite(val, "zeta_dirichlet")


def dirichlet_truncation_bound(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Documented truncation bound N^{1-sigma}/(sigma-1) of zeta_dirichlet."""
    sigma = complex(s).real
    if sigma <= 1.0:
        raise DomainError("bound defined for Re(s) > 1 only")
    return cfg.dirichlet_terms ** (1.0 - sigma) / (sigma - 1.0)


def _em_tail(svec: np.ndarray, N: int, M: int, acc: np.ndarray) -> np.ndarray:
    """Add Bernoulli correction terms to acc in place; return error estimates."""
    coeffs = _bernoulli_over_factorial(M + 1)
    poch = svec.copy()
    npow = N ** (-svec - 1.0)
    inv_n2 = 1.0 / (float(N) * float(N))
    for k in range(1, M + 1):
        acc += coeffs[k - 1] * poch * npow
        poch = poch * (svec + (2 * k - 1)) * (svec + 2 * k)
        npow = npow * inv_n2
    return np.abs(coeffs[M] * poch * npow)


def _zeta_em_many(svec: np.ndarray, N: int, M: int) -> tuple[np.ndarray, np.ndarray]:
    """Euler-Maclaurin zeta on an array of points sharing one cutoff N.

    Returns (values, truncation error estimates).  Callers guarantee
    s != 1 and N valid for max |Im s|.
    """
    logn = np.log(np.arange(1, N, dtype=np.float64))
    acc = np.exp(-np.multiply.outer(svec, logn)).sum(axis=1)
    acc += N ** (1.0 - svec) / (svec - 1.0)
    acc += 0.5 * N ** (-svec)
    err = _em_tail(svec, N, M, acc)
    return acc, err


def _zs1_em_many(svec: np.ndarray, N: int, M: int) -> tuple[np.ndarray, np.ndarray]:
    """(s-1)*zeta(s) on an array of points, cancellation-free at s = 1.

    The pole term (s-1) * N^{1-s}/(s-1) is inserted as exact N^{1-s}, so
    the result is regular through s = 1 with value 1 there.
    """
    logn = np.log(np.arange(1, N, dtype=np.float64))
    acc = np.exp(-np.multiply.outer(svec, logn)).sum(axis=1)
    acc += 0.5 * N ** (-svec)
    err = _em_tail(svec, N, M, acc)
    sm1 = svec - 1.0
    return sm1 * acc + N ** (1.0 - svec), np.abs(sm1) * err


def zeta_euler_maclaurin(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) for Re(s) > -1, s != 1, to within cfg.abs_tol.

    Truncated sum to the cutoff, integral and half-term corrections, then
    a Bernoulli tail; the leading dropped term is the error estimate and
    must be below abs_tol.
    """
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta has a simple pole at s = 1")
    if s.real <= -1.0:
        raise DomainError(f"zeta_euler_maclaurin requires Re(s) > -1, got {s.real}")
    cfg.check_height(s.imag)
    vals, errs = _zeta_em_many(np.array([s]), cfg.em_cutoff, cfg.em_bernoulli_terms)
    if errs[0] > cfg.abs_tol:
        raise AccuracyError(
            f"Euler-Maclaurin tail estimate {errs[0]:.3e} exceeds abs_tol "
            f"{cfg.abs_tol:.3e} at s={s}")
    return require_finite(complex(vals[0]), "zeta_euler_maclaurin")


def zeta_times_s_minus_one(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """(s-1)*zeta(s), regular and nonzero at s = 1 (value exactly 1 there).

    This is the quantity tracked on contours that must cross the real
    axis: it carries exactly the nontrivial zeros of zeta in the region
    Re(s) > -1 and no pole.
    """
    s = complex(s)
    if s.real <= -1.0:
        raise DomainError(f"requires Re(s) > -1, got {s.real}")
    cfg.check_height(s.imag)
    vals, errs = _zs1_em_many(np.array([s]), cfg.em_cutoff, cfg.em_bernoulli_terms)
    if errs[0] > cfg.abs_tol:
        raise AccuracyError(
            f"Euler-Maclaurin tail estimate {errs[0]:.3e} exceeds abs_tol at s={s}")
    return require_finite(complex(vals[0]), "zeta_times_s_minus_one")


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    Small |z| is shifted into the Stirling-accurate region with
    log Gamma(z) = log Gamma(z+k) - sum_j log(z+j); the imaginary part is
    continuous in the right half-plane.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise PoleError(f"Gamma has a pole at z = {z.real:g}")
    shift = 0.0 + 0.0j
    guard = 0
    while z.real < 10.0 or abs(z) < 12.0:
        shift += cmath.log(z)
        z += 1.0
        guard += 1
        if guard > 64:
            raise AccuracyError("log_gamma shift recursion failed to converge")
    acc = (z - 0.5) * cmath.log(z) - z + 0.5 * LOG_2PI
    zpow = 1.0 / z
    z2 = zpow * zpow
    for c in _STIRLING_COEFFS:
        acc += c * zpow
        zpow *= z2
    return require_finite(acc - shift, "log_gamma")


def gamma_weierstrass(z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Gamma(z) from the product (e^{-Cz}/z) * prod_k e^{z/k}/(1 + z/k).

    Convergence is slow (tail ~ |z|^2 / K for K factors), so this is an
    independent oracle only.  C is the Euler-Mascheroni constant.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise PoleError(f"Gamma has a pole at z = {z.real:g}")
    k = np.arange(1, cfg.weierstrass_terms + 1, dtype=np.float64)
    log_terms = z / k - np.log1p(z / k)
    log_val = -EULER_MASCHERONI * z - cmath.log(z) + complex(np.sum(log_terms))
    return require_finite(cmath.exp(log_val), "gamma_weierstrass")


def xi(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Completed zeta: (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s), entire.

    Evaluated as pi^{-s/2} * Gamma(s/2 + 1) * (s-1) zeta(s), which is
    identical (s Gamma(s/2) = 2 Gamma(s/2 + 1)) and removes both the pole
    of zeta at s = 1 and the pole of Gamma at s = 0 without cancellation.
    The removable points s = 0 and s = 1 return exactly 1/2.
    """
    s = complex(s)
    if s == 0.0 or s == 1.0:
        return 0.5 + 0.0j
    z1 = zeta_times_s_minus_one(s, cfg)
    pref = cmath.exp(-(s / 2.0) * LOG_PI + log_gamma(s / 2.0 + 1.0))
    val = pref * z1
    if val == 0.0 and z1 != 0.0:
        # |Gamma| decays like exp(-pi |t| / 4): beyond |t| ~ 1400 the value
        # underflows double precision; callers must switch to log-space.
        raise AccuracyError(
            f"xi underflowed at s={s}; use log_abs_xi / argument routes")
    return require_finite(val, "xi")


def log_abs_xi(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """log |xi(s)|, computed in log space (no underflow at large |t|)."""
    s = complex(s)
    z1 = zeta_times_s_minus_one(s, cfg)
    if z1 == 0.0:
        raise OnPathZeroError(f"xi vanished at s={s}", point=s)
    return (-(s.real / 2.0) * LOG_PI + log_gamma(s / 2.0 + 1.0).real
            + math.log(abs(z1)))


def riemann_siegel_theta(t: float) -> float:
    """theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi; smooth and odd."""
    t = float(t)
    if t == 0.0:
        return 0.0
    return log_gamma(complex(0.25, t / 2.0)).imag - (t / 2.0) * LOG_PI


def _hardy_z_many(ts: np.ndarray, cfg: EvalConfig) -> tuple[np.ndarray, float]:
    """Z on an array of heights sharing one cutoff; returns (values, max |Im|).

    Callers pre-size cfg for max |t|.
    """
    svec = 0.5 + 1j * ts
    vals, errs = _zeta_em_many(svec, cfg.em_cutoff, cfg.em_bernoulli_terms)
    if np.any(errs > cfg.abs_tol):
        raise AccuracyError("Euler-Maclaurin tail above abs_tol in Z scan")
    thetas = np.array([riemann_siegel_theta(float(t)) for t in ts])
    rotated = np.exp(1j * thetas) * vals
    return rotated.real, float(np.max(np.abs(rotated.imag), initial=0.0))


def hardy_z(t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Z(t) = e^{i theta(t)} zeta(1/2 + it); real for real t.

    Sign changes of Z locate critical-line zeros.  The discarded imaginary
    part is asserted below 10 * abs_tol.
    """
    t = float(t)
    cfg.check_height(t)
    vals, imag_max = _hardy_z_many(np.array([t]), cfg)
    if imag_max >= 10.0 * cfg.abs_tol:
        raise AccuracyError(
            f"Z(t) imaginary residue {imag_max:.3e} exceeds 10*abs_tol at t={t}")
    return float(vals[0])
