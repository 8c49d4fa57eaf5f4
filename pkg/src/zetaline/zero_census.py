"""Critical-line zero location and three-way strip counts.

Zeros on the line come from sign changes of Z refined by bisection.
The strip total comes from the winding of the completed zeta around the
rectangle [-0.1, 1.1] x [0, T], and the counting formula
(T/2pi) log(T/2pi) - T/2pi + 7/8 + arg zeta(1/2+iT)/pi gives the third,
analytically independent, count.  Any disagreement becomes a flag, never
a silent pass.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_CONFIG, DEFAULT_ZERO_GUARD, EvalConfig
from .errors import (AccuracyError, DomainError, InvalidBracketError)
from .arg_tracking import (PathSpec, arg_zeta_critical, continuous_arg,
                           probe_ordinate)
from .special_functions import _hardy_z_many, hardy_z, zeta_times_s_minus_one

TWO_PI = 2.0 * math.pi

DEFAULT_ZERO_TOL = 1e-9
DEFAULT_RESIDUAL_TOL = 1e-5

# Strip-count rectangle is widened past the strip edges so the boundary
# stays clear of sigma = 0 and sigma = 1.
STRIP_LEFT = -0.1
STRIP_RIGHT = 1.1

_SCAN_CHUNK = 64.0


@dataclass(frozen=True)
class ZeroRecord:
    """One located critical-line zero ordinate with bracket and residual."""

    ordinate: float
    bracket_lo: float
    bracket_hi: float
    residual: float

    def __post_init__(self):
        if not (self.bracket_lo < self.ordinate < self.bracket_hi):
            raise DomainError(
                f"ordinate {self.ordinate!r} outside bracket "
                f"[{self.bracket_lo!r}, {self.bracket_hi!r}]")
        if self.residual < 0.0:
            raise DomainError("residual must be nonnegative")


@dataclass
class CensusReport:
    """Counts on the line and in the strip, with the ratio and flags."""

    T: float
    n0: int
    n_argument_principle: int
    n_mangoldt_real: float
    s_of_T: float
    ratio: float
    flags: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.n0 > self.n_argument_principle:
            self.flags.append(
                f"line count {self.n0} exceeds strip count "
                f"{self.n_argument_principle}")


def default_scan_step(t_hi: float) -> float:
    """Density-aware step: a quarter of the mean zero gap at the top height."""
    x = max(t_hi, 20.0) / TWO_PI
    return min(0.5, TWO_PI / math.log(x) / 4.0)


def _chunk_edges(t_lo: float, t_hi: float) -> list[tuple[float, float]]:
    """Fixed chunk boundaries at multiples of the chunk width.

    Boundaries depend only on the range, never on the thread count, so
    sharded scans reduce deterministically.
    """
    edges = [t_lo]
    k = math.floor(t_lo / _SCAN_CHUNK) + 1
    while k * _SCAN_CHUNK < t_hi:
        edges.append(k * _SCAN_CHUNK)
        k += 1
    edges.append(t_hi)
    return [(a, b) for a, b in zip(edges, edges[1:]) if b > a]


def _scan_chunk(t_lo: float, t_hi: float, step: float,
                cfg: EvalConfig) -> list[tuple[float, float]]:
    """Sign-change brackets on one chunk, endpoint-inclusive."""
    n = max(1, round((t_hi - t_lo) / step))
    ts = t_lo + (t_hi - t_lo) * np.arange(n + 1) / n
    vals, _ = _hardy_z_many(ts, cfg.sized_for(t_hi))
    signs = np.sign(vals)
    flips = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    out = [(float(ts[i]), float(ts[i + 1])) for i in flips]
    # a sample landing exactly on a zero brackets it with its neighbor
    for i in np.nonzero(signs == 0)[0]:
        if 0 < i <= n:
            out.append((float(ts[i - 1]), float(ts[min(i + 1, n)])))
    return sorted(out)


def scan_sign_changes(t_lo: float, t_hi: float, step: float | None = None,
                      cfg: EvalConfig = DEFAULT_CONFIG, threads: int = 1,
                      expected_count: int | None = None,
                      ) -> list[tuple[float, float]]:
    """All intervals of width `step` on which Z changes sign.

    The default step is density-aware (a quarter mean gap at t_hi).  When
    expected_count is given and the bracket tally differs, the scan
    repeats with step/4 (twice) before giving up and returning the best
    attempt; callers treat a persisting shortfall as a flag.
    """
    if not (0.0 <= t_lo < t_hi):
        raise DomainError(f"need 0 <= t_lo < t_hi, got [{t_lo}, {t_hi}]")
    if step is None:
        step = default_scan_step(t_hi)
    if step <= 0.0:
        raise DomainError("step must be positive")

    for _ in range(3):
        chunks = _chunk_edges(t_lo, t_hi)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(
                    lambda ab: _scan_chunk(ab[0], ab[1], step, cfg), chunks))
        else:
            parts = [_scan_chunk(a, b, step, cfg) for a, b in chunks]
        brackets = [br for part in parts for br in part]
        if expected_count is None or len(brackets) == expected_count:
            return brackets
        step /= 4.0
    return brackets


def refine_zero(bracket: tuple[float, float], zero_tol: float = DEFAULT_ZERO_TOL,
                cfg: EvalConfig = DEFAULT_CONFIG) -> ZeroRecord:
    """Bisect a sign-change bracket of Z down to width <= zero_tol."""
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (lo < hi):
        raise InvalidBracketError(f"empty bracket [{lo}, {hi}]")
    cfg_t = cfg.sized_for(hi)
    zlo, zhi = hardy_z(lo, cfg_t), hardy_z(hi, cfg_t)
    if zlo == 0.0:
        zlo = -zhi  # endpoint sits on the zero; orient the bracket
    if zhi == 0.0:
        zhi = -zlo
    if (zlo < 0.0) == (zhi < 0.0):
        raise InvalidBracketError(
            f"no sign change on [{lo}, {hi}]: Z={zlo:.3e}, {zhi:.3e}")
    while hi - lo > zero_tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        zm = hardy_z(mid, cfg_t)
        if zm == 0.0:
            lo, hi = mid - 0.25 * zero_tol, mid + 0.25 * zero_tol
            break
        if (zm < 0.0) == (zlo < 0.0):
            lo, zlo = mid, zm
        else:
            hi, zhi = mid, zm
    gamma = 0.5 * (lo + hi)
    return ZeroRecord(ordinate=gamma, bracket_lo=lo, bracket_hi=hi,
                      residual=abs(hardy_z(gamma, cfg_t)))


@dataclass(frozen=True)
class MangoldtCount:
    main_term: float
    with_s: float


def n_mangoldt(T: float, cfg: EvalConfig = DEFAULT_CONFIG,
               known_zeros: list[float] | None = None,
               include_s: bool = True) -> MangoldtCount:
    """Counting-formula value at T: smooth main term plus arg zeta(1/2+iT)/pi.

    main = (T/2pi) log(T/2pi) - T/2pi + 7/8; with_s adds the continuously
    varied critical-line argument.
    """
    if T <= 0.0:
        raise DomainError("n_mangoldt requires T > 0")
    x = T / TWO_PI
    main = x * math.log(x) - x + 7.0 / 8.0
    if not include_s:
        return MangoldtCount(main, math.nan)
    s_term = arg_zeta_critical(T, cfg, known_zeros) / math.pi
    return MangoldtCount(main, main + s_term)


def count_on_line(T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                  zero_tol: float = DEFAULT_ZERO_TOL,
                  residual_tol: float = DEFAULT_RESIDUAL_TOL,
                  step: float | None = None, threads: int = 1,
                  ) -> tuple[int, list[ZeroRecord]]:
    """All critical-line zeros with 0 < gamma < T, sorted and deduplicated.

    Completeness is checked against the counting formula; a mismatch
    triggers re-scans at step/4.
    """
    if T <= 0.0:
        raise DomainError("count_on_line requires T > 0")
    probe_ordinate(T, cfg)
    expected = int(round(n_mangoldt(T, cfg).with_s))
    brackets = scan_sign_changes(0.0, T, step, cfg, threads=threads,
                                 expected_count=expected)
    if len(brackets) != expected:
        warnings.warn(
            f"sign-change scan found {len(brackets)} brackets below T={T} "
            f"but the counting formula expects {expected}", stacklevel=2)
    records = [refine_zero(br, zero_tol, cfg) for br in brackets]
    records.sort(key=lambda r: r.ordinate)
    deduped: list[ZeroRecord] = []
    for rec in records:
        if deduped and rec.ordinate - deduped[-1].ordinate <= 2.0 * zero_tol:
            continue
        deduped.append(rec)
    for rec in deduped:
        if rec.residual > residual_tol:
            raise AccuracyError(
                f"zero at {rec.ordinate:.9f} has residual {rec.residual:.3e} "
                f"above {residual_tol:.1e}")
    return len(deduped), deduped


def count_in_strip(T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                   known_zeros: list[float] | None = None,
                   max_step: float = 0.25) -> int:
    """Strip zero count with 0 < gamma < T by the winding of xi.

    Tracks (s-1) zeta(s) counterclockwise around the rectangle
    [-0.1, 1.1] x [0, T].  That factor carries exactly the strip zeros of
    xi there, and the remaining factors pi^{-s/2} Gamma(s/2+1) are
    single-valued on the region, contributing no winding on a closed loop.
    """
    if T <= 0.0:
        raise DomainError("count_in_strip requires T > 0")
    probe_ordinate(T, cfg, known_zeros)
    cfg_t = cfg.sized_for(T)
    fn = lambda s: zeta_times_s_minus_one(s, cfg_t)
    loop = PathSpec((complex(STRIP_LEFT, 0.0), complex(STRIP_RIGHT, 0.0),
                     complex(STRIP_RIGHT, T), complex(STRIP_LEFT, T),
                     complex(STRIP_LEFT, 0.0)),
                    initial_arg=0.0, max_step=max_step)
    winding = continuous_arg(fn, loop).final_arg / TWO_PI
    nearest = round(winding)
    if abs(winding - nearest) > 0.01:
        raise AccuracyError(
            f"winding {winding!r} is not an integer at T={T}")
    if nearest < 0:
        raise AccuracyError(f"negative winding {nearest} at T={T}")
    return int(nearest)


@dataclass
class FullCensus:
    """A census report together with the located zero records."""

    report: CensusReport
    records: list[ZeroRecord]


def full_census(T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                zero_tol: float = DEFAULT_ZERO_TOL, threads: int = 1,
                ) -> FullCensus:
    """Three-way census at T, keeping the zero records for downstream use.

    Any pairwise disagreement among the sign-change count, the winding
    count and the rounded counting formula is recorded as a flag.
    """
    if T <= 20.0:
        raise DomainError("census requires T > 20 (first zero near 14)")
    n0, records = count_on_line(T, cfg, zero_tol=zero_tol, threads=threads)
    gammas = [r.ordinate for r in records]
    n_strip = count_in_strip(T, cfg, known_zeros=gammas)
    s_of_T = arg_zeta_critical(T, cfg, known_zeros=gammas) / math.pi
    mang = n_mangoldt(T, cfg, known_zeros=gammas)
    report = CensusReport(
        T=T, n0=n0, n_argument_principle=n_strip,
        n_mangoldt_real=mang.with_s, s_of_T=s_of_T,
        ratio=n0 / n_strip if n_strip else math.nan)
    if n0 != n_strip:
        report.flags.append(f"line count {n0} != strip count {n_strip}")
    if round(mang.with_s) != n_strip:
        report.flags.append(
            f"counting formula {mang.with_s:.6f} rounds to "
            f"{round(mang.with_s)} != strip count {n_strip}")
    if abs(mang.with_s - n_strip) >= 0.5:
        report.flags.append(
            f"counting formula {mang.with_s:.6f} deviates >= 0.5 "
            f"from strip count {n_strip}")
    if abs(s_of_T) >= 3.0:
        report.flags.append(f"|S(T)| = {abs(s_of_T):.3f} implausibly large")
    return FullCensus(report=report, records=records)


def ratio_report(T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                 zero_tol: float = DEFAULT_ZERO_TOL, threads: int = 1,
                 ) -> CensusReport:
    """Assembled three-way census report at T with the on-line/strip ratio."""
    return full_census(T, cfg, zero_tol=zero_tol, threads=threads).report
