"""Continuously varied arguments along polyline paths.

The unwrapped argument of a nonvanishing function f along a path is the
accumulated phase change from an anchored starting value.  Raw phase
jumps of pi/2 or more between samples trigger adaptive step halving, so
no full turn can alias away; a jump that survives 40 halvings means a
zero sits essentially on the path and is reported as such.

Anchor convention: arguments of zeta and xi are anchored at s = 2, where
both functions are real and positive, so the anchored argument is 0.
"""

from __future__ import annotations

import bisect
import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .config import DEFAULT_CONFIG, DEFAULT_ZERO_GUARD, EvalConfig
from .errors import (DomainError, OnPathZeroError, OrdinateCollisionError,
                     ResolutionError)
from .special_functions import LOG_PI, hardy_z, log_gamma, xi, zeta_euler_maclaurin

HALF_PI = math.pi / 2.0
REFINE_DEPTH_CAP = 40
# |f| values below this are treated as an on-path zero (underflow guard).
ZERO_FLOOR = 1e-280


@dataclass(frozen=True)
class PathSpec:
    """Polyline with an anchored starting argument and a coarse step bound."""

    vertices: tuple[complex, ...]
    initial_arg: float = 0.0
    max_step: float = 0.25

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise DomainError("path needs at least 2 vertices")
        for a, b in zip(verts, verts[1:]):
            if a == b:
                raise DomainError(f"consecutive vertices coincide at {a}")
        if not (self.max_step > 0.0):
            raise DomainError("max_step must be positive")


@dataclass
class ArgTrace:
    """Samples (point, unwrapped argument) along a path.

    Consecutive unwrapped arguments differ by less than pi/2; the final
    value is step-size independent once that guarantee holds.
    """

    samples: list[tuple[complex, float]] = field(default_factory=list)
    refinements: int = 0

    @property
    def final_arg(self) -> float:
        return self.samples[-1][1]

    def check_invariant(self) -> None:
        for (_, a), (_, b) in zip(self.samples, self.samples[1:]):
            if not abs(b - a) < HALF_PI:
                raise ResolutionError(
                    f"consecutive unwrapped arguments jump by {abs(b - a):.3f}")


def _checked_value(f: Callable[[complex], complex], pt: complex) -> complex:
    val = complex(f(pt))
    if abs(val) <= ZERO_FLOOR:
        raise OnPathZeroError(
            f"tracked function vanished at {pt} (|f|={abs(val):.3e})", point=pt)
    return val


def continuous_arg(f: Callable[[complex], complex], path: PathSpec) -> ArgTrace:
    """Unwrapped argument of f along the path, by continuous variation.

    The trace starts at path.initial_arg on the first vertex and adds the
    phase increment between consecutive samples, halving the step while
    any raw increment reaches pi/2.
    """
    trace = ArgTrace()
    arg = path.initial_arg
    prev_pt = path.vertices[0]
    prev_val = _checked_value(f, prev_pt)
    trace.samples.append((prev_pt, arg))
    for seg_end in path.vertices[1:]:
        seg_start = prev_pt
        seg = seg_end - seg_start
        nsteps = max(1, math.ceil(abs(seg) / path.max_step))
        t_prev = 0.0
        for i in range(1, nsteps + 1):
            t_next = i / nsteps
            # pending sub-intervals, deepest first
            stack = [(t_prev, t_next, 0)]
            while stack:
                t0, t1, depth = stack.pop()
                pt = seg_start + t1 * seg
                val = _checked_value(f, pt)
                delta = cmath.phase(val / prev_val)
                if abs(delta) >= HALF_PI:
                    if depth >= REFINE_DEPTH_CAP:
                        raise ResolutionError(
                            f"refinement depth exceeded near {pt}; "
                            "a zero is adjacent to the path", point=pt)
                    tm = 0.5 * (t0 + t1)
                    stack.append((tm, t1, depth + 1))
                    stack.append((t0, tm, depth + 1))
                    trace.refinements += 1
                else:
                    arg += delta
                    prev_val = val
                    trace.samples.append((pt, arg))
            t_prev = t_next
        prev_pt = seg_end
    return trace


def _zeta_fn(cfg: EvalConfig) -> Callable[[complex], complex]:
    return lambda s: zeta_euler_maclaurin(s, cfg)


def probe_ordinate(T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                   known_zeros: Sequence[float] | None = None,
                   guard: float = DEFAULT_ZERO_GUARD) -> None:
    """Raise OrdinateCollisionError if a zero ordinate lies within guard of T.

    Checks a supplied zero list when given, then probes for a sign change
    of Z across [T-guard, T+guard] so the check also works standalone.
    """
    if T <= 0.0:
        return
    if known_zeros is not None:
        for g in known_zeros:
            if abs(T - g) < guard:
                raise OrdinateCollisionError(
                    f"T={T!r} lies within {guard:g} of zero ordinate {g!r}", g)
    cfg_t = cfg.sized_for(T + 1.0)
    lo, hi = max(T - guard, 1e-9), T + guard
    zlo, zhi = hardy_z(lo, cfg_t), hardy_z(hi, cfg_t)
    if zlo == 0.0 or zhi == 0.0 or (zlo < 0.0) != (zhi < 0.0):
        # bisect the offending ordinate for the diagnostic
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            zm = hardy_z(mid, cfg_t)
            if zm == 0.0:
                break
            if (zm < 0.0) != (zhi < 0.0):
                lo, zlo = mid, zm
            else:
                hi, zhi = mid, zm
        gamma = 0.5 * (lo + hi)
        raise OrdinateCollisionError(
            f"T={T!r} lies within {guard:g} of zero ordinate {gamma!r}", gamma)


def arg_zeta_critical(T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                      known_zeros: Sequence[float] | None = None,
                      max_step: float = 0.25) -> float:
    """arg zeta(1/2 + iT) by continuous variation along 2 -> 2+iT -> 1/2+iT.

    Anchored at the principal value arg zeta(2) = 0.  Fails with an
    ordinate collision when T sits within the guard band of a zero, where
    the argument is undefined.
    """
    if T <= 0.0:
        raise DomainError("arg_zeta_critical requires T > 0")
    probe_ordinate(T, cfg, known_zeros)
    cfg_t = cfg.sized_for(T)
    path = PathSpec((complex(2.0, 0.0), complex(2.0, T), complex(0.5, T)),
                    initial_arg=0.0, max_step=max_step)
    return continuous_arg(_zeta_fn(cfg_t), path).final_arg


class ZetaArgLine:
    """Cached unwrapped arg zeta(sigma + iT) along one horizontal line.

    Anchored through the vertical leg 2 -> 2 + iT; evaluation at a new
    sigma continues the trace from the nearest previously visited sigma.
    Works for either sign of T (pass T < 0 for the mirror line).
    """

    def __init__(self, T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                 max_step: float = 0.25):
        self.T = float(T)
        self.cfg = cfg.sized_for(T)
        self.max_step = max_step
        self._fn = _zeta_fn(self.cfg)
        anchor = 0.0
        if self.T != 0.0:
            path = PathSpec((complex(2.0, 0.0), complex(2.0, self.T)),
                            initial_arg=0.0, max_step=max_step)
            anchor = continuous_arg(self._fn, path).final_arg
        self._sigmas = [2.0]
        self._args = {2.0: anchor}

    def eval(self, sigma: float) -> float:
        sigma = float(sigma)
        if sigma <= 0.0:
            raise DomainError("ZetaArgLine covers sigma > 0 only")
        hit = self._args.get(sigma)
        if hit is not None:
            return hit
        i = bisect.bisect_left(self._sigmas, sigma)
        nearest = min(
            (x for x in self._sigmas[max(0, i - 1):i + 1]),
            key=lambda x: abs(x - sigma))
        path = PathSpec((complex(nearest, self.T), complex(sigma, self.T)),
                        initial_arg=self._args[nearest], max_step=self.max_step)
        val = continuous_arg(self._fn, path).final_arg
        bisect.insort(self._sigmas, sigma)
        self._args[sigma] = val
        return val


def arg_xi_components(sigma: float, T: float, cfg: EvalConfig = DEFAULT_CONFIG,
                      zeta_line: ZetaArgLine | None = None) -> dict[str, float]:
    """The four continuously varied argument summands of xi at sigma + iT.

    arg xi = arg(s(s-1)/2) + arg pi^{-s/2} + arg Gamma(s/2) + arg zeta(s),
    each anchored at s = 2 (where every summand is 0).  Along the tracking
    path 2 -> 2+iT -> sigma+iT the first three stay on their principal
    branches, so closed forms apply; arg zeta is phase-tracked.
    """
    s = complex(sigma, T)
    if zeta_line is None:
        zeta_line = ZetaArgLine(T, cfg)
    elif zeta_line.T != T:
        raise DomainError(f"zeta_line tracks T={zeta_line.T}, not T={T}")
    return {
        "quadratic": cmath.phase(s) + cmath.phase(s - 1.0),
        "pi_power": -(T / 2.0) * LOG_PI,
        "gamma": log_gamma(s / 2.0).imag,
        "zeta": zeta_line.eval(sigma),
    }


def arg_xi_at(sigma: float, T: float, cfg: EvalConfig = DEFAULT_CONFIG,
              route: str = "components",
              zeta_line: ZetaArgLine | None = None) -> float:
    """Continuously varied arg xi(sigma + iT), anchored at arg xi(2) = 0.

    route="components" sums the four tracked component arguments;
    route="direct" phase-tracks xi itself along 2 -> 2+iT -> sigma+iT
    (value-level xi underflows beyond |T| ~ 1400, so the direct route is
    a moderate-height verification path).  Both routes agree within 1e-6.
    """
    if sigma <= 0.0:
        raise DomainError("arg_xi_at requires sigma > 0")
    if route == "components":
        parts = arg_xi_components(sigma, T, cfg, zeta_line)
        return sum(parts.values())
    if route == "direct":
        cfg_t = cfg.sized_for(T)
        path = PathSpec((complex(2.0, 0.0), complex(2.0, T), complex(sigma, T)),
                        initial_arg=0.0, max_step=0.25)
        return continuous_arg(lambda s: xi(s, cfg_t), path).final_arg
    raise DomainError(f"unknown route {route!r}")
