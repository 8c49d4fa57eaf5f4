"""Independent oracles for the test suite.

Everything here deliberately avoids the package's own evaluation paths:
the alternating-series accelerated zeta (Borwein's algorithm), bisection
on mpmath's independent Z implementation, and plain composite quadrature.
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath as mp

mp.mp.dps = 30

FIRST_ZEROS = (
    14.134725141734694,
    21.022039638771556,
    25.010857580145688,
    30.424876125859513,
    32.935061587739190,
)


@lru_cache(maxsize=8)
def _borwein_weights(n: int) -> tuple[tuple[float, ...], float]:
    fact = math.factorial
    d = []
    for k in range(n + 1):
        acc = sum(
            fact(n + i - 1) * 4 ** i // (fact(n - i) * fact(2 * i))
            for i in range(k + 1))
        d.append(float(n * acc))
    return tuple(d), d[n]


def zeta_alternating(s: complex, n: int = 80) -> complex:
    """zeta from the eta (alternating) series, Borwein-accelerated.

    Error decays like (3 + sqrt 8)^{-n} times e^{pi |t| / 2}; pick n
    accordingly for complex heights.
    """
    s = complex(s)
    d, dn = _borwein_weights(n)
    total = 0.0 + 0.0j
    for k in range(n):
        total += (-1) ** k * (d[k] - dn) / complex(k + 1) ** s
    return -total / (dn * (1.0 - 2.0 ** (1.0 - s)))


def bisect_zero_ordinate(lo: float, hi: float, tol: float = 1e-12) -> float:
    """Bisection on mpmath's Z for an independent zero ordinate."""
    lo, hi = mp.mpf(lo), mp.mpf(hi)
    zlo = mp.siegelz(lo)
    zhi = mp.siegelz(hi)
    assert mp.sign(zlo) != mp.sign(zhi), "oracle bracket must straddle a zero"
    while hi - lo > tol:
        mid = (lo + hi) / 2
        zm = mp.siegelz(mid)
        if mp.sign(zm) == mp.sign(zlo):
            lo, zlo = mid, zm
        else:
            hi = mid
    return float((lo + hi) / 2)


def mp_zeta(s: complex) -> complex:
    return complex(mp.zeta(mp.mpc(s)))


def mp_log_gamma(z: complex) -> complex:
    return complex(mp.loggamma(mp.mpc(z)))


def simpson(f, a: float, b: float, n: int = 2000) -> float:
    """Plain composite Simpson rule (n even)."""
    if n % 2:
        n += 1
    h = (b - a) / n
    acc = f(a) + f(b)
    for i in range(1, n):
        acc += f(a + i * h) * (4 if i % 2 else 2)
    return acc * h / 3.0
