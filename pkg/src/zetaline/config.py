"""Evaluation configuration: precision and truncation knobs.

All evaluators take an immutable EvalConfig.  The Euler-Maclaurin cutoff
must scale with the height of the evaluation point; `sized_for` returns a
copy large enough for a given |t|, and `check_height` enforces the bound
for direct calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ConfigError


def required_em_cutoff(t: float) -> int:
    """Smallest admissible Euler-Maclaurin cutoff at height t."""
    return int(math.ceil(abs(t) / 2.0 + 10.0))


@dataclass(frozen=True)
class EvalConfig:
    """Series/quadrature truncation and target accuracy.

    dirichlet_terms     terms in the sigma>1 Dirichlet partial sum
    em_cutoff           Euler-Maclaurin summation cutoff N
    em_bernoulli_terms  Bernoulli correction terms in the E-M tail
    abs_tol             target absolute accuracy of zeta/xi values
    weierstrass_terms   factors kept in the Weierstrass product
    """

    dirichlet_terms: int = 1_000_000
    em_cutoff: int = 64
    em_bernoulli_terms: int = 25
    abs_tol: float = 1e-10
    weierstrass_terms: int = 1_000_000

    def __post_init__(self):
        for name in ("dirichlet_terms", "em_cutoff", "em_bernoulli_terms",
                     "weierstrass_terms"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ConfigError(f"{name} must be a positive integer, got {v!r}")
        if not (self.abs_tol > 0.0 and math.isfinite(self.abs_tol)):
            raise ConfigError(f"abs_tol must be a positive real, got {self.abs_tol!r}")

    def check_height(self, t: float) -> None:
        """Validity check: em_cutoff >= |t|/2 + 10 for the requested height."""
        need = required_em_cutoff(t)
        if self.em_cutoff < need:
            raise ConfigError(
                f"em_cutoff={self.em_cutoff} too small for |t|={abs(t):g}; "
                f"need at least {need}")

    def sized_for(self, t: float) -> "EvalConfig":
        """Copy with em_cutoff raised to the validity bound for height t."""
        need = required_em_cutoff(t)
        if self.em_cutoff >= need:
            return self
        return replace(self, em_cutoff=need)


DEFAULT_CONFIG = EvalConfig()

# Guard band in t around a zero ordinate: operations requiring "T not an
# ordinate" reject heights closer than this to a zero.
DEFAULT_ZERO_GUARD = 1e-6
