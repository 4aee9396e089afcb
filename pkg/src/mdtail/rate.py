"""Limit values of the normalized log-probabilities and regime classification.

On the deviation scale x*sqrt(n*g(log n)) the normalized log-probability
log P / g(log n) converges (along limsup/liminf) to

    -min(x^2 / (2 sigma^2), lam / 2^rho)

where lam is the tail exponent matching the probed side and the limsup or
liminf flavor.  The classifier sorts a law into the qualitative regimes the
limit can exhibit: identically zero, bounded away from 0 and -inf, mixed,
or degenerate -inf.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exponents import TailExponents

__all__ = ["RateSpec", "Regime", "rate_limsup", "rate_liminf", "rate_curve_csv", "classify"]

_SIDES = ("upper", "lower", "two-sided")


class Regime(enum.Enum):
    """Qualitative behavior of the normalized log-probability limit.

    BOUNDED_NONZERO_LIMSUP is listed for completeness but is unreachable
    from ordered exponent inputs: a negative finite limsup forces the
    liminf-flavored exponent to be positive as well, which is the
    BOUNDED_NONZERO_LIMINF_TOO case.  MIXED covers limsup 0 with a
    strictly negative liminf.
    """

    LIMIT_ZERO = "LIMIT_ZERO"
    BOUNDED_NONZERO_LIMSUP = "BOUNDED_NONZERO_LIMSUP"
    BOUNDED_NONZERO_LIMINF_TOO = "BOUNDED_NONZERO_LIMINF_TOO"
    MINUS_INFINITY = "MINUS_INFINITY"
    MIXED = "MIXED"


@dataclass(frozen=True)
class RateSpec:
    sigma2: float
    rho: float
    exps: TailExponents

    def __post_init__(self) -> None:
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0):
            raise ValueError("sigma2 must be a finite positive real")
        if math.isnan(self.rho) or self.rho < 0:
            raise ValueError("rho must be nonnegative")


def _lam_for(exps: TailExponents, side: str, flavor: str) -> float:
    side = side.replace("_", "-")
    if side not in _SIDES:
        raise ValueError(f"side must be one of {_SIDES}")
    table = {
        ("upper", "bar"): exps.lam1_bar,
        ("upper", "under"): exps.lam1_under,
        ("lower", "bar"): exps.lam2_bar,
        ("lower", "under"): exps.lam2_under,
        ("two-sided", "bar"): exps.lam_bar,
        ("two-sided", "under"): exps.lam_under,
    }
    return table[(side, flavor)]


def _rate(spec: RateSpec, x: float, lam: float) -> float:
    if not x > 0:
        raise ValueError("x must be positive")
    quad = x * x / (2.0 * spec.sigma2)
    if math.isinf(lam):
        return -quad
    value = min(quad, lam / 2.0**spec.rho)
    return 0.0 if value == 0.0 else -value


def rate_limsup(spec: RateSpec, x: float, side: str = "upper") -> float:
    """Limsup-flavored limit: the quadratic branch capped by the bar exponent."""
    return _rate(spec, x, _lam_for(spec.exps, side, "bar"))


def rate_liminf(spec: RateSpec, x: float, side: str = "upper") -> float:
    return _rate(spec, x, _lam_for(spec.exps, side, "under"))


def classify(
    sigma2: float,
    mean_matches_eta: bool,
    exps: TailExponents,
    rho: float = 1.0,
) -> Regime:
    """Sort a law into the qualitative limit regimes.

    The centering constant eta only matters through whether it equals the
    mean: any mismatch makes the deviation event typical and the normalized
    limit zero.  Infinite variance also forces the zero limit.  A degenerate
    law concentrated exactly at eta puts zero probability on every deviation,
    so the limit is -inf.  Otherwise the exponent pair decides: both zero
    gives the zero limit, a positive bar exponent bounds both flavors inside
    (-inf, 0), and a zero bar with positive under exponent mixes the two.
    rho is accepted for interface symmetry; the regime does not depend on it.
    """
    if math.isnan(sigma2) or sigma2 < 0:
        raise ValueError("sigma2 must be in [0, inf]")
    if math.isnan(rho) or rho < 0:
        raise ValueError("rho must be nonnegative")
    if not mean_matches_eta:
        return Regime.LIMIT_ZERO
    if sigma2 == 0.0:
        return Regime.MINUS_INFINITY
    if math.isinf(sigma2):
        return Regime.LIMIT_ZERO
    if exps.lam_bar == 0.0 and exps.lam_under == 0.0:
        return Regime.LIMIT_ZERO
    if exps.lam_bar > 0.0:
        return Regime.BOUNDED_NONZERO_LIMINF_TOO
    return Regime.MIXED


def _fmt17(value: float) -> str:
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".17g")


def rate_curve_csv(spec: RateSpec, x_values, side: str = "upper") -> str:
    """Plot-ready curve of both rate flavors, one row per x."""
    lines = ["x,rate_limsup,rate_liminf"]
    for x in x_values:
        x = float(x)
        lines.append(
            ",".join(
                (
                    _fmt17(x),
                    _fmt17(rate_limsup(spec, x, side)),
                    _fmt17(rate_liminf(spec, x, side)),
                )
            )
        )
    return "\n".join(lines) + "\n"
