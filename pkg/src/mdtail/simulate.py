"""Monte Carlo estimators, exponential bounds, and exact inequality verifiers.

Estimators are deterministic for a given seed: replications are cut into
fixed-size chunks, chunk k draws from the counter-based stream (seed, k),
and partial results are reduced in chunk order.  Worker count therefore
changes wall time only, never output bytes.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .exponents import exponents_from_tail
from .rate import RateSpec, rate_limsup, rate_liminf
from .scale import ScaleFunction
from .tails import TailModel, _rng_stream, _tail_mean_u

__all__ = [
    "CHUNK_TARGET",
    "EstimatorError",
    "TiltingError",
    "Estimate",
    "SplitEstimate",
    "TruncationScheme",
    "TriangularSignArray",
    "TrajectoryPoint",
    "Trajectory",
    "LevyCheckResult",
    "MaxBoundResult",
    "plan_truncation",
    "crude_mc",
    "tilted_mc_truncated",
    "split_estimate",
    "bounded_array_mc",
    "unit_sign_array",
    "kolmogorov_upper",
    "kolmogorov_lower",
    "levy_maximal_check",
    "levy_maximal_sweep",
    "max_lower_bound_check",
    "max_lower_bound_sweep",
    "convergence_trajectory",
]

# Total elements (reps * n) drawn per chunk; fixes the chunk layout so that
# results do not depend on how chunks are scheduled across workers.
CHUNK_TARGET = 1 << 22


class EstimatorError(RuntimeError):
    """An estimator could not produce a value for the requested point."""


class TiltingError(EstimatorError):
    """The tilting equation has no root below the support boundary."""


@dataclass(frozen=True)
class Estimate:
    p_hat: float
    stderr: float
    n: int
    x: float
    log_p: float
    normalized: float
    method: str
    reps: int
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class TruncationScheme:
    n: int
    c_n: float
    mu_n: float
    p_n: float
    delta_hat_n: float


@dataclass(frozen=True)
class SplitEstimate:
    """Upper/lower bracket around the deviation probability.

    upper adds the analytic single-jump term to a tilted estimate at the
    eps-reduced threshold; lower multiplies a tilted estimate under the
    conditional no-jump law at the eps-enlarged threshold by the no-jump
    probability.  Both the raw x and the eps-corrected targets are recorded.
    """

    upper: Estimate
    lower: Estimate
    scheme: TruncationScheme
    x: float
    eps: float
    x_upper_target: float
    x_lower_target: float


@dataclass(frozen=True, eq=False)
class TriangularSignArray:
    """Row n holds n i.i.d. symmetric signs scaled to magnitude(n).

    Admissible when magnitude(n) <= tau(n) * sqrt(n / g(log n)) with tau
    decreasing to zero, which keeps the summands negligible relative to the
    deviation threshold.
    """

    label: str
    magnitude: Callable[[int], float]
    tau: Callable[[int], float]


def unit_sign_array(g: ScaleFunction) -> TriangularSignArray:
    """Plain +-1 signs; the admissibility envelope is met with equality."""
    return TriangularSignArray(
        label="unit_signs",
        magnitude=lambda n: 1.0,
        tau=lambda n: math.sqrt(g.eval(math.log(n)) / n),
    )


@dataclass(frozen=True)
class TrajectoryPoint:
    n: int
    estimates: tuple[Estimate, ...]
    error: str | None = None


@dataclass(frozen=True)
class Trajectory:
    model_label: str
    scale_label: str
    x: float
    method: str
    rate_limsup: float
    rate_liminf: float
    flags: tuple[str, ...]
    points: tuple[TrajectoryPoint, ...]


def _scale_at_n(g: ScaleFunction, n: int) -> float:
    G = g.eval(math.log(n))
    if G <= 0.0:
        raise ValueError(f"g(log n) must be positive; got {G} at n={n}")
    return G


def _validate_mc_args(n: int, reps: int, x: float) -> tuple[int, int]:
    n = int(n)
    reps = int(reps)
    if n < 2:
        raise ValueError("need n >= 2 so the deviation scale is positive")
    if reps < 1000:
        raise ValueError("need reps >= 1000")
    if not x > 0:
        raise ValueError("x must be positive")
    return n, reps


def _chunk_sizes(reps: int, n: int) -> list[int]:
    per = max(1, CHUNK_TARGET // max(n, 1))
    sizes = [per] * (reps // per)
    if reps % per:
        sizes.append(reps % per)
    return sizes


def _run_chunks(chunk_fn, n_chunks: int, workers: int) -> list:
    if workers <= 1:
        return [chunk_fn(k) for k in range(n_chunks)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(chunk_fn, range(n_chunks)))


def _finish_estimate(
    p_hat: float,
    stderr: float,
    n: int,
    x: float,
    G: float,
    method: str,
    reps: int,
    flags: tuple[str, ...] = (),
) -> Estimate:
    if p_hat > 0:
        log_p = math.log(p_hat)
    else:
        log_p = -math.inf
        flags = flags + ("zero_hits",)
    return Estimate(
        p_hat=p_hat,
        stderr=stderr,
        n=n,
        x=x,
        log_p=log_p,
        normalized=log_p / G,
        method=method,
        reps=reps,
        flags=flags,
    )


def crude_mc(
    model: TailModel,
    g: ScaleFunction,
    n: int,
    x: float,
    reps: int,
    seed: int,
    workers: int = 1,
) -> Estimate:
    """Direct frequency estimate of P(S_n - n*mu > x*sqrt(n*g(log n)))."""
    n, reps = _validate_mc_args(n, reps, x)
    G = _scale_at_n(g, n)
    threshold = n * model.mu + x * math.sqrt(n * G)
    sizes = _chunk_sizes(reps, n)

    def one_chunk(k: int) -> int:
        rng = _rng_stream(seed, k)
        draws = model.sampler(rng, sizes[k] * n).reshape(sizes[k], n)
        return int(np.count_nonzero(draws.sum(axis=1) > threshold))

    hits = sum(_run_chunks(one_chunk, len(sizes), workers))
    p_hat = hits / reps
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / reps)
    return _finish_estimate(p_hat, stderr, n, x, G, "crude", reps)


def plan_truncation(model: TailModel, g: ScaleFunction, n: int) -> TruncationScheme:
    """Cutoff, recentering constant, and exceedance probability at sample size n.

    The cutoff shrinks slowly (fourth and eighth roots) so the truncated
    variance stabilizes at practical n, and is clamped from below so that
    sqrt(n)/g(log n) never exceeds it.
    """
    n = int(n)
    if n < 2:
        raise ValueError("need n >= 2")
    G = _scale_at_n(g, n)
    delta = max(G**-0.25, n**-0.125)
    delta_hat = max(delta, G**-0.5)
    c = delta_hat * math.sqrt(n / G)
    right = float(model.right_tail(np.asarray([c]))[0])
    left = float(model.left_tail(np.asarray([c]))[0])
    p_n = right + left
    u_c = math.log(c)
    right_breaks = [math.log(a) for a, _ in model.atoms if a > c]
    left_breaks = [math.log(-a) for a, _ in model.atoms if -a > c]
    mean_above = c * right + _tail_mean_u(model.log_right_tail_u, u_c, right_breaks)
    mean_below = c * left + _tail_mean_u(model.log_left_tail_u, u_c, left_breaks)
    mu_n = model.mu - mean_above + mean_below
    return TruncationScheme(n=n, c_n=c, mu_n=mu_n, p_n=p_n, delta_hat_n=delta_hat)


def _restricted_law(
    model: TailModel, c: float, cells: int
) -> tuple[np.ndarray, np.ndarray, float]:
    """Discrete approximation of X restricted to [-c, c].

    Continuous mass goes to cell midpoints; known atoms keep their exact
    locations and masses.  Returns (values, masses, restricted_mass).
    """
    edges = np.linspace(-c, c, cells + 1)
    sf = np.asarray(model.prob_greater(edges), dtype=float)
    cell_mass = sf[:-1] - sf[1:]
    atom_entries = []
    for a, m in model.atoms:
        if not (-c <= a <= c):
            continue
        idx = int(np.searchsorted(edges, a, side="left")) - 1
        if idx >= 0:
            cell_mass[idx] -= m
        atom_entries.append((a, m))
    cell_mass = np.maximum(cell_mass, 0.0)
    mids = 0.5 * (edges[:-1] + edges[1:])
    keep = cell_mass > 0.0
    values = list(mids[keep])
    masses = list(cell_mass[keep])
    for a, m in atom_entries:
        values.append(a)
        masses.append(m)
    values = np.asarray(values, dtype=float)
    masses = np.asarray(masses, dtype=float)
    return values, masses, float(masses.sum())


def _cumulant(values: np.ndarray, log_masses: np.ndarray, theta: float) -> tuple[float, float]:
    """(K(theta), K'(theta)) of the discrete law, computed with a shared shift."""
    z = theta * values + log_masses
    m = float(z.max())
    w = np.exp(z - m)
    s = float(w.sum())
    K = m + math.log(s)
    Kp = float((values * w).sum()) / s
    return K, Kp


def _solve_tilt(values: np.ndarray, log_masses: np.ndarray, target: float) -> float:
    _, mean0 = _cumulant(values, log_masses, 0.0)
    if target <= mean0:
        return 0.0
    v_max = float(values.max())
    if target >= v_max:
        raise TiltingError(
            f"per-summand target {target:g} is at or beyond the support maximum {v_max:g}"
        )
    hi = 1.0
    while _cumulant(values, log_masses, hi)[1] < target:
        hi *= 2.0
        if hi > 1e8:
            raise TiltingError("tilting parameter exceeds 1e8; target too close to boundary")
    return brentq(
        lambda th: _cumulant(values, log_masses, th)[1] - target,
        0.0,
        hi,
        xtol=1e-14,
        rtol=8.9e-16,
    )


def _tilted_sum_estimate(
    values: np.ndarray,
    masses: np.ndarray,
    n: int,
    target_sum: float,
    reps: int,
    seed: int,
    workers: int,
) -> tuple[float, float]:
    """Importance-sampled P(sum of n i.i.d. draws > target_sum) and its stderr."""
    keep = masses > 0.0
    values = values[keep]
    masses = masses[keep] / masses[keep].sum()
    log_masses = np.log(masses)
    theta = _solve_tilt(values, log_masses, target_sum / n)
    K, _ = _cumulant(values, log_masses, theta)
    z = theta * values + log_masses
    tilted = np.exp(z - z.max())
    tilted /= tilted.sum()
    cum = np.cumsum(tilted)
    cum[-1] = 1.0
    log_offset = n * K
    sizes = _chunk_sizes(reps, n)

    def one_chunk(k: int) -> tuple[float, float, int]:
        rng = _rng_stream(seed, k)
        idx = np.searchsorted(cum, rng.random(sizes[k] * n), side="right")
        idx = np.minimum(idx, len(values) - 1)
        T = values[idx].reshape(sizes[k], n).sum(axis=1)
        hit = T > target_sum
        log_w = log_offset - theta * T
        y = np.where(hit, np.exp(np.minimum(log_w, 700.0)), 0.0)
        return float(y.sum()), float((y * y).sum()), int(np.count_nonzero(hit))

    s1 = s2 = 0.0
    for part in _run_chunks(one_chunk, len(sizes), workers):
        s1 += part[0]
        s2 += part[1]
    p_hat = s1 / reps
    var = max(s2 - reps * p_hat * p_hat, 0.0) / max(reps - 1, 1)
    return p_hat, math.sqrt(var / reps)


def tilted_mc_truncated(
    model: TailModel,
    g: ScaleFunction,
    n: int,
    x: float,
    reps: int,
    seed: int,
    eps: float | None = None,
    workers: int = 1,
    cells: int = 1 << 15,
) -> Estimate:
    """Estimate P(sum of truncated, recentered summands > (x - eps)*sqrt(n*g(log n))).

    The truncated law is discretized on a regular grid (atoms kept exact),
    exponentially tilted so the target becomes typical, and reweighted by
    the likelihood ratio, which keeps the estimator unbiased.
    """
    n, reps = _validate_mc_args(n, reps, x)
    if eps is None:
        eps = x / 10.0
    if not 0.0 < eps < x:
        raise ValueError("eps must lie in (0, x)")
    G = _scale_at_n(g, n)
    scheme = plan_truncation(model, g, n)
    values, masses, restricted = _restricted_law(model, scheme.c_n, cells)
    exceed = max(1.0 - restricted, 0.0)
    values = np.append(values, 0.0)
    masses = np.append(masses, exceed)
    values = values - scheme.mu_n
    target_sum = (x - eps) * math.sqrt(n * G)
    p_hat, stderr = _tilted_sum_estimate(values, masses, n, target_sum, reps, seed, workers)
    return _finish_estimate(p_hat, stderr, n, x, G, "tilted", reps)


def split_estimate(
    model: TailModel,
    g: ScaleFunction,
    n: int,
    x: float,
    reps: int,
    seed: int,
    eps: float | None = None,
    workers: int = 1,
    cells: int = 1 << 15,
) -> SplitEstimate:
    """Bracket P(S_n - n*mu > x*sqrt(n*g(log n))) from both sides.

    Upper: truncated-sum estimate at threshold (x - eps) plus the analytic
    union term n * P(X > sqrt(n)/g(log n)), clipped to 1.  Lower: estimate
    under the law conditioned on no exceedance, at threshold (x + eps),
    times the exact no-exceedance probability (1 - p_n)^n.
    """
    n, reps = _validate_mc_args(n, reps, x)
    if eps is None:
        eps = x / 10.0
    if not 0.0 < eps < x:
        raise ValueError("eps must lie in (0, x)")
    G = _scale_at_n(g, n)
    a_n = math.sqrt(n * G)
    scheme = plan_truncation(model, g, n)
    values, masses, restricted = _restricted_law(model, scheme.c_n, cells)
    exceed = max(1.0 - restricted, 0.0)

    v_values = np.append(values, 0.0) - scheme.mu_n
    v_masses = np.append(masses, exceed)
    p_trunc, se_trunc = _tilted_sum_estimate(
        v_values, v_masses, n, (x - eps) * a_n, reps, seed, workers
    )
    max_term = n * float(model.right_tail(np.asarray([math.sqrt(n) / G]))[0])
    upper_flags: tuple[str, ...] = ()
    if max_term >= 1.0:
        upper_flags += ("max_term_vacuous",)
    if n * (scheme.mu_n - model.mu) > eps * a_n:
        upper_flags += ("mu_shift_exceeds_eps",)
    p_upper = min(1.0, p_trunc + max_term)
    upper = _finish_estimate(p_upper, se_trunc, n, x, G, "split", reps, upper_flags)

    cond_masses = masses / restricted
    mu_tilde = scheme.mu_n / (1.0 - scheme.p_n) if scheme.p_n < 1.0 else math.nan
    lower_flags: tuple[str, ...] = ()
    if not math.isfinite(mu_tilde) or n * abs(mu_tilde - model.mu) > eps * a_n:
        lower_flags += ("mu_shift_exceeds_eps",)
    target_cond = n * model.mu + (x + eps) * a_n
    p_cond, se_cond = _tilted_sum_estimate(
        values, cond_masses, n, target_cond, reps, seed + 1, workers
    )
    no_jump = math.exp(n * math.log1p(-scheme.p_n)) if scheme.p_n < 1.0 else 0.0
    lower = _finish_estimate(
        p_cond * no_jump, se_cond * no_jump, n, x, G, "conditional-lower", reps, lower_flags
    )
    return SplitEstimate(
        upper=upper,
        lower=lower,
        scheme=scheme,
        x=x,
        eps=eps,
        x_upper_target=x - eps,
        x_lower_target=x + eps,
    )


def bounded_array_mc(
    array: TriangularSignArray,
    g: ScaleFunction,
    n: int,
    r: float,
    reps: int,
    seed: int,
    workers: int = 1,
) -> Estimate:
    """Estimate P(sum of row-n signs > r*sqrt(n*g(log n))) for a sign array.

    The row magnitude must respect the admissibility envelope
    magnitude(n) <= tau(n)*sqrt(n/g(log n)) with tau decreasing; arrays
    violating it are rejected because the comparison against the quadratic
    rate is only meaningful for negligible summands.
    """
    n, reps = _validate_mc_args(n, reps, r)
    G = _scale_at_n(g, n)
    b = float(array.magnitude(n))
    if b <= 0:
        raise ValueError("magnitude(n) must be positive")
    envelope = array.tau(n) * math.sqrt(n / G)
    if b > envelope * (1.0 + 1e-9):
        raise ValueError(
            f"magnitude {b:g} violates the envelope tau(n)*sqrt(n/g(log n)) = {envelope:g}"
        )
    taus = [array.tau(m) for m in (n, 2 * n, 4 * n, 8 * n)]
    if any(t2 > t1 + 1e-15 for t1, t2 in zip(taus[:-1], taus[1:])) or not taus[-1] < taus[0]:
        raise ValueError("tau must decrease toward zero along growing n")
    threshold = r * math.sqrt(n * G)
    sizes = _chunk_sizes(reps, n)

    def one_chunk(k: int) -> int:
        rng = _rng_stream(seed, k)
        heads = rng.binomial(n, 0.5, size=sizes[k])
        return int(np.count_nonzero(b * (2.0 * heads - n) > threshold))

    hits = sum(_run_chunks(one_chunk, len(sizes), workers))
    p_hat = hits / reps
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / reps)
    return _finish_estimate(p_hat, stderr, n, r, G, "crude", reps)


def kolmogorov_upper(B_n: float, M_n: float, x_n: float) -> float:
    """Exponential upper bound exp(-(x^2/2B)(1 - xM/2B)) for bounded centered sums.

    Valid only while x*M <= B; callers outside that window get an error
    rather than a silently meaningless number.
    """
    if not B_n > 0:
        raise ValueError("B_n must be positive")
    if M_n < 0:
        raise ValueError("M_n must be nonnegative")
    if not x_n > 0:
        raise ValueError("x_n must be positive")
    if x_n * M_n > B_n:
        raise ValueError("outside the validity window: need x_n * M_n <= B_n")
    q = x_n * x_n / (2.0 * B_n)
    return math.exp(-q * (1.0 - x_n * M_n / (2.0 * B_n)))


def kolmogorov_lower(B_n: float, x_n: float, eps: float) -> float:
    """Asymptotic floor exp(-(x^2/2B)(1 - eps)); meaningful in trend only."""
    if not B_n > 0:
        raise ValueError("B_n must be positive")
    if not x_n > 0:
        raise ValueError("x_n must be positive")
    if not 0.0 <= eps < 1.0:
        raise ValueError("eps must lie in [0, 1)")
    return math.exp(-(x_n * x_n / (2.0 * B_n)) * (1.0 - eps))


@dataclass(frozen=True)
class LevyCheckResult:
    n: int
    t: Fraction
    increment_side: Fraction
    increment_bound: Fraction
    prefix_side: Fraction
    prefix_bound: Fraction
    passed_increment: bool
    passed_prefix: bool

    @property
    def passed(self) -> bool:
        return self.passed_increment and self.passed_prefix


def _as_law(weights) -> list[tuple[Fraction, Fraction]]:
    law = [(Fraction(v), Fraction(p)) for v, p in weights]
    if len(law) > 4:
        raise ValueError("discrete support must have at most 4 points")
    if any(p <= 0 for _, p in law):
        raise ValueError("probabilities must be positive")
    if sum(p for _, p in law) != 1:
        raise ValueError("probabilities must sum to exactly 1")
    if len({v for v, _ in law}) != len(law):
        raise ValueError("support points must be distinct")
    return law


def _median(dist: dict[Fraction, Fraction]) -> Fraction:
    """Midpoint of the median interval; antisymmetric under negation."""
    items = sorted(dist.items())
    half = Fraction(1, 2)
    cum = Fraction(0)
    lo = None
    for v, p in items:
        cum += p
        if cum >= half:
            lo = v
            break
    cum = Fraction(0)
    hi = None
    for v, p in reversed(items):
        cum += p
        if cum >= half:
            hi = v
            break
    return (lo + hi) / 2


def _partial_sum_dists(law, n: int) -> list[dict[Fraction, Fraction]]:
    dists = [{Fraction(0): Fraction(1)}]
    for _ in range(n):
        nxt: dict[Fraction, Fraction] = {}
        for s, ps in dists[-1].items():
            for v, pv in law:
                nxt[s + v] = nxt.get(s + v, Fraction(0)) + ps * pv
        dists.append(nxt)
    return dists


def _sorted_suffix(stats: list[tuple[Fraction, Fraction]]):
    stats = sorted(stats)
    values = [v for v, _ in stats]
    suffix = [Fraction(0)] * (len(stats) + 1)
    for i in range(len(stats) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + stats[i][1]
    return values, suffix


def _prob_greater_than(values, suffix, t: Fraction) -> Fraction:
    return suffix[bisect_right(values, t)]


def levy_maximal_sweep(weights, n: int, thresholds) -> list[LevyCheckResult]:
    """Exact check of both maximal inequalities at several thresholds.

    All outcome tuples of n i.i.d. draws are enumerated with rational
    arithmetic, medians follow the midpoint convention (so negating the law
    negates them), and each threshold is answered from sorted suffix sums of
    the enumerated statistics.
    """
    law = _as_law(weights)
    n = int(n)
    if not 1 <= n <= 6:
        raise ValueError("enumeration supports 1 <= n <= 6")
    dists = _partial_sum_dists(law, n)
    med = [_median(d) for d in dists]
    stat_incr: list[tuple[Fraction, Fraction]] = []
    stat_pref: list[tuple[Fraction, Fraction]] = []
    stat_maxT: list[tuple[Fraction, Fraction]] = []
    stat_Tn: list[tuple[Fraction, Fraction]] = []
    for outcome in product(law, repeat=n):
        prob = Fraction(1)
        T = Fraction(0)
        best_incr = None
        best_pref = None
        best_T = None
        for k, (v, pv) in enumerate(outcome, start=1):
            prob *= pv
            cand_incr = v + med[k - 1]
            T += v
            cand_pref = T + med[n - k]
            if best_incr is None or cand_incr > best_incr:
                best_incr = cand_incr
            if best_pref is None or cand_pref > best_pref:
                best_pref = cand_pref
            if best_T is None or T > best_T:
                best_T = T
        stat_incr.append((best_incr, prob))
        stat_pref.append((best_pref, prob))
        stat_maxT.append((best_T, prob))
        stat_Tn.append((T, prob))
    tables = [_sorted_suffix(s) for s in (stat_incr, stat_pref, stat_maxT, stat_Tn)]
    results = []
    for t in thresholds:
        tf = Fraction(t)
        lhs1 = _prob_greater_than(*tables[0], tf)
        lhs2 = _prob_greater_than(*tables[1], tf)
        rhs1 = 2 * _prob_greater_than(*tables[2], tf)
        rhs2 = 2 * _prob_greater_than(*tables[3], tf)
        results.append(
            LevyCheckResult(
                n=n,
                t=tf,
                increment_side=lhs1,
                increment_bound=rhs1,
                prefix_side=lhs2,
                prefix_bound=rhs2,
                passed_increment=lhs1 <= rhs1,
                passed_prefix=lhs2 <= rhs2,
            )
        )
    return results


def levy_maximal_check(weights, n: int, t) -> LevyCheckResult:
    return levy_maximal_sweep(weights, n, [t])[0]


@dataclass(frozen=True)
class MaxBoundResult:
    p: float
    n: int
    lhs: float
    rhs: float
    passed: bool


def max_lower_bound_check(p: float, n: int) -> MaxBoundResult:
    """Check (1 and n*p)/2 <= 1 - (1-p)^n, the i.i.d. maximum lower bound."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be a probability")
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    lhs = min(1.0, n * p) / 2.0
    rhs = 1.0 if p >= 1.0 else -math.expm1(n * math.log1p(-p))
    return MaxBoundResult(p=p, n=n, lhs=lhs, rhs=rhs, passed=lhs <= rhs)


def max_lower_bound_sweep(p_values, n_values) -> tuple[bool, int]:
    """Vectorized grid sweep; returns (all_passed, failure_count)."""
    p = np.asarray(p_values, dtype=float)[:, None]
    n = np.asarray(n_values, dtype=float)[None, :]
    if np.any(p < 0) or np.any(p > 1) or np.any(n < 1):
        raise ValueError("p must be probabilities and n positive")
    lhs = np.minimum(1.0, n * p) / 2.0
    with np.errstate(divide="ignore"):
        rhs = np.where(p >= 1.0, 1.0, -np.expm1(n * np.log1p(-np.minimum(p, 1.0 - 1e-17))))
    rhs = np.where(p >= 1.0, 1.0, rhs)
    failures = int(np.count_nonzero(lhs > rhs))
    return failures == 0, failures


def convergence_trajectory(
    model: TailModel,
    g: ScaleFunction,
    x: float,
    n_grid,
    method: str,
    reps: int,
    seed: int,
    eps: float | None = None,
    workers: int = 1,
) -> Trajectory:
    """Run one estimator along n_grid and attach the theoretical rate band.

    Per-point estimator failures are recorded on the point instead of
    aborting the sweep.  The band uses the model's recorded design exponents
    when they apply to this scale, otherwise exponents computed from the
    analytic tail; infinite variance forces a degenerate zero band.
    """
    n_grid = [int(v) for v in n_grid]
    if len(n_grid) == 0 or any(b <= a for a, b in zip(n_grid[:-1], n_grid[1:])):
        raise ValueError("n_grid must be nonempty and strictly increasing")
    if method not in ("crude", "tilted", "split"):
        raise ValueError("method must be one of 'crude', 'tilted', 'split'")
    flags: tuple[str, ...] = ()
    if math.isinf(model.sigma2):
        band_up, band_low = 0.0, 0.0
        flags += ("infinite_variance_band",)
    else:
        if model.design_exponents is not None and model.design_scale_label in (None, g.label):
            exps = model.design_exponents
        else:
            exps = exponents_from_tail(model, g)
        spec = RateSpec(sigma2=model.sigma2, rho=g.rho, exps=exps)
        band_up = rate_limsup(spec, x, "upper")
        band_low = rate_liminf(spec, x, "upper")
    points = []
    for n in n_grid:
        try:
            if method == "crude":
                ests: tuple[Estimate, ...] = (crude_mc(model, g, n, x, reps, seed, workers),)
            elif method == "tilted":
                ests = (tilted_mc_truncated(model, g, n, x, reps, seed, eps, workers),)
            else:
                se = split_estimate(model, g, n, x, reps, seed, eps, workers)
                ests = (se.upper, se.lower)
            points.append(TrajectoryPoint(n=n, estimates=ests))
        except EstimatorError as exc:
            points.append(TrajectoryPoint(n=n, estimates=(), error=str(exc)))
    return Trajectory(
        model_label=model.label,
        scale_label=g.label,
        x=x,
        method=method,
        rate_limsup=band_up,
        rate_liminf=band_low,
        flags=flags,
        points=tuple(points),
    )
