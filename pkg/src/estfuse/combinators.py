"""
Combination rules mapping K source estimates to one resultant.

``combine_virtual_sampling`` treats each source as a distribution of sample
means: sources share the smallest source variance as their underlying
variance and differ only in (real-valued) sample size.  The other rules are
the usual baselines: inverse-variance and unweighted means, and interval
intersection / cover on midpoint and half-length intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from estfuse.estimates import (
    DEFAULT_POLICY,
    CalibrationPolicy,
    CombinedEstimate,
    EmptyIntersection,
    InfiniteCover,
    Interval,
    Method,
    NoInformativeSources,
    SourceEstimate,
    calibrate,
    to_interval,
)

__all__ = [
    "VirtualSamplingDiagnostics",
    "combine",
    "combine_cover",
    "combine_intersection",
    "combine_unweighted_mean",
    "combine_virtual_sampling",
    "combine_weighted_mean",
    "decompose",
    "sample_sizes",
]


@dataclass(frozen=True)
class VirtualSamplingDiagnostics:
    """Intermediate quantities of one virtual-sampling combination.

    Per-source lists follow input order.  Variances are in calibrated
    (standard deviation squared) units.
    """

    v_star: float
    sample_sizes: Tuple[float, ...]
    n: float
    u_values: Tuple[float, ...]
    u_bar: float
    between_variance: float
    v: float
    labels: Tuple[Optional[str], ...] = ()


def sample_sizes(variances: Sequence[float]) -> Tuple[float, list]:
    """Return ``(v_star, n_i)`` for the given source variances.

    Infinite variances get sample size 0.  If any variance is zero, every
    zero-variance source gets 1, all others 0, and ``v_star`` is 0.
    """
    finite = [v for v in variances if math.isfinite(v)]
    if not finite:
        raise NoInformativeSources()
    v_star = min(finite)
    if v_star == 0:
        return 0.0, [1.0 if v == 0 else 0.0 for v in variances]
    return v_star, [v_star / v if math.isfinite(v) else 0.0 for v in variances]


def _weighted_mean(weights: Sequence[float], values: Sequence[float], total: float) -> float:
    m = math.fsum(w * x for w, x in zip(weights, values)) / total
    # Clamp rounding excursions outside the range of the contributing values.
    used = [x for w, x in zip(weights, values) if w > 0]
    return min(max(m, min(used)), max(used))


def combine_virtual_sampling(
    estimates: Sequence[SourceEstimate], p: CalibrationPolicy = DEFAULT_POLICY
) -> Tuple[CombinedEstimate, VirtualSamplingDiagnostics]:
    if not estimates:
        raise NoInformativeSources("no estimates given")
    values = [e.value for e in estimates]
    variances = [calibrate(e, p) ** 2 for e in estimates]
    v_star, n_i = sample_sizes(variances)
    n = math.fsum(n_i)
    m = _weighted_mean(n_i, values, n)

    sq_dist = [(x - m) ** 2 for x in values]
    u_i = [v_star + d for d in sq_dist]
    u_bar = math.fsum(w * u for w, u in zip(n_i, u_i)) / n
    between = math.fsum(w * d for w, d in zip(n_i, sq_dist)) / n
    v = u_bar / n
    s = math.sqrt(v) / p.sigma_scale

    diagnostics = VirtualSamplingDiagnostics(
        v_star=v_star,
        sample_sizes=tuple(n_i),
        n=n,
        u_values=tuple(u_i),
        u_bar=u_bar,
        between_variance=between,
        v=v,
        labels=tuple(e.label for e in estimates),
    )
    return CombinedEstimate(m, s, Method.VIRTUAL_SAMPLING), diagnostics


def decompose(d: VirtualSamplingDiagnostics) -> Tuple[float, float]:
    """Split ``u_bar`` into the shared source variance and the spread of source means."""
    return d.v_star, d.between_variance


def combine_weighted_mean(
    estimates: Sequence[SourceEstimate], p: CalibrationPolicy = DEFAULT_POLICY
) -> CombinedEstimate:
    """Inverse-variance weighted mean with pooled-precision uncertainty.

    The uncertainty ``sqrt(1 / sum(1 / v_i))`` ignores disagreement between
    sources; it is kept as a classical baseline.
    """
    if not estimates:
        raise NoInformativeSources("no estimates given")
    variances = [calibrate(e, p) ** 2 for e in estimates]
    # Weights rescaled by v_star: same mean, no overflow for tiny variances.
    v_star, w = sample_sizes(variances)
    total = math.fsum(w)
    m = _weighted_mean(w, [e.value for e in estimates], total)
    s = math.sqrt(v_star / total) / p.sigma_scale
    return CombinedEstimate(m, s, Method.WEIGHTED_MEAN)


def combine_unweighted_mean(
    estimates: Sequence[SourceEstimate], p: CalibrationPolicy = DEFAULT_POLICY
) -> CombinedEstimate:
    """Arithmetic mean of values; uncertainty is the mean of the finite uncertainties.

    Deliberately naive: every source counts equally whatever its uncertainty.
    ``p`` is accepted for a uniform signature and has no effect.
    """
    if not estimates:
        raise NoInformativeSources("no estimates given")
    values = [e.value for e in estimates]
    m = _weighted_mean([1.0] * len(values), values, len(values))
    finite = [e.uncertainty for e in estimates if not e.utterly_uncertain]
    s = math.fsum(finite) / len(finite) if finite else math.inf
    return CombinedEstimate(m, s, Method.UNWEIGHTED_MEAN)


def combine_intersection(intervals: Sequence[Interval]) -> Interval:
    if not intervals:
        raise NoInformativeSources("no intervals given")
    lower = max(i.lower for i in intervals)
    upper = min(i.upper for i in intervals)
    if lower > upper:
        raise EmptyIntersection()
    if math.isinf(lower) and math.isinf(upper):
        # every interval is unbounded: nothing pins the midpoint
        raise NoInformativeSources("every interval is unbounded")
    return _clamped(Interval.from_bounds(lower, upper), intervals)


def _clamped(result: Interval, intervals: Sequence[Interval]) -> Interval:
    # the exact midpoint lies within the sources' midpoints; rounding in
    # (lower + upper) / 2 can push it one ulp outside
    lo = min(i.midpoint for i in intervals)
    hi = max(i.midpoint for i in intervals)
    return Interval(min(max(result.midpoint, lo), hi), result.half_length)


def combine_cover(intervals: Sequence[Interval]) -> Interval:
    if not intervals:
        raise NoInformativeSources("no intervals given")
    if any(math.isinf(i.half_length) for i in intervals):
        raise InfiniteCover()
    return _clamped(Interval.from_bounds(min(i.lower for i in intervals), max(i.upper for i in intervals)), intervals)


def combine(
    estimates: Sequence[SourceEstimate],
    method: Method | str = Method.VIRTUAL_SAMPLING,
    p: CalibrationPolicy = DEFAULT_POLICY,
) -> CombinedEstimate:
    """Run any combination rule on source estimates.

    Interval rules see each source as ``[value - s, value + s]`` with ``s`` the
    calibrated uncertainty; the resulting half-length is mapped back through
    the calibration so the output is in the same units as the input.

    Raises a subclass of ``UndefinedResultant`` when the rule has no answer.
    """
    method = Method(method)
    if method is Method.VIRTUAL_SAMPLING:
        return combine_virtual_sampling(estimates, p)[0]
    if method is Method.WEIGHTED_MEAN:
        return combine_weighted_mean(estimates, p)
    if method is Method.UNWEIGHTED_MEAN:
        return combine_unweighted_mean(estimates, p)
    rule = combine_intersection if method is Method.INTERSECT else combine_cover
    result = rule([to_interval(e, p) for e in estimates])
    return CombinedEstimate(result.midpoint, result.half_length / p.sigma_scale, method)
