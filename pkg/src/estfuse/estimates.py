"""
Domain types for source estimates and resultants.

A source reports a value together with an uncertainty in the same units.
Uncertainty ``math.inf`` means the source professes no knowledge at all.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional


class Method(str, enum.Enum):
    """Combination rules known to the package."""

    VIRTUAL_SAMPLING = "virtual-sampling"
    WEIGHTED_MEAN = "weighted-mean"
    UNWEIGHTED_MEAN = "unweighted-mean"
    INTERSECT = "intersect"
    COVER = "cover"

    @property
    def is_interval(self) -> bool:
        return self in (Method.INTERSECT, Method.COVER)

    def __str__(self) -> str:
        return self.value


class UndefinedResultant(ValueError):
    """A combination rule has no resultant for the given inputs."""

    reason = "undefined resultant"

    def __init__(self, message: Optional[str] = None):
        super().__init__(message or self.reason)


class NoInformativeSources(UndefinedResultant):
    reason = "no informative sources"


class EmptyIntersection(UndefinedResultant):
    reason = "empty intersection"


class InfiniteCover(UndefinedResultant):
    reason = "infinite cover"


def _check_uncertainty(u: float, what: str) -> None:
    if math.isnan(u) or u < 0:
        raise ValueError(f"{what} must be non-negative, got {u!r}")


@dataclass(frozen=True)
class SourceEstimate:
    value: float
    uncertainty: float
    label: Optional[str] = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"value must be finite, got {self.value!r}")
        _check_uncertainty(self.uncertainty, "uncertainty")

    @property
    def utterly_uncertain(self) -> bool:
        return math.isinf(self.uncertainty)


@dataclass(frozen=True)
class CalibrationPolicy:
    """Maps a reported uncertainty ``u`` to a standard deviation ``sigma_scale * u``.

    The default scale of 1 reads the uncertainty as a standard deviation.
    A 95% half-width convention corresponds to ``sigma_scale = 1 / 1.96``.
    """

    sigma_scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma_scale) and self.sigma_scale > 0):
            raise ValueError(f"sigma_scale must be positive and finite, got {self.sigma_scale!r}")


DEFAULT_POLICY = CalibrationPolicy()


@dataclass(frozen=True)
class Interval:
    """Symmetric interval given by its midpoint and half-length."""

    midpoint: float
    half_length: float

    def __post_init__(self):
        if not math.isfinite(self.midpoint):
            raise ValueError(f"midpoint must be finite, got {self.midpoint!r}")
        _check_uncertainty(self.half_length, "half_length")

    @property
    def lower(self) -> float:
        return self.midpoint - self.half_length

    @property
    def upper(self) -> float:
        return self.midpoint + self.half_length

    @classmethod
    def from_bounds(cls, lower: float, upper: float) -> "Interval":
        if lower > upper:
            raise ValueError(f"lower bound {lower!r} exceeds upper bound {upper!r}")
        return cls((lower + upper) / 2, (upper - lower) / 2)

    def contains(self, other: "Interval", tol: float = 0.0) -> bool:
        return self.lower - tol <= other.lower and other.upper <= self.upper + tol


@dataclass(frozen=True)
class CombinedEstimate:
    value: float
    uncertainty: float
    method: Method

    def __post_init__(self):
        _check_uncertainty(self.uncertainty, "uncertainty")


def calibrate(e: SourceEstimate, p: CalibrationPolicy = DEFAULT_POLICY) -> float:
    """Standard deviation implied by a source's reported uncertainty."""
    return p.sigma_scale * e.uncertainty


def to_interval(e: SourceEstimate, p: CalibrationPolicy = DEFAULT_POLICY) -> Interval:
    return Interval(e.value, calibrate(e, p))


def from_interval(i: Interval, label: Optional[str] = None) -> SourceEstimate:
    return SourceEstimate(i.midpoint, i.half_length, label)
