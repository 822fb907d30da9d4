"""
Independent checks for the virtual-sampling arithmetic.

Two routes that share no code with ``estfuse.combinators``:

* a Monte-Carlo estimate of the expected squared distance ``E[(x - c)^2]``
  against its closed form ``variance + (mean - c)^2``;
* the full virtual-sampling chain re-evaluated in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from estfuse.estimates import NoInformativeSources

RationalLike = Union[int, Fraction, str, float]

DISTRIBUTIONS = ("normal", "uniform", "laplace")


@dataclass(frozen=True)
class McConfig:
    samples: int = 1_000_000
    seed: int = 0
    distribution: str = "normal"

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}; expected one of {DISTRIBUTIONS}")


def exact_expected_sq_distance(mu: float, variance: float, c: float) -> float:
    if variance < 0:
        raise ValueError("variance must be non-negative")
    return variance + (mu - c) ** 2


def _draw(rng: np.random.Generator, mu: float, variance: float, cfg: McConfig) -> np.ndarray:
    sd = math.sqrt(variance)
    if cfg.distribution == "normal":
        return rng.normal(mu, sd, cfg.samples)
    if cfg.distribution == "uniform":
        half = math.sqrt(3.0) * sd
        return rng.uniform(mu - half, mu + half, cfg.samples)
    return rng.laplace(mu, sd / math.sqrt(2.0), cfg.samples)


def mc_expected_sq_distance(mu: float, variance: float, c: float, cfg: McConfig = McConfig()) -> Tuple[float, float]:
    """Sample estimate of ``E[(x - c)^2]`` and its standard error.

    ``x`` follows ``cfg.distribution`` with the given mean and variance.
    """
    if not (variance >= 0 and math.isfinite(variance)):
        raise ValueError("variance must be finite and non-negative")
    if variance == 0:
        # point mass: every draw equals mu
        return (mu - c) ** 2, 0.0
    rng = np.random.default_rng(cfg.seed)
    sq = (_draw(rng, mu, variance, cfg) - c) ** 2
    se = float(sq.std(ddof=1) / math.sqrt(cfg.samples)) if cfg.samples > 1 else math.inf
    return float(sq.mean()), se


@dataclass(frozen=True)
class ExactVirtualSampling:
    v_star: Fraction
    sample_sizes: Tuple[Fraction, ...]
    n: Fraction
    m: Fraction
    u_values: Tuple[Fraction, ...]
    u_bar: Fraction
    between_variance: Fraction
    v: Fraction


def _q(x: RationalLike) -> Fraction:
    if isinstance(x, float) and not math.isfinite(x):
        raise ValueError("exact oracle does not accept infinities")
    if isinstance(x, str) and x.strip().lower().lstrip("+-") in ("inf", "infinity", "nan"):
        raise ValueError("exact oracle does not accept infinities")
    if not isinstance(x, (Rational, float, str)):
        raise TypeError(f"cannot convert {x!r} to a rational")
    return Fraction(x)


def exact_virtual_sampling(estimates: Iterable[Tuple[RationalLike, RationalLike]]) -> ExactVirtualSampling:
    """Evaluate the virtual-sampling chain exactly.

    ``estimates`` are ``(value, standard deviation)`` pairs; floats are taken
    at their exact binary value.  The final square root is not taken: compare
    against the floating result through ``v``.
    """
    pairs = [(_q(m), _q(s)) for m, s in estimates]
    if not pairs:
        raise NoInformativeSources("no estimates given")
    if any(s < 0 for _, s in pairs):
        raise ValueError("standard deviations must be non-negative")

    variances = [s * s for _, s in pairs]
    if any(v == 0 for v in variances):
        v_star = Fraction(0)
        n_i = [Fraction(1) if v == 0 else Fraction(0) for v in variances]
    else:
        v_star = min(variances)
        n_i = [v_star / v for v in variances]
    n = sum(n_i, Fraction(0))
    m = sum((w * x for w, (x, _) in zip(n_i, pairs)), Fraction(0)) / n
    u_i = [v_star + (x - m) ** 2 for x, _ in pairs]
    u_bar = sum((w * u for w, u in zip(n_i, u_i)), Fraction(0)) / n
    between = sum((w * (x - m) ** 2 for w, (x, _) in zip(n_i, pairs)), Fraction(0)) / n
    return ExactVirtualSampling(
        v_star=v_star,
        sample_sizes=tuple(n_i),
        n=n,
        m=m,
        u_values=tuple(u_i),
        u_bar=u_bar,
        between_variance=between,
        v=u_bar / n,
    )


def exact_inverse_variance_mean(estimates: Sequence[Tuple[RationalLike, RationalLike]]) -> Fraction:
    """``sum(m_i / v_i) / sum(1 / v_i)`` in rationals; all deviations must be positive."""
    pairs = [(_q(m), _q(s)) for m, s in estimates]
    weights = [1 / (s * s) for _, s in pairs]
    return sum((w * x for w, (x, _) in zip(weights, pairs)), Fraction(0)) / sum(weights, Fraction(0))
