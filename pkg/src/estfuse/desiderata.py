"""
Executable desiderata for combination rules.

Each desideratum D1..D10 gets a scenario generator that builds a base input
and a perturbed input satisfying the desideratum's precondition, and a
checker that evaluates the required inequality on the rule's outputs.
``run_desideratum`` drives many seeded cases and collects counterexamples.

Strict inequalities must hold by more than ``AuditConfig.tolerance``; with
``weak=True`` they relax to "no worse than tolerance", which is the
"or else remains unchanged" reading used for the interval rules.

Every case draws from its own RNG stream derived from
``(seed, desideratum, case index)``, so cases are independent and a report
is reproducible bit for bit from its config.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from estfuse.combinators import combine
from estfuse.estimates import (
    DEFAULT_POLICY,
    CalibrationPolicy,
    CombinedEstimate,
    Method,
    SourceEstimate,
    UndefinedResultant,
)

__all__ = [
    "AuditConfig",
    "CaseOutcome",
    "Desideratum",
    "DesideratumReport",
    "Scenario",
    "Violation",
    "evaluate_scenario",
    "generate_scenario",
    "run_audit",
    "run_desideratum",
]


class Desideratum(str, enum.Enum):
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    D4 = "D4"
    D5 = "D5"
    D6 = "D6"
    D7 = "D7"
    D8 = "D8"
    D9 = "D9"
    D10 = "D10"

    @property
    def title(self) -> str:
        return _TITLES[self]

    @property
    def number(self) -> int:
        return int(self.value[1:])

    @property
    def has_weak_form(self) -> bool:
        return self in (Desideratum.D2, Desideratum.D4, Desideratum.D7, Desideratum.D8, Desideratum.D9)

    def __str__(self) -> str:
        return self.value


_TITLES = {
    Desideratum.D1: "Range",
    Desideratum.D2: "Monotonicity",
    Desideratum.D3: "Symmetry",
    Desideratum.D4: "Certainty",
    Desideratum.D5: "Ignorance",
    Desideratum.D6: "Continuity",
    Desideratum.D7: "Composition",
    Desideratum.D8: "Support",
    Desideratum.D9: "Resolution",
    Desideratum.D10: "Sufficiency",
}

IGNORANCE_LADDER = (1e2, 1e4, 1e6)
CONTINUITY_LADDER = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8)
# value-preservation check for the symmetric-pair scenarios (D7, D9)
PRESERVE_RTOL = 1e-12
_GENERATION_ATTEMPTS = 60
_VALUE_RANGE = (-5.0, 5.0)
_UNCERTAINTY_RANGE = (0.1, 5.0)


@dataclass(frozen=True)
class AuditConfig:
    """Knobs for a desiderata audit.

    ``d10_ladder`` lists the source counts at which the sufficiency gap is
    measured; the gap must fall strictly along it and end at most
    ``d10_decay`` times its first value.
    """

    seed: int = 0
    cases: int = 1000
    tolerance: float = 1e-9
    min_sources: int = 2
    max_sources: int = 6
    weak: bool = False
    max_counterexamples: int = 20
    d7_unchanged_sources: bool = True
    d10_population_size: int = 200
    d10_ladder: Tuple[int, ...] = (5, 10, 20, 40, 80)
    d10_decay: float = 0.5

    def __post_init__(self):
        if self.cases < 1:
            raise ValueError("cases must be >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 1 <= self.min_sources <= self.max_sources:
            raise ValueError("need 1 <= min_sources <= max_sources")
        if max(self.d10_ladder) > self.d10_population_size:
            raise ValueError("d10_ladder exceeds the population size")


@dataclass(frozen=True)
class Scenario:
    base: Tuple[SourceEstimate, ...]
    perturbed: Tuple[SourceEstimate, ...]
    meta: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)


@dataclass(frozen=True)
class CaseOutcome:
    applicable: bool
    violated: bool = False
    observed: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)
    inequality: str = ""


NOT_APPLICABLE = CaseOutcome(applicable=False)


@dataclass(frozen=True)
class Violation:
    case: int
    base: Tuple[SourceEstimate, ...]
    perturbed: Tuple[SourceEstimate, ...]
    observed: Dict[str, Any]
    inequality: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case,
            "base": [_source_dict(e) for e in self.base],
            "perturbed": [_source_dict(e) for e in self.perturbed],
            "observed": self.observed,
            "inequality": self.inequality,
        }


def _source_dict(e: SourceEstimate) -> Dict[str, Any]:
    return {"value": e.value, "uncertainty": e.uncertainty}


@dataclass
class DesideratumReport:
    id: Desideratum
    method: Method
    weak: bool
    cases_run: int = 0
    skipped: int = 0
    violation_count: int = 0
    violations: List[Violation] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.cases_run == 0:
            return "not-applicable"
        return "pass" if self.violation_count == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id.value,
            "title": self.id.title,
            "method": self.method.value,
            "form": "weak" if self.weak and self.id.has_weak_form else "strict",
            "verdict": self.verdict,
            "cases_run": self.cases_run,
            "skipped": self.skipped,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
        }


# -- helpers ---------------------------------------------------------------

Rule = Callable[[Sequence[SourceEstimate]], CombinedEstimate]


def _rule(method: Method, policy: CalibrationPolicy) -> Rule:
    return lambda estimates: combine(estimates, method, policy)


def _try(f: Rule, estimates: Sequence[SourceEstimate]) -> Optional[CombinedEstimate]:
    try:
        return f(estimates)
    except UndefinedResultant:
        return None


def _scale(*groups: Sequence[SourceEstimate]) -> float:
    return max([1.0] + [abs(e.value) for g in groups for e in g])


def _uniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(rng.uniform(lo, hi))


def _log_uniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def _uncertainty(rng: np.random.Generator) -> float:
    return _log_uniform(rng, *_UNCERTAINTY_RANGE)


def _sources(rng: np.random.Generator, k: int) -> List[SourceEstimate]:
    return [SourceEstimate(_uniform(rng, *_VALUE_RANGE), _uncertainty(rng)) for _ in range(k)]


def _count(rng: np.random.Generator, cfg: AuditConfig, lo: int) -> int:
    lo = max(lo, cfg.min_sources)
    return int(rng.integers(lo, max(lo, cfg.max_sources) + 1))


def _replace(estimates: Sequence[SourceEstimate], i: int, **changes) -> Tuple[SourceEstimate, ...]:
    out = list(estimates)
    e = out[i]
    out[i] = SourceEstimate(changes.get("value", e.value), changes.get("uncertainty", e.uncertainty), e.label)
    return tuple(out)


def _case_rng(cfg: AuditConfig, d: Desideratum, case: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, d.number, case])


def _population(cfg: AuditConfig) -> np.ndarray:
    return np.random.default_rng([cfg.seed, 10_000]).standard_normal(cfg.d10_population_size)


# -- scenario generators ---------------------------------------------------


def _gen_range(rng, cfg, f):
    base = tuple(_sources(rng, _count(rng, cfg, 1)))
    return Scenario(base, base)


def _gen_monotonicity(rng, cfg, f):
    base = _sources(rng, _count(rng, cfg, 1))
    i = int(rng.integers(len(base)))
    perturbed = _replace(base, i, value=base[i].value + _uniform(rng, 0.1, 2.0))
    return Scenario(tuple(base), perturbed, {"index": i})


def _gen_symmetry(rng, cfg, f):
    a = _uncertainty(rng)
    base = (SourceEstimate(_uniform(rng, *_VALUE_RANGE), a), SourceEstimate(_uniform(rng, *_VALUE_RANGE), a))
    return Scenario(base, base)


def _gen_certainty(rng, cfg, f):
    base = _sources(rng, _count(rng, cfg, 1))
    r = _try(f, base)
    if r is None:
        return None
    eligible = [i for i, e in enumerate(base) if abs(e.value - r.value) > 1e-3]
    if not eligible:
        return None
    i = eligible[int(rng.integers(len(eligible)))]
    perturbed = _replace(base, i, uncertainty=base[i].uncertainty * _uniform(rng, 0.2, 0.9))
    return Scenario(tuple(base), perturbed, {"index": i})


def _gen_ignorance(rng, cfg, f):
    base = tuple(_sources(rng, _count(rng, cfg, 1)))
    extra = _uniform(rng, 2 * _VALUE_RANGE[0], 2 * _VALUE_RANGE[1])
    return Scenario(base, base + (SourceEstimate(extra, math.inf),), {"extra_value": extra})


def _gen_continuity(rng, cfg, f):
    base = _sources(rng, _count(rng, cfg, 1))
    i = int(rng.integers(len(base)))
    coord = "value" if rng.random() < 0.5 else "uncertainty"
    eps = CONTINUITY_LADDER[0]
    perturbed = _replace(base, i, **{coord: getattr(base[i], coord) + eps})
    return Scenario(tuple(base), perturbed, {"index": i, "coordinate": coord})


def _insert_pair(rng, others, low, high):
    """Place the pair at random positions among ``others``; return sources and pair indices."""
    k = len(others) + 2
    slots = [int(j) for j in rng.permutation(k)[:2]]
    out, it = [None] * k, iter(others)
    out[slots[0]], out[slots[1]] = low, high
    for j in range(k):
        if out[j] is None:
            out[j] = next(it)
    return out, slots


def _centre(rng, f, others):
    if not others:
        return _uniform(rng, *_VALUE_RANGE)
    r = _try(f, others)
    return None if r is None else r.value


def _gen_composition(rng, cfg, f):
    k = _count(rng, cfg, 2)
    others = _sources(rng, k - 2) if cfg.d7_unchanged_sources else []
    c = _centre(rng, f, others)
    if c is None:
        return None
    nearest = min((abs(e.value - c) for e in others), default=math.inf)
    if nearest < 1e-3:
        return None
    d = _uniform(rng, 0.05, 0.95) * min(nearest, 5.0)
    a = _uncertainty(rng)
    a2 = a * _uniform(rng, 1.1, 3.0)
    base, slots = _insert_pair(rng, others, SourceEstimate(c - d, a), SourceEstimate(c + d, a))
    perturbed = base
    for j in slots:
        perturbed = _replace(perturbed, j, uncertainty=a2)
    return Scenario(tuple(base), perturbed, {"changed": slots, "centre": c})


def _gen_support(rng, cfg, f):
    k = _count(rng, cfg, 2) - 1
    c = _uniform(rng, *_VALUE_RANGE)
    base = tuple(SourceEstimate(c, _uncertainty(rng)) for _ in range(k))
    return Scenario(base, base + (SourceEstimate(c, _uncertainty(rng)),))


def _gen_resolution(rng, cfg, f):
    k = _count(rng, cfg, 2)
    others = _sources(rng, k - 2)
    c = _centre(rng, f, others)
    if c is None:
        return None
    d = _uniform(rng, 0.1, 5.0)
    d2 = d * _uniform(rng, 0.0, 0.9)
    a = _uncertainty(rng)
    base, slots = _insert_pair(rng, others, SourceEstimate(c - d, a), SourceEstimate(c + d, a))
    lo, hi = sorted(slots, key=lambda j: base[j].value)
    perturbed = _replace(_replace(base, lo, value=c - d2), hi, value=c + d2)
    return Scenario(tuple(base), perturbed, {"changed": slots, "centre": c})


def _gen_sufficiency(rng, cfg, f):
    values = rng.permutation(_population(cfg))[: max(cfg.d10_ladder)]
    a = _log_uniform(rng, *_UNCERTAINTY_RANGE)
    b = a * _log_uniform(rng, 1.5, 4.0)
    if rng.random() < 0.5:
        a, b = b, a
    base = tuple(SourceEstimate(float(x), a) for x in values)
    perturbed = tuple(SourceEstimate(float(x), b) for x in values)
    return Scenario(base, perturbed, {"levels": (a, b)})


_GENERATORS = {
    Desideratum.D1: _gen_range,
    Desideratum.D2: _gen_monotonicity,
    Desideratum.D3: _gen_symmetry,
    Desideratum.D4: _gen_certainty,
    Desideratum.D5: _gen_ignorance,
    Desideratum.D6: _gen_continuity,
    Desideratum.D7: _gen_composition,
    Desideratum.D8: _gen_support,
    Desideratum.D9: _gen_resolution,
    Desideratum.D10: _gen_sufficiency,
}

# ladder-based checks handle undefined rungs themselves
_SELF_CHECKED = (Desideratum.D5, Desideratum.D6, Desideratum.D10)


def generate_scenario(
    d: Desideratum | str,
    rng: np.random.Generator,
    cfg: AuditConfig = AuditConfig(),
    method: Method | str = Method.VIRTUAL_SAMPLING,
    policy: CalibrationPolicy = DEFAULT_POLICY,
) -> Optional[Scenario]:
    """Draw a scenario for ``d`` whose precondition holds under ``method``.

    ``method`` only matters where the precondition refers to the resultant
    (D4, D7, D9) and for redrawing inputs the rule cannot combine.  Returns
    ``None`` when no usable scenario turns up within a fixed number of draws.
    """
    d, method = Desideratum(d), Method(method)
    f = _rule(method, policy)
    for _ in range(_GENERATION_ATTEMPTS):
        s = _GENERATORS[d](rng, cfg, f)
        if s is None:
            continue
        if d is Desideratum.D10:
            return s
        r0 = _try(f, s.base)
        if r0 is None:
            continue
        if d in _SELF_CHECKED:
            return s
        r1 = _try(f, s.perturbed)
        if r1 is None:
            continue
        if d in (Desideratum.D7, Desideratum.D9) and not _value_preserved(r0, r1, s):
            continue
        return s
    return None


def _value_preserved(r0: CombinedEstimate, r1: CombinedEstimate, s: Scenario) -> bool:
    return abs(r1.value - r0.value) <= PRESERVE_RTOL * _scale(s.base, s.perturbed)


# -- checkers --------------------------------------------------------------


def _compare(increase: bool, before: float, after: float, tol: float, weak: bool) -> Tuple[bool, str]:
    """Return ``(violated, inequality)`` for a required strict change or its weak form."""
    if increase:
        if weak:
            return not after >= before - tol, "after >= before - tol"
        return not after > before + tol, "after > before + tol"
    if weak:
        return not after <= before + tol, "after <= before + tol"
    return not after < before - tol, "after < before - tol"


def _pair(f, s):
    r0, r1 = _try(f, s.base), _try(f, s.perturbed)
    if r0 is None or r1 is None:
        return None
    return r0, r1


def _obs(r0: CombinedEstimate, r1: Optional[CombinedEstimate] = None, **extra) -> Dict[str, Any]:
    out = {"value": r0.value, "uncertainty": r0.uncertainty}
    if r1 is not None:
        out = {"before": out, "after": {"value": r1.value, "uncertainty": r1.uncertainty}}
    out.update(extra)
    return out


def _check_range(f, s, cfg):
    r = _try(f, s.base)
    if r is None:
        return NOT_APPLICABLE
    lo, hi = min(e.value for e in s.base), max(e.value for e in s.base)
    ok = lo - cfg.tolerance <= r.value <= hi + cfg.tolerance
    return CaseOutcome(True, not ok, _obs(r, min_value=lo, max_value=hi), "min(values) - tol <= value <= max(values) + tol")


def _check_monotonicity(f, s, cfg):
    rr = _pair(f, s)
    if rr is None:
        return NOT_APPLICABLE
    bad, ineq = _compare(True, rr[0].value, rr[1].value, cfg.tolerance, cfg.weak)
    return CaseOutcome(True, bad, _obs(*rr, index=s.meta["index"]), "value: " + ineq)


def _check_symmetry(f, s, cfg):
    r = _try(f, s.base)
    if r is None:
        return NOT_APPLICABLE
    mid = (s.base[0].value + s.base[1].value) / 2
    bad = not abs(r.value - mid) <= cfg.tolerance
    return CaseOutcome(True, bad, _obs(r, midpoint=mid), "|value - (m1 + m2) / 2| <= tol")


def _check_certainty(f, s, cfg):
    rr = _pair(f, s)
    if rr is None:
        return NOT_APPLICABLE
    target = s.base[s.meta["index"]].value
    before, after = abs(rr[0].value - target), abs(rr[1].value - target)
    bad, ineq = _compare(False, before, after, cfg.tolerance, cfg.weak)
    obs = _obs(*rr, index=s.meta["index"], distance_before=before, distance_after=after)
    return CaseOutcome(True, bad, obs, "distance to the sharpened source: " + ineq)


def _effect(r0: CombinedEstimate, r1: CombinedEstimate) -> float:
    return max(abs(r1.value - r0.value), abs(r1.uncertainty - r0.uncertainty))


def _check_ignorance(f, s, cfg):
    r0 = _try(f, s.base)
    if r0 is None:
        return NOT_APPLICABLE
    tol = cfg.tolerance
    obs: Dict[str, Any] = {"base": _obs(r0)}
    failures = []

    exact = _try(f, s.perturbed)
    if exact is not None:
        obs["exact_effect"] = _effect(r0, exact)
        if not obs["exact_effect"] <= tol:
            failures.append("exact: effect of an utterly uncertain source <= tol")

    extra = s.meta["extra_value"]
    effects = []
    for u in IGNORANCE_LADDER:
        r1 = _try(f, s.base + (SourceEstimate(extra, u),))
        if r1 is None:
            break
        effects.append(_effect(r0, r1))
    if len(effects) == len(IGNORANCE_LADDER):
        obs["limit_effects"] = effects
        shrinking = all(b <= a + tol for a, b in zip(effects, effects[1:]))
        if not (shrinking and effects[-1] <= tol):
            failures.append("limit: effects non-increasing along uncertainty ladder and final effect <= tol")
    elif exact is None:
        return NOT_APPLICABLE
    return CaseOutcome(True, bool(failures), obs, "; ".join(failures) or "effect of ignorant source vanishes")


def _check_continuity(f, s, cfg):
    r0 = _try(f, s.base)
    if r0 is None:
        return NOT_APPLICABLE
    i, coord = s.meta["index"], s.meta["coordinate"]
    changes = []
    for eps in CONTINUITY_LADDER:
        r1 = _try(f, _replace(s.base, i, **{coord: getattr(s.base[i], coord) + eps}))
        if r1 is None:
            return NOT_APPLICABLE
        changes.append(_effect(r0, r1))
    # the change on the finest rung must be small against the coarse ones
    rate = math.sqrt(CONTINUITY_LADDER[-1] / CONTINUITY_LADDER[0])
    bound = cfg.tolerance + rate * max(changes)
    bad = not changes[-1] <= bound
    obs = _obs(r0, index=i, coordinate=coord, eps=list(CONTINUITY_LADDER), changes=changes)
    return CaseOutcome(True, bad, obs, "change(eps_min) <= tol + sqrt(eps_min / eps_max) * max(change)")


def _check_composition(f, s, cfg):
    rr = _pair(f, s)
    if rr is None or not _value_preserved(*rr, s):
        return NOT_APPLICABLE
    bad, ineq = _compare(True, rr[0].uncertainty, rr[1].uncertainty, cfg.tolerance, cfg.weak)
    return CaseOutcome(True, bad, _obs(*rr, changed=list(s.meta["changed"])), "uncertainty: " + ineq)


def _check_support(f, s, cfg):
    rr = _pair(f, s)
    if rr is None:
        return NOT_APPLICABLE
    before, after = rr[0].uncertainty, rr[1].uncertainty
    if before <= cfg.tolerance:
        # already as low as possible: must stay put
        return CaseOutcome(True, not after <= before + cfg.tolerance, _obs(*rr), "uncertainty: after <= before + tol")
    bad, ineq = _compare(False, before, after, cfg.tolerance, cfg.weak)
    return CaseOutcome(True, bad, _obs(*rr), "uncertainty: " + ineq)


def _check_resolution(f, s, cfg):
    rr = _pair(f, s)
    if rr is None or not _value_preserved(*rr, s):
        return NOT_APPLICABLE
    bad, ineq = _compare(False, rr[0].uncertainty, rr[1].uncertainty, cfg.tolerance, cfg.weak)
    return CaseOutcome(True, bad, _obs(*rr, changed=list(s.meta["changed"])), "uncertainty: " + ineq)


def _check_sufficiency(f, s, cfg):
    gaps = []
    for k in cfg.d10_ladder:
        ra, rb = _try(f, s.base[:k]), _try(f, s.perturbed[:k])
        if ra is None or rb is None:
            return NOT_APPLICABLE
        gaps.append(abs(ra.uncertainty - rb.uncertainty))
    tol = cfg.tolerance
    if cfg.weak:
        falling = all(b <= a + tol for a, b in zip(gaps, gaps[1:]))
    else:
        falling = all(b < a - tol for a, b in zip(gaps, gaps[1:]))
    decayed = gaps[-1] <= cfg.d10_decay * gaps[0] + tol
    obs = {"levels": list(s.meta["levels"]), "source_counts": list(cfg.d10_ladder), "gaps": gaps}
    ineq = "gap between uncertainty levels falls along the source-count ladder and ends <= decay * first gap"
    return CaseOutcome(True, not (falling and decayed), obs, ineq)


_CHECKERS = {
    Desideratum.D1: _check_range,
    Desideratum.D2: _check_monotonicity,
    Desideratum.D3: _check_symmetry,
    Desideratum.D4: _check_certainty,
    Desideratum.D5: _check_ignorance,
    Desideratum.D6: _check_continuity,
    Desideratum.D7: _check_composition,
    Desideratum.D8: _check_support,
    Desideratum.D9: _check_resolution,
    Desideratum.D10: _check_sufficiency,
}


def evaluate_scenario(
    d: Desideratum | str,
    method: Method | str,
    scenario: Scenario,
    cfg: AuditConfig = AuditConfig(),
    policy: CalibrationPolicy = DEFAULT_POLICY,
) -> CaseOutcome:
    d, method = Desideratum(d), Method(method)
    return _CHECKERS[d](_rule(method, policy), scenario, cfg)


def _shrink(d, f, s: Scenario, cfg) -> Scenario:
    """One pass moving each perturbed coordinate group halfway back to the base."""
    groups = s.meta.get("changed") or ([s.meta["index"]] if "index" in s.meta else [])
    if d not in (Desideratum.D2, Desideratum.D4, Desideratum.D7, Desideratum.D9) or not groups:
        return s
    candidate = s.perturbed
    for j in groups:
        b, p = s.base[j], s.perturbed[j]
        candidate = _replace(
            candidate,
            j,
            value=b.value + (p.value - b.value) / 2,
            uncertainty=b.uncertainty + (p.uncertainty - b.uncertainty) / 2,
        )
    shrunk = Scenario(s.base, candidate, s.meta)
    return shrunk if _CHECKERS[d](f, shrunk, cfg).violated else s


def run_desideratum(
    d: Desideratum | str,
    method: Method | str,
    cfg: AuditConfig = AuditConfig(),
    policy: CalibrationPolicy = DEFAULT_POLICY,
) -> DesideratumReport:
    d, method = Desideratum(d), Method(method)
    f = _rule(method, policy)
    report = DesideratumReport(d, method, weak=cfg.weak and d.has_weak_form)
    for case in range(cfg.cases):
        s = generate_scenario(d, _case_rng(cfg, d, case), cfg, method, policy)
        outcome = NOT_APPLICABLE if s is None else _CHECKERS[d](f, s, cfg)
        if not outcome.applicable:
            report.skipped += 1
            continue
        report.cases_run += 1
        if outcome.violated:
            report.violation_count += 1
            if len(report.violations) < cfg.max_counterexamples:
                s = _shrink(d, f, s, cfg)
                outcome = _CHECKERS[d](f, s, cfg)
                report.violations.append(Violation(case, s.base, s.perturbed, outcome.observed, outcome.inequality))
    return report


def run_audit(
    method: Method | str,
    desiderata: Sequence[Desideratum | str] = tuple(Desideratum),
    cfg: AuditConfig = AuditConfig(),
    policy: CalibrationPolicy = DEFAULT_POLICY,
) -> List[DesideratumReport]:
    return [run_desideratum(d, method, cfg, policy) for d in desiderata]
