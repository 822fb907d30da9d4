import math

import numpy as np
import pytest

from estfuse import Method, SourceEstimate, combine, combine_virtual_sampling
from estfuse.desiderata import (
    AuditConfig,
    Desideratum,
    Scenario,
    evaluate_scenario,
    generate_scenario,
    run_audit,
    run_desideratum,
)

S = SourceEstimate
SMALL = AuditConfig(seed=7, cases=200)


def test_enumeration():
    assert len(Desideratum) == 10
    assert [d.title for d in Desideratum] == [
        "Range", "Monotonicity", "Symmetry", "Certainty", "Ignorance",
        "Continuity", "Composition", "Support", "Resolution", "Sufficiency",
    ]
    assert Desideratum("D10").number == 10


def test_config_validation():
    with pytest.raises(ValueError):
        AuditConfig(cases=0)
    with pytest.raises(ValueError):
        AuditConfig(tolerance=0)
    with pytest.raises(ValueError):
        AuditConfig(min_sources=4, max_sources=3)


def test_symmetry_scenario_example():
    s = Scenario((S(0, 1), S(1, 1)), (S(0, 1), S(1, 1)))
    out = evaluate_scenario("D3", "virtual-sampling", s)
    assert out.applicable and not out.violated
    assert out.observed["value"] == 0.5


def test_composition_scenario_example():
    base = (S(-1, 1), S(1, 1))
    raised = (S(-1, 2), S(1, 2))
    out = evaluate_scenario("D7", "virtual-sampling", Scenario(base, raised, {"changed": [0, 1]}))
    assert out.observed["before"]["uncertainty"] == 1
    assert out.observed["after"]["uncertainty"] == pytest.approx(math.sqrt(2.5), rel=1e-15)
    assert not out.violated


def test_support_scenario_example():
    base = (S(2, 1), S(2, 1))
    out = evaluate_scenario("D8", "virtual-sampling", Scenario(base, base + (S(2, 1),)))
    assert out.observed["before"]["uncertainty"] == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert out.observed["after"]["uncertainty"] == pytest.approx(1 / math.sqrt(3), rel=1e-15)
    assert not out.violated


def test_support_at_zero_uncertainty_only_needs_no_increase():
    base = (S(2, 0),)
    out = evaluate_scenario("D8", "virtual-sampling", Scenario(base, base + (S(2, 1),)))
    assert out.applicable and not out.violated


@pytest.mark.parametrize("d", ["D7", "D9"])
@pytest.mark.parametrize("method", list(Method))
def test_pair_scenarios_preserve_resultant_value(d, method):
    cfg = AuditConfig(seed=3)
    for case in range(50):
        s = generate_scenario(d, np.random.default_rng([3, case]), cfg, method)
        if s is None:
            continue
        r0, r1 = combine(s.base, method), combine(s.perturbed, method)
        scale = max(abs(e.value) for e in s.base + s.perturbed)
        assert abs(r0.value - r1.value) <= 1e-12 * max(scale, 1)


def test_composition_scenarios_keep_unchanged_sources_farther():
    cfg = AuditConfig(seed=4)
    for case in range(100):
        s = generate_scenario("D7", np.random.default_rng([4, case]), cfg)
        m = combine(s.base, Method.VIRTUAL_SAMPLING).value
        changed = s.meta["changed"]
        d = abs(s.base[changed[0]].value - m)
        assert abs(s.base[changed[1]].value - m) == pytest.approx(d, abs=1e-12)
        assert all(abs(e.value - m) > d for j, e in enumerate(s.base) if j not in changed)
        assert s.perturbed[changed[0]].uncertainty == s.perturbed[changed[1]].uncertainty > s.base[changed[0]].uncertainty


def test_generators_respect_shapes():
    rng = np.random.default_rng(0)
    s = generate_scenario("D3", rng, SMALL)
    assert len(s.base) == 2 and s.base[0].uncertainty == s.base[1].uncertainty
    s = generate_scenario("D5", rng, SMALL)
    assert s.perturbed[-1].uncertainty == math.inf and s.perturbed[:-1] == s.base
    s = generate_scenario("D8", rng, SMALL)
    assert len({e.value for e in s.perturbed}) == 1
    s = generate_scenario("D2", rng, SMALL)
    i = s.meta["index"]
    assert s.perturbed[i].value > s.base[i].value
    s = generate_scenario("D4", rng, SMALL)
    i = s.meta["index"]
    assert s.perturbed[i].uncertainty < s.base[i].uncertainty


@pytest.mark.parametrize("d", [d for d in Desideratum if d is not Desideratum.D7])
def test_virtual_sampling_passes(d):
    r = run_desideratum(d, Method.VIRTUAL_SAMPLING, SMALL)
    assert r.verdict == "pass", r.to_dict()["violations"][:1]
    assert r.cases_run > 0


def test_virtual_sampling_passes_composition_for_isolated_pairs():
    cfg = AuditConfig(seed=7, cases=500, d7_unchanged_sources=False)
    assert run_desideratum("D7", Method.VIRTUAL_SAMPLING, cfg).passed


def test_composition_counterexample_for_virtual_sampling():
    # pair holds the smallest uncertainty; raising it lifts v_star and the outer
    # sources' sample sizes, so n grows faster than u_bar
    base = (S(-2.1, 1), S(2.1, 1), S(-2, 0.707), S(2, 0.707))
    raised = (S(-2.1, 1), S(2.1, 1), S(-2, 0.8), S(2, 0.8))
    out = evaluate_scenario("D7", Method.VIRTUAL_SAMPLING, Scenario(base, raised, {"changed": [2, 3]}))
    assert out.applicable and out.violated
    assert out.observed["after"]["uncertainty"] < out.observed["before"]["uncertainty"]


def test_composition_violations_only_when_pair_holds_minimum():
    r = run_desideratum("D7", Method.VIRTUAL_SAMPLING, AuditConfig(seed=42, cases=1000))
    assert r.violation_count == len(r.violations) > 0
    for v in r.violations:
        changed = [j for j, (b, p) in enumerate(zip(v.base, v.perturbed)) if b != p]
        pair_u = v.base[changed[0]].uncertainty
        assert all(pair_u < e.uncertainty for j, e in enumerate(v.base) if j not in changed)


def test_documented_failures():
    d9 = run_desideratum("D9", Method.INTERSECT, SMALL)
    assert d9.violation_count == d9.cases_run > 0
    assert run_desideratum("D5", Method.COVER, SMALL).verdict == "fail"
    assert run_desideratum("D8", Method.COVER, SMALL).verdict == "fail"
    assert run_desideratum("D4", Method.UNWEIGHTED_MEAN, SMALL).verdict == "fail"
    assert run_desideratum("D5", Method.UNWEIGHTED_MEAN, SMALL).verdict == "fail"
    assert run_desideratum("D10", Method.INTERSECT, SMALL).verdict == "fail"


@pytest.mark.parametrize("d", ["D1", "D3", "D5", "D6"])
def test_intersection_obeys(d):
    assert run_desideratum(d, Method.INTERSECT, SMALL).passed


@pytest.mark.parametrize("d", ["D2", "D4", "D7", "D8"])
def test_intersection_obeys_weak_forms(d):
    weak = AuditConfig(seed=7, cases=200, weak=True)
    assert run_desideratum(d, Method.INTERSECT, weak).passed
    assert not run_desideratum(d, Method.INTERSECT, SMALL).passed


@pytest.mark.parametrize("d", ["D1", "D2", "D3", "D6"])
def test_unweighted_mean_obeys(d):
    assert run_desideratum(d, Method.UNWEIGHTED_MEAN, SMALL).passed


def test_weighted_mean_uncertainty_ignores_disagreement():
    assert run_desideratum("D9", Method.WEIGHTED_MEAN, SMALL).verdict == "fail"


def test_reports_are_reproducible():
    a = [r.to_dict() for r in run_audit(Method.COVER, cfg=AuditConfig(seed=1, cases=50))]
    b = [r.to_dict() for r in run_audit(Method.COVER, cfg=AuditConfig(seed=1, cases=50))]
    assert a == b


def test_counterexamples_are_capped_and_verdict_consistent():
    r = run_desideratum("D5", Method.COVER, AuditConfig(seed=1, cases=100, max_counterexamples=3))
    assert r.violation_count == 100 and len(r.violations) == 3
    assert r.verdict == "fail"
    d = r.to_dict()
    assert d["violations"][0]["perturbed"][-1]["uncertainty"] == math.inf


def test_shrinking_keeps_a_violation():
    r = run_desideratum("D9", Method.INTERSECT, AuditConfig(seed=2, cases=20))
    for v in r.violations:
        s = Scenario(v.base, v.perturbed, {"changed": v.observed["changed"]})
        assert evaluate_scenario("D9", Method.INTERSECT, s).violated


def test_undefined_cases_are_skipped_not_raised():
    cfg = AuditConfig(seed=0, cases=20, min_sources=6, max_sources=6)
    r = run_desideratum("D10", Method.INTERSECT, cfg)
    assert r.cases_run + r.skipped == 20


def test_d10_gap_shrinks_for_virtual_sampling():
    s = generate_scenario("D10", np.random.default_rng(1), AuditConfig())
    out = evaluate_scenario("D10", Method.VIRTUAL_SAMPLING, s)
    gaps = out.observed["gaps"]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    first = abs(combine_virtual_sampling(s.base[:5])[0].uncertainty - combine_virtual_sampling(s.perturbed[:5])[0].uncertainty)
    assert gaps[0] == first
