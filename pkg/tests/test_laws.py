from __future__ import annotations

import dataclasses

import jsonschema
import pytest

from propcat.errors import IllTyped, InvalidArrow, OutOfBounds
from propcat.instances.zmod import ZmodArrow, zmod_instance
from propcat.laws import (
    LAW_REPORT_SCHEMA,
    Failure,
    LawReport,
    check_monoidal_nat,
    check_sm_functor_laws,
    check_ssmc_laws,
    compose_functors,
    identity_functor,
    run_laws,
)
from propcat.mutations import broken_zmod_tensor, doubled_beta
from propcat.propification import beta_transformation, check_equivalence, embed_functor, strip_functor

Z = zmod_instance()


def test_reports_are_deterministic():
    a = check_ssmc_laws(Z, seed=5, trials=30).to_dict()
    b = check_ssmc_laws(Z, seed=5, trials=30).to_dict()
    assert a == b


def test_seeds_change_samples():
    drawn = {}

    def law(rng):
        drawn.setdefault("values", []).append(rng.random())

    run_laws("probe", {"law": law}, seed=1, trials=3)
    run_laws("probe", {"law": law}, seed=2, trials=3)
    assert len(set(drawn["values"])) == 6


def test_resampling_out_of_bounds():
    attempts = []

    def flaky(rng):
        attempts.append(1)
        if len(attempts) % 4:
            raise OutOfBounds("too big")

    assert run_laws("flaky", {"flaky": flaky}, seed=0, trials=2).passed

    def never(rng):
        raise OutOfBounds("always too big")

    report = run_laws("never", {"never": never}, seed=0, trials=1)
    assert report.failures[0].detail.startswith("never: no in-bounds sample")


def test_library_errors_become_failures():
    def bad(rng):
        ZmodArrow(4, 6, 1)

    report = run_laws("bad", {"bad": bad}, seed=0, trials=2)
    assert report.failed_laws() == {"bad"}
    assert "InvalidArrow" in report.failures[0].detail


def test_ill_typed_sampler_propagates():
    liar = dataclasses.replace(Z, sample_arr=lambda a, b, rng: ZmodArrow(0, 0, 1))
    with pytest.raises(IllTyped):
        check_ssmc_laws(liar, seed=0, trials=5)


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        run_laws("x", {}, seed=0, trials=0)


def test_report_schema_and_text():
    report = LawReport("demo", 3, 1, (Failure(7, "law: broken"),))
    jsonschema.validate(report.to_dict(), LAW_REPORT_SCHEMA)
    assert str(report).startswith("[FAIL] demo: 3 trials, seed 1, 1 failures")
    assert "seed 7: law: broken" in str(report)
    ok = LawReport("demo", 3, 1)
    assert str(ok) == "[PASS] demo: 3 trials, seed 1"
    merged = LawReport.merge("all", [report, ok])
    assert merged.failures == report.failures and not merged.passed


def test_broken_tensor_detected():
    assert not check_ssmc_laws(broken_zmod_tensor(), seed=1, trials=100).passed


def test_doubled_beta_detected():
    report = check_equivalence(Z, seed=1, trials=100, nat=doubled_beta(Z))
    assert "beta_naturality" in report.failed_laws() or "beta_monoidality" in report.failed_laws()


def test_functor_composition():
    F = compose_functors(embed_functor(Z), strip_functor(Z))
    assert check_sm_functor_laws(F, seed=1, trials=100).passed
    assert check_sm_functor_laws(identity_functor(Z), seed=1, trials=50).passed


def test_beta_is_monoidal_natural():
    assert check_monoidal_nat(beta_transformation(Z), seed=2, trials=100).passed
