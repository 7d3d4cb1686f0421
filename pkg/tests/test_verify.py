import json
import math

import pytest
from hypothesis import given, strategies as st

from frachardy.verify import (
    ClaimCheck,
    Relation,
    Report,
    Status,
    VerifyConfig,
    check_lambda,
    check_nsegments,
    check_perimeter_oracle,
    limit_check,
    nsegment_configs,
    richardson,
    run_all,
)

JSON_FIELDS = {"id", "description", "lhs", "rhs", "relation", "tolerance", "status", "params"}


def cc(lhs, rhs, relation, tol=1e-9, rungs=None):
    return ClaimCheck("t", "test", lhs, rhs, relation, tol, {}, rungs=rungs)


def test_relations():
    assert cc(1.0, 1.0 + 1e-10, "eq").status is Status.passed
    assert cc(1.0, 1.1, "eq").status is Status.failed
    # eq is relative once |rhs| exceeds 1
    assert cc(1000.0, 1000.0 + 5e-7, "eq").status is Status.passed
    assert cc(1.0, 2.0, "le").status is Status.passed
    assert cc(2.0, 1.0, "ge").status is Status.passed
    assert cc(1.0, 1.0, "lt").status is Status.failed
    assert cc(1.0, 1.0 + 2e-9, "lt").status is Status.passed
    assert cc(1.0 + 2e-9, 1.0, "gt").status is Status.passed
    assert cc(math.nan, 1.0, "le").status is Status.failed


def test_skipped_status_and_tolerance_validation():
    c = ClaimCheck("x", "y", 1.0, 2.0, Relation.eq, 1e-9, skip=True)
    assert c.status is Status.skipped and c.passed
    with pytest.raises(ValueError):
        ClaimCheck("x", "y", 1.0, 1.0, Relation.eq, 0.0)


def test_limit_relation_needs_monotone_tail():
    good = cc(1.0, 1.0, "limit", 1e-3, rungs=[1.3, 1.1, 1.05, 1.01])
    assert good.status is Status.passed
    oscillating = cc(1.0, 1.0, "limit", 1e-3, rungs=[1.3, 0.9, 1.05, 0.99])
    assert oscillating.status is Status.failed
    assert cc(1.0, 1.0, "limit", 1e-3).status is Status.failed


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_richardson_exact_on_polynomials(a, b, c):
    hs = [0.1 * 0.5**i for i in range(5)]
    vals = [a + b * h + c * h * h for h in hs]
    est, _ = richardson(hs, vals)
    assert est == pytest.approx(a, abs=1e-9)


def test_limit_check_builds_ladder():
    c = limit_check("lim", "1/(1-h) -> 1", lambda h: 1.0 / (1.0 - h), 0.1, 1.0, 1e-6)
    assert c.status is Status.passed
    assert len(c.rungs) == 5
    assert c.params["ladder"][0] == 0.1


def test_json_has_exact_fields():
    c = cc(1.0, 1.0, "limit", 1e-3, rungs=[1.2, 1.1, 1.0])
    d = c.to_json()
    assert set(d) == JSON_FIELDS
    assert d["params"]["rungs"] == [1.2, 1.1, 1.0]
    assert d["status"] == "pass"
    json.dumps(d)


def test_lambda_examples():
    checks = {c.id: c for c in check_lambda(grid=[(0.3, 2.0)])}
    strict = checks["lambda.strict.s0.3.p2"]
    assert strict.rhs == pytest.approx(20 / 3)
    assert strict.passed
    assert checks["lambda.sp1"].lhs == pytest.approx(2.0)


def test_nsegment_bound_example():
    (c,) = check_nsegments(configs=[(1.0, 1.0, 0.5, 1.0)])
    assert c.rhs == pytest.approx(2**1.5 / 0.5 * (1 - 0.5**0.5))
    assert c.rhs == pytest.approx(1.6569, abs=1e-4)
    assert c.passed


def test_nsegment_configs_are_seeded():
    assert nsegment_configs(seed=4) == nsegment_configs(seed=4)
    assert nsegment_configs(seed=4) != nsegment_configs(seed=5)
    assert all(sp <= 1 for _, _, sp, _ in nsegment_configs())


def test_perimeter_suite_small():
    checks = check_perimeter_oracle(n=10, seed=2)
    assert all(c.passed for c in checks)


def test_suite_selection_and_errors():
    rep = run_all(VerifyConfig(suite="punctured"))
    ids = [c.id for c in rep.checks]
    assert ids == sorted(ids)
    assert all(i.startswith(("punctured", "equal_intervals")) for i in ids)
    assert rep.ok
    with pytest.raises(ValueError):
        run_all(VerifyConfig(suite="nope"))


def test_full_run_is_green_and_reproducible():
    a = run_all(VerifyConfig(seed=7))
    b = run_all(VerifyConfig(seed=7))
    failed = [c.id for c in a.checks if not c.passed]
    assert failed == []
    assert a.to_jsonl() == b.to_jsonl()
    for line in a.to_jsonl().splitlines():
        assert set(json.loads(line)) == JSON_FIELDS
    assert "checks passed" in a.to_table()


def test_failing_rows_print_params():
    bad = ClaimCheck("bad", "fails", 1.0, 2.0, Relation.eq, 1e-9, {"s": 0.5})
    text = Report([bad], {}).to_table()
    assert "fail" in text and '"s": 0.5' in text
