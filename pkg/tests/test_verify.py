import json
import math

import pytest

from circpat import enumeration, verify
from circpat.gfengine import C_nonoverlapping_closed
from circpat.series import ONE, ZSeries, derive, eval_numeric, exp0
from circpat.verify import (FAIL, NOT_APPLICABLE, PASS, VerificationReport, reports_to_csv,
                            reports_to_jsonl, reports_to_table, run_suite, verify_bijection,
                            verify_closed_forms, verify_conjecture_part1,
                            verify_conjecture_part2, verify_engine, verify_exponential_link,
                            verify_symmetries, verify_theorem_main, verify_u1_degeneration)


@pytest.mark.parametrize("sigma", [(1, 2, 3), (1, 3, 2), (1, 3, 4, 2), (3, 1, 2)])
def test_theorem_passes(sigma):
    r = verify_theorem_main(sigma, 8)
    assert r.status == PASS and r.first_divergence is None


def test_theorem_not_applicable_reports_raw_outcome():
    r = verify_theorem_main((2, 4, 1, 3), 7)
    assert r.status == NOT_APPLICABLE
    assert r.detail["raw_agrees"] is False
    assert r.detail["raw_first_divergence"]["n"] == 5


def test_conjectures():
    r1 = verify_conjecture_part1(20, oracle_n=8)
    r2 = verify_conjecture_part2(20, oracle_n=8)
    assert r1.status == PASS and r2.status == PASS
    assert r2.detail["constant_shift"] == "1"


def test_conjecture_part1_low_order_terms():
    from circpat.gfengine import D_riccati_123
    d = D_riccati_123(3).subs_u(0)
    assert d[0] == d[0] * d[0] - d[0] + 1
    assert 2 * d[2] == 2 * d[1] * d[0] - d[1]


def test_conjecture_part2_constant_bookkeeping():
    # C(0, 0) = 1, so exp(C - z^2/2) starts at e while C' starts at 1;
    # the exact identity holds once the constant term is subtracted
    C = C_nonoverlapping_closed((1, 3, 2), 10).subs_u(0)
    half = ZSeries.monomial(ONE / 2, 2, 10)
    assert exp0(C - 1 - half).truncate(9) == derive(C)
    assert math.exp(eval_numeric(C, 0.0, 0.0)) != eval_numeric(derive(C), 0.0, 0.0)


@pytest.mark.parametrize("sigma", [(1, 3, 2), (1, 2, 3), (1,)])
def test_symmetries(sigma):
    assert verify_symmetries(sigma, 7).status == PASS


def test_bijection_and_control():
    r = verify_bijection((1, 3, 2), 6)
    assert r.status == PASS
    cx = r.detail["control_counterexample"]
    assert cx["pattern"] == "213"
    assert cx["linear_occurrences"] != cx["circular_occurrences"]


def test_bijection_off_hypothesis():
    r = verify_bijection((2, 1, 3), 5, control=None)
    assert r.status == NOT_APPLICABLE
    assert r.detail["counterexample"] is not None


def test_closed_forms():
    r = verify_closed_forms(20, 1e-8, n_max=8)
    assert r.status == PASS
    assert r.detail["d123_max_abs_error"] < 1e-8
    assert len(r.detail["d123_points"]) == 9


@pytest.mark.parametrize("name", sorted(verify.ENGINES))
def test_engines(name):
    assert verify_engine(name, 8, 16).status == PASS


def test_exponential_link_and_u1():
    assert verify_exponential_link((1, 3, 4, 2), 15).status == PASS
    assert verify_u1_degeneration(15).status == PASS


def test_report_invariant():
    with pytest.raises(ValueError):
        VerificationReport("x", None, 1, FAIL)
    with pytest.raises(ValueError):
        VerificationReport("x", None, 1, PASS, {"n": 1})


def test_report_json_excludes_timing_by_default():
    r = verify_u1_degeneration(5)
    assert "wall_time" not in json.loads(r.to_json())
    assert "wall_time" in json.loads(r.to_json(include_timing=True))


def test_renderers():
    reports = run_suite(5, 8, identities=("conjecture1", "u1"))
    lines = reports_to_jsonl(reports).splitlines()
    assert [json.loads(x)["identity"] for x in lines] == ["conjecture-part1", "u1-degeneration"]
    csv_text = reports_to_csv(reports)
    assert csv_text.splitlines()[0] == "identity,pattern,size,status,first_divergence_n"
    assert "conjecture-part1" in reports_to_table(reports)


def test_suite_reproducible():
    a = reports_to_jsonl(run_suite(6, 12))
    enumeration.clear_cache()
    b = reports_to_jsonl(run_suite(6, 12))
    assert a == b
    assert all(json.loads(x)["status"] != FAIL for x in a.splitlines())


# -- fault injection: a single perturbed coefficient must be caught --

def _perturbed(fn, k):
    def wrapped(*args, **kwargs):
        s = fn(*args, **kwargs)
        if k > s.order:
            return s
        cs = list(s.coeffs)
        cs[k] = cs[k] + 1
        return ZSeries(cs, s.order)
    return wrapped


ENGINE_FUNCTIONS = ["D_riccati_123", "D_riccati_1234", "omega_monotone",
                    "omega_nonoverlapping", "C_nonoverlapping_closed", "closed_form_D1234_u0",
                    "C_bruteforce", "P_bruteforce"]


@pytest.mark.parametrize("fn_name", ENGINE_FUNCTIONS)
@pytest.mark.parametrize("k", [0, 1, 3, 6])
def test_single_coefficient_fault_is_caught(monkeypatch, fn_name, k):
    monkeypatch.setattr(verify, fn_name, _perturbed(getattr(verify, fn_name), k))
    reports = run_suite(6, 10, identities=("theorem", "conjecture1", "conjecture2",
                                           "closed-forms", "ode"))
    assert any(r.status == FAIL for r in reports)
    failed = [r for r in reports if r.status == FAIL]
    assert all(r.first_divergence is not None for r in failed)
