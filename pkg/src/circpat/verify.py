"""Machine checks of the circular/linear generating-function identities.

Every check returns a :class:`VerificationReport`.  Exact checks compare
series coefficient by coefficient and, on failure, record the first
differing ``z``-degree together with both coefficients.  The enumeration
oracle in :mod:`circpat.enumeration` is the reference side wherever one is
available.
"""
from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from itertools import permutations

from . import enumeration
from .enumeration import DEFAULT_MAX_N
from .gfengine import (C_bruteforce, C_nonoverlapping_closed, D_riccati_123,
                       D_riccati_1234, P_bruteforce, closed_form_D1234_u0,
                       eval_D123_closed, is_zero_series, normalize_pattern,
                       omega_from_C, omega_monotone, omega_nonoverlapping, pattern_gf,
                       residual_dnonover, residual_monotone, residual_nonoverlapping,
                       residual_riccati_123, residual_riccati_1234)
from .permcore import (check_pattern, format_word, occurrences_circular,
                       occurrences_linear, phi, phi_inverse, lr_factorize,
                       symmetry_orbit)
from .series import ONE, ZSeries, derive, eval_numeric, exp0, first_divergence, integrate, ln1

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"

SAMPLE_U = (0.0, 0.5, 1.0)
SAMPLE_Z = (0.05, 0.1, 0.2)


@dataclass
class VerificationReport:
    identity: str
    pattern: str | None
    size: int
    status: str
    first_divergence: dict | None = None
    detail: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def __post_init__(self):
        if (self.status == FAIL) != (self.first_divergence is not None):
            raise ValueError("a report fails exactly when it carries a divergence")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json_obj(self, include_timing: bool = False) -> dict:
        obj = {
            "identity": self.identity,
            "pattern": self.pattern,
            "size": self.size,
            "status": self.status,
            "first_divergence": self.first_divergence,
            "detail": self.detail,
        }
        if include_timing:
            obj["wall_time"] = round(self.wall_time, 6)
        return obj

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json_obj(include_timing))


def _divergence(expected: ZSeries, got: ZSeries, upto: int | None = None):
    n = first_divergence(expected, got, upto)
    if n is None:
        return None
    return {"n": n, "expected": str(expected[n]), "got": str(got[n])}


def _report(identity, pattern, size, divergence, detail, started):
    return VerificationReport(
        identity=identity,
        pattern=format_word(pattern) if pattern is not None else None,
        size=size,
        status=FAIL if divergence else PASS,
        first_divergence=divergence,
        detail=detail,
        wall_time=time.perf_counter() - started,
    )


# -- the transfer theorem ---------------------------------------------------

def verify_theorem_main(sigma, n_max: int = 8, *, workers: int = 1,
                        max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Compare ``1 + log P`` (from linear enumeration) against circular enumeration."""
    started = time.perf_counter()
    sigma = check_pattern(sigma)
    P = P_bruteforce(sigma, n_max, workers=workers, max_n=max_n)
    C = C_bruteforce(sigma, n_max, workers=workers, max_n=max_n)
    if P[0] != ONE:
        divergence = {"n": 0, "expected": "1", "got": str(P[0]), "check": "P(u,0)=1"}
    else:
        divergence = _divergence(C, 1 + ln1(P))
    norm = normalize_pattern(sigma)
    if norm is None:
        # no claim is made here; the raw comparison is informational
        detail = {"raw_agrees": divergence is None, "raw_first_divergence": divergence}
        return VerificationReport("theorem-main", format_word(sigma), n_max, NOT_APPLICABLE,
                                  None, detail, time.perf_counter() - started)
    detail = {"normalized_pattern": format_word(norm[0]), "transform": norm[1]}
    return _report("theorem-main", sigma, n_max, divergence, detail, started)


# -- conjectured equations at u = 0 -----------------------------------------

def _z_squared_half(order):
    return ZSeries.monomial(ONE / 2, 2, order)


def verify_conjecture_part1(N: int = 20, *, oracle_n: int = 0) -> VerificationReport:
    """``D' = D**2 - D + 1`` for ``D = C'_123`` at ``u = 0``.

    With ``oracle_n > 0`` the enumerated circular series is checked as well.
    """
    started = time.perf_counter()
    D = D_riccati_123(N).subs_u(0)
    divergence = _divergence(D * D - D + 1, derive(D), N - 1)
    detail = {"series": "riccati-123"}
    if divergence is None and oracle_n > 1:
        Do = derive(C_bruteforce((1, 2, 3), oracle_n)).subs_u(0)
        divergence = _divergence(Do * Do - Do + 1, derive(Do), oracle_n - 2)
        detail["oracle_order"] = oracle_n
    return _report("conjecture-part1", None, N, divergence, detail, started)


def verify_conjecture_part2(N: int = 20, *, oracle_n: int = 0) -> VerificationReport:
    """``C' = exp(C - z**2/2)`` for ``C = C_132`` at ``u = 0``.

    The series convention ``C(0, 0) = 1`` puts an extra factor ``e`` on the
    right; the check subtracts the constant term so both sides start at 1.
    """
    started = time.perf_counter()

    def check(C, upto):
        shifted = C - C[0] - _z_squared_half(C.order)
        return _divergence(exp0(shifted), derive(C), upto)

    C = C_nonoverlapping_closed((1, 3, 2), N).subs_u(0)
    divergence = check(C, N - 1)
    detail = {"series": "nonoverlapping-integral", "constant_shift": str(C[0][0])}
    if divergence is None and oracle_n > 1:
        divergence = check(C_bruteforce((1, 3, 2), oracle_n).subs_u(0), oracle_n - 1)
        detail["oracle_order"] = oracle_n
    return _report("conjecture-part2", None, N, divergence, detail, started)


# -- symmetries and the bijection -------------------------------------------

def verify_symmetries(sigma, n_max: int = 8, *, workers: int = 1,
                      max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    started = time.perf_counter()
    sigma = check_pattern(sigma)
    orbit = sorted(symmetry_orbit(sigma))
    divergence = None
    for n in range(n_max + 1):
        ref = enumeration.circular_distribution(sigma, n, workers=workers, max_n=max_n)
        for other in orbit:
            row = enumeration.circular_distribution(other, n, workers=workers, max_n=max_n)
            if row != ref:
                divergence = {"n": n, "expected": str(ref), "got": str(row),
                              "member": format_word(other)}
                break
        if divergence:
            break
    detail = {"orbit": [format_word(s) for s in orbit]}
    return _report("symmetries", sigma, n_max, divergence, detail, started)


def find_weight_counterexample(sigma, n_max: int = 8):
    """First permutation (by size, then lexicographically) whose occurrence count
    differs from the summed circular counts of its factors."""
    sigma = check_pattern(sigma)
    for n in range(n_max + 1):
        for pi in permutations(range(1, n + 1)):
            lin = occurrences_linear(sigma, pi).count
            circ = sum(occurrences_circular(sigma, c).count for c in phi(pi))
            if lin != circ:
                return {
                    "pattern": format_word(sigma),
                    "permutation": format_word(pi),
                    "factors": [format_word(f) for f in lr_factorize(pi)],
                    "linear_occurrences": lin,
                    "circular_occurrences": circ,
                }
    return None


def verify_bijection(sigma, n_max: int = 8, *, control=(2, 1, 3)) -> VerificationReport:
    """Exhaustive round trips of the factorization bijection and weight preservation.

    Weight preservation is only claimed for patterns starting with 1; for
    other patterns the report is not-applicable (unless a round trip fails)
    and carries a counterexample when one exists.  The control pattern's
    counterexample is always attached.
    """
    started = time.perf_counter()
    sigma = check_pattern(sigma)
    claims_weight = sigma[0] == 1
    divergence = None
    checked = 0
    for n in range(n_max + 1):
        full = frozenset(range(1, n + 1))
        for pi in permutations(range(1, n + 1)):
            classes = phi(pi)
            checked += 1
            union = frozenset().union(*(c.entries for c in classes)) if classes else frozenset()
            if union != full or sum(len(c) for c in classes) != n:
                divergence = {"n": n, "permutation": format_word(pi),
                              "expected": "partition of 1..n", "got": str(sorted(map(str, classes)))}
            elif phi_inverse(classes) != pi:
                divergence = {"n": n, "permutation": format_word(pi),
                              "expected": format_word(pi),
                              "got": format_word(phi_inverse(classes))}
            elif phi(phi_inverse(classes)) != classes:
                divergence = {"n": n, "permutation": format_word(pi),
                              "expected": "phi(phi_inverse(S)) = S", "got": "mismatch"}
            elif claims_weight:
                lin = occurrences_linear(sigma, pi).count
                circ = sum(occurrences_circular(sigma, c).count for c in classes)
                if lin != circ:
                    divergence = {"n": n, "permutation": format_word(pi),
                                  "expected": str(lin), "got": str(circ)}
            if divergence:
                break
        if divergence:
            break
    detail = {"permutations_checked": checked, "weight_claimed": claims_weight}
    if control is not None:
        detail["control_counterexample"] = find_weight_counterexample(control, n_max)
    if not claims_weight and divergence is None:
        detail["counterexample"] = find_weight_counterexample(sigma, n_max)
        return VerificationReport("bijection", format_word(sigma), n_max, NOT_APPLICABLE,
                                  None, detail, time.perf_counter() - started)
    return _report("bijection", sigma, n_max, divergence, detail, started)


# -- closed forms -----------------------------------------------------------

def verify_closed_forms(N: int = 20, tol: float = 1e-8, *, n_max: int = 8,
                        numeric_order: int = 25, workers: int = 1,
                        max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """(i) the trigonometric form of ``D_1234(0, z)`` against the ODE, exactly;
    (ii) the tanh form of ``D_123`` against the series at sample points;
    (iii) the integral form of ``C_132`` against enumeration, exactly."""
    started = time.perf_counter()
    divergence = None
    detail = {}

    d = _divergence(D_riccati_1234(N).subs_u(0), closed_form_D1234_u0(N))
    detail["d1234_u0_exact"] = d is None
    if d:
        divergence = dict(d, check="d1234-u0")

    series = D_riccati_123(numeric_order)
    worst = 0.0
    points = []
    for u0 in SAMPLE_U:
        for z0 in SAMPLE_Z:
            a = eval_D123_closed(u0, z0)
            b = eval_numeric(series, u0, z0)
            err = abs(a - b)
            worst = max(worst, err)
            points.append([u0, z0, a, b])
            if err > tol and divergence is None:
                divergence = {"check": "d123-numeric", "n": numeric_order,
                              "u": u0, "z": z0, "expected": repr(b), "got": repr(a)}
    detail["d123_points"] = points
    detail["d123_max_abs_error"] = worst
    detail["tol"] = tol

    oracle = C_bruteforce((1, 3, 2), n_max, workers=workers, max_n=max_n)
    d = _divergence(oracle, C_nonoverlapping_closed((1, 3, 2), n_max))
    detail["c132_integral_exact"] = d is None
    if d and divergence is None:
        divergence = dict(d, check="c132-integral")
    return _report("closed-forms", None, N, divergence, detail, started)


# -- ODE solutions against the oracle ---------------------------------------

def _C_from_D(D):
    return 1 + integrate(D)


ENGINES = {
    # name: (pattern, oracle kind, builder(order) -> series, residual(order) -> series)
    "riccati-123": ((1, 2, 3), "C",
                    lambda n: _C_from_D(D_riccati_123(n - 1)),
                    lambda N: residual_riccati_123(D_riccati_123(N))),
    "riccati-1234": ((1, 2, 3, 4), "C",
                     lambda n: _C_from_D(D_riccati_1234(n - 1)),
                     lambda N: residual_riccati_1234(D_riccati_1234(N))),
    "monotone-3": ((1, 2, 3), "P",
                   lambda n: 1 / omega_monotone(3, n),
                   lambda N: residual_monotone(omega_monotone(3, N), 3)),
    "monotone-4": ((1, 2, 3, 4), "P",
                   lambda n: 1 / omega_monotone(4, n),
                   lambda N: residual_monotone(omega_monotone(4, N), 4)),
    "nonoverlapping-132": ((1, 3, 2), "P",
                           lambda n: 1 / omega_nonoverlapping((1, 3, 2), n),
                           lambda N: residual_nonoverlapping(
                               omega_nonoverlapping((1, 3, 2), N), (1, 3, 2))),
    "nonoverlapping-1342": ((1, 3, 4, 2), "P",
                            lambda n: 1 / omega_nonoverlapping((1, 3, 4, 2), n),
                            lambda N: residual_nonoverlapping(
                                omega_nonoverlapping((1, 3, 4, 2), N), (1, 3, 4, 2))),
    "nonoverlapping-1243": ((1, 2, 4, 3), "P",
                            lambda n: 1 / omega_nonoverlapping((1, 2, 4, 3), n),
                            lambda N: residual_nonoverlapping(
                                omega_nonoverlapping((1, 2, 4, 3), N), (1, 2, 4, 3))),
    "closed-132": ((1, 3, 2), "C",
                   lambda n: C_nonoverlapping_closed((1, 3, 2), n),
                   lambda N: residual_dnonover(derive(C_nonoverlapping_closed((1, 3, 2), N + 1)), 3)),
    "closed-1342": ((1, 3, 4, 2), "C",
                    lambda n: C_nonoverlapping_closed((1, 3, 4, 2), n),
                    lambda N: residual_dnonover(
                        derive(C_nonoverlapping_closed((1, 3, 4, 2), N + 1)), 4)),
}


def verify_engine(name: str, n_max: int = 8, N: int = 20, *, workers: int = 1,
                  max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """One ODE/closed-form engine: exact agreement with enumeration up to
    ``n_max`` and a vanishing ODE residual up to order ``N``."""
    started = time.perf_counter()
    pattern, kind, build, residual = ENGINES[name]
    oracle_fn = C_bruteforce if kind == "C" else P_bruteforce
    oracle = oracle_fn(pattern, n_max, workers=workers, max_n=max_n)
    divergence = _divergence(oracle, build(n_max))
    res = residual(N)
    detail = {"engine": name, "gf": kind, "residual_order": res.order,
              "residual_zero": is_zero_series(res)}
    if divergence is None and not detail["residual_zero"]:
        n = next(i for i, c in enumerate(res.coeffs) if not c.is_zero())
        divergence = {"n": n, "expected": "0", "got": str(res[n]), "check": "residual"}
    return _report("ode-vs-oracle", pattern, n_max, divergence, detail, started)


def verify_exponential_link(sigma, N: int = 20) -> VerificationReport:
    """``omega = exp(1 - C)`` and ``P * omega = 1`` for the ODE-built series."""
    started = time.perf_counter()
    sigma = check_pattern(sigma)
    gf = pattern_gf(sigma, N, "ode")
    divergence = _divergence(gf.omega, omega_from_C(gf.C))
    if divergence is None:
        divergence = _divergence(ZSeries.constant(1, N), gf.P * gf.omega)
    detail = {"method": gf.provenance.get("method")}
    return _report("exponential-link", sigma, N, divergence, detail, started)


def verify_u1_degeneration(N: int = 20) -> VerificationReport:
    """At ``u = 1`` every object is counted once, which pins all series down."""
    started = time.perf_counter()
    geometric = ZSeries([1] * (N + 1), N)
    one_minus_z = ZSeries([1, -1], N)
    log_series = 1 - ln1(one_minus_z)
    cases = [
        ("riccati-123", geometric, D_riccati_123(N)),
        ("riccati-1234", geometric, D_riccati_1234(N)),
        ("monotone-3", one_minus_z, omega_monotone(3, N)),
        ("monotone-4", one_minus_z, omega_monotone(4, N)),
        ("nonoverlapping-132", one_minus_z, omega_nonoverlapping((1, 3, 2), N)),
        ("closed-132", log_series, C_nonoverlapping_closed((1, 3, 2), N)),
    ]
    divergence = None
    for name, expected, series in cases:
        d = _divergence(expected, series.subs_u(1))
        if d:
            divergence = dict(d, check=name)
            break
    detail = {"cases": [c[0] for c in cases]}
    return _report("u1-degeneration", None, N, divergence, detail, started)


def verify_row_totals(patterns=None, n_max: int = 8, *, workers: int = 1,
                      max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Every distribution row sums to ``n!`` (linear) or ``(n-1)!`` (circular)."""
    started = time.perf_counter()
    patterns = sorted({m for s in (patterns or THEOREM_PATTERNS) for m in symmetry_orbit(s)})
    divergence = None
    checked = 0
    for sigma in patterns:
        for n in range(n_max + 1):
            for kind, dist, want in (
                    ("linear", enumeration.linear_distribution, math.factorial(n)),
                    ("circular", enumeration.circular_distribution, enumeration.class_count(n))):
                total = dist(sigma, n, workers=workers, max_n=max_n)(1)
                checked += 1
                if total != want and divergence is None:
                    divergence = {"n": n, "expected": str(want), "got": str(total),
                                  "pattern": format_word(sigma), "kind": kind}
    return _report("row-totals", None, n_max, divergence,
                   {"rows_checked": checked}, started)


# -- the suite ----------------------------------------------------------------

THEOREM_PATTERNS = ((1, 2, 3), (1, 3, 2), (1, 2, 3, 4), (1, 3, 4, 2), (1, 2, 4, 3), (2, 4, 1, 3))
SYMMETRY_PATTERNS = ((1, 2, 3), (1, 3, 2), (1, 3, 4, 2))
BIJECTION_PATTERNS = ((1, 2, 3), (1, 3, 2), (1, 2, 3, 4))
LINK_PATTERNS = ((1, 2, 3), (1, 3, 2), (1, 2, 3, 4), (1, 3, 4, 2), (1, 2, 4, 3))

IDENTITIES = ("theorem", "conjecture1", "conjecture2", "symmetries", "bijection",
              "closed-forms", "ode", "exponential-link", "u1", "row-totals")


def run_suite(n_max: int = 8, N: int = 20, tol: float = 1e-8, *, workers: int = 1,
              identities=IDENTITIES, patterns=None,
              max_n: int = DEFAULT_MAX_N) -> list:
    """Run the selected checks in a fixed order.

    ``patterns`` overrides the default pattern list of the pattern-indexed
    checks (theorem, symmetries, bijection, exponential link).
    """
    kw = dict(workers=workers, max_n=max_n)
    reports = []
    want = set(identities)
    if "theorem" in want:
        for s in patterns or THEOREM_PATTERNS:
            reports.append(verify_theorem_main(s, n_max, **kw))
    if "conjecture1" in want:
        reports.append(verify_conjecture_part1(N, oracle_n=n_max))
    if "conjecture2" in want:
        reports.append(verify_conjecture_part2(N, oracle_n=n_max))
    if "symmetries" in want:
        for s in patterns or SYMMETRY_PATTERNS:
            reports.append(verify_symmetries(s, n_max, **kw))
    if "bijection" in want:
        for s in patterns or BIJECTION_PATTERNS:
            reports.append(verify_bijection(s, n_max))
    if "closed-forms" in want:
        reports.append(verify_closed_forms(N, tol, n_max=n_max, **kw))
    if "ode" in want:
        for name in ENGINES:
            reports.append(verify_engine(name, n_max, N, **kw))
    if "exponential-link" in want:
        for s in patterns or LINK_PATTERNS:
            reports.append(verify_exponential_link(s, N))
    if "u1" in want:
        reports.append(verify_u1_degeneration(N))
    if "row-totals" in want:
        reports.append(verify_row_totals(patterns, n_max, **kw))
    return reports


# -- rendering ----------------------------------------------------------------

def reports_to_jsonl(reports, include_timing: bool = False) -> str:
    return "".join(r.to_json(include_timing) + "\n" for r in reports)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["identity", "pattern", "size", "status", "first_divergence_n"])
    for r in reports:
        writer.writerow([r.identity, r.pattern or "", r.size, r.status,
                         "" if r.first_divergence is None else r.first_divergence.get("n", "")])
    return buf.getvalue()


def reports_to_table(reports) -> str:
    rows = [("identity", "pattern", "size", "status")]
    rows += [(r.identity, r.pattern or "-", str(r.size), r.status) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    return "".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n"
                   for row in rows)
