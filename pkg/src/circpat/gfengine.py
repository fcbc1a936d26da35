"""Generating functions of specific patterns.

Notation used throughout:

* ``P``     linear EGF, ``sum_pi u**o(pi) z**n / n!``
* ``omega`` its reciprocal ``1 / P``
* ``C``     circular EGF, ``sum_[pi] u**c[pi] z**n / n!``, with ``C(u, 0) = 1``
* ``D``     the derivative ``C'`` in ``z``

For a pattern starting with 1 the circular EGF is ``1 + log P``, equivalently
``omega = exp(1 - C)``.  The ODE solvers below work by coefficient
extraction over exact rationals; nothing is integrated numerically except
:func:`eval_D123_closed`, which evaluates a closed form in floating point.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .enumeration import DEFAULT_MAX_N, circular_distribution, linear_distribution
from .errors import (DomainError, PatternNotSupportedError, TheoremNotApplicableError)
from .permcore import (check_pattern, complement, format_word, is_nonoverlapping,
                       reverse)
from .series import ONE, U, ZERO, UPoly, ZSeries, derive, exp0, integrate, ln1

U_MINUS_1 = U - 1
ONE_MINUS_U = 1 - U


# -- brute force ------------------------------------------------------------

def P_bruteforce(sigma, N: int, *, workers: int = 1, max_n: int = DEFAULT_MAX_N) -> ZSeries:
    rows = [linear_distribution(sigma, n, workers=workers, max_n=max_n) for n in range(N + 1)]
    return ZSeries.from_egf(rows)


def C_bruteforce(sigma, N: int, *, workers: int = 1, max_n: int = DEFAULT_MAX_N) -> ZSeries:
    rows = [circular_distribution(sigma, n, workers=workers, max_n=max_n) for n in range(N + 1)]
    return ZSeries.from_egf(rows)


# -- symmetry normalization and the linear-to-circular transfer -------------

_TRANSFORMS = (
    ("identity", lambda s: s),
    ("complement", complement),
    ("reverse", reverse),
    ("reverse-complement", lambda s: complement(reverse(s))),
)


def normalize_pattern(sigma):
    """First orbit member beginning with 1, as ``(member, transform_name)``.

    Returns ``None`` when no symmetry of ``sigma`` starts with 1.
    """
    sigma = check_pattern(sigma)
    for name, t in _TRANSFORMS:
        image = t(sigma)
        if image[0] == 1:
            return image, name
    return None


def C_from_P(sigma, P: ZSeries) -> ZSeries:
    """Circular EGF ``1 + log P`` from the linear EGF of the same pattern."""
    if normalize_pattern(sigma) is None:
        raise TheoremNotApplicableError(
            f"no symmetry of {format_word(sigma)} begins with 1")
    return 1 + ln1(P)


def omega_from_C(C: ZSeries) -> ZSeries:
    """``exp(1 - C)`` for a circular EGF with ``C(u, 0) = 1``."""
    return exp0(1 - C)


# -- monotone patterns ------------------------------------------------------

def omega_monotone(m: int, N: int) -> ZSeries:
    """Reciprocal linear EGF of ``12...m``.

    With ``a_n = n! [z^n] omega`` the linear ODE becomes
    ``a_{n+m-1} = (u - 1) (a_n + ... + a_{n+m-2})``,
    started from ``a_0 = 1, a_1 = -1`` and zeros up to ``a_{m-2}``.
    """
    if m < 3:
        raise PatternNotSupportedError("monotone ODE needs m >= 3")
    a = [ONE, -ONE] + [ZERO] * (m - 3)
    while len(a) < N + 1:
        n = len(a) - (m - 1)
        acc = ZERO
        for k in range(m - 1):
            acc = acc + a[n + k]
        a.append(U_MINUS_1 * acc)
    return ZSeries.from_egf(a[:N + 1], N)


def D_riccati_123(N: int) -> ZSeries:
    """``D = C'`` for 123 from ``D' = D**2 + (u-1)(D-1)``, ``D(0) = 1``."""
    d = [ONE]
    sq = []  # sq[n] = [z^n] D**2
    for n in range(N):
        sq.append(sum((d[k] * d[n - k] for k in range(n + 1)), ZERO))
        rhs = sq[n] + U_MINUS_1 * (d[n] - (1 if n == 0 else 0))
        d.append(rhs / (n + 1))
    return ZSeries(d, N)


def D_riccati_1234(N: int) -> ZSeries:
    """``D = C'`` for 1234 from
    ``D'' = 3 D' D - D**3 + (u-1)(D' - D**2 + D - 1)``, ``D(0) = D'(0) = 1``.
    """
    d = [ONE, ONE]
    sq, cube = [], []
    for n in range(N - 1):
        sq.append(sum((d[k] * d[n - k] for k in range(n + 1)), ZERO))
        cube.append(sum((sq[k] * d[n - k] for k in range(n + 1)), ZERO))
        dpd = sum((d[k + 1] * d[n - k] * (k + 1) for k in range(n + 1)), ZERO)
        lin = d[n + 1] * (n + 1) - sq[n] + d[n] - (1 if n == 0 else 0)
        rhs = 3 * dpd - cube[n] + U_MINUS_1 * lin
        d.append(rhs / ((n + 1) * (n + 2)))
    return ZSeries(d[:N + 1], N)


# -- non-overlapping patterns -----------------------------------------------

def _nonoverlapping_member(sigma):
    sigma = check_pattern(sigma)
    if len(sigma) < 3 or not is_nonoverlapping(sigma):
        raise PatternNotSupportedError(
            f"{format_word(sigma)} is not a non-overlapping pattern of length >= 3")
    norm = normalize_pattern(sigma)
    if norm is None:
        raise PatternNotSupportedError(f"no symmetry of {format_word(sigma)} begins with 1")
    return norm[0]


def omega_nonoverlapping(sigma, N: int) -> ZSeries:
    """Reciprocal linear EGF of a non-overlapping pattern starting with 1.

    With ``b`` the last entry and ``v = omega'``, the ODE
    ``omega^(b) + (1-u) z^(m-b)/(m-b)! omega' = 0`` reads
    ``v_{n+b-1} (n+b-1)!/n! = (u-1)/(m-b)! v_{n-m+b}``.
    Patterns not starting with 1 are handled through their symmetry orbit.
    """
    sigma = _nonoverlapping_member(sigma)
    m, b = len(sigma), sigma[-1]
    v = [-ONE] + [ZERO] * (b - 2)
    scale = Fraction(1, math.factorial(m - b))
    while len(v) < N:
        n = len(v) - (b - 1)
        j = n - (m - b)
        if j < 0:
            v.append(ZERO)
            continue
        ratio = Fraction(math.factorial(n), math.factorial(n + b - 1))
        v.append(U_MINUS_1 * v[j] * (scale * ratio))
    if N == 0:
        return ZSeries([ONE], 0)
    return 1 + integrate(ZSeries(v[:N], N - 1))


def C_nonoverlapping_closed(sigma, N: int) -> ZSeries:
    """``1 - log(1 - int_0^z exp((u-1) t**(m-1)/(m-1)!) dt)`` for non-overlapping
    patterns ending in 2 (after symmetry normalization)."""
    sigma = _nonoverlapping_member(sigma)
    m = len(sigma)
    if sigma[-1] != 2:
        raise PatternNotSupportedError(
            f"closed form needs last entry 2, got {format_word(sigma)}")
    inner = exp0(ZSeries.monomial(U_MINUS_1 / math.factorial(m - 1), m - 1, N))
    return 1 - ln1(1 - integrate(inner.truncate(N - 1))) if N > 0 else ZSeries([ONE], 0)


# -- closed forms -----------------------------------------------------------

def _taylor(coeff, N):
    return ZSeries([UPoly.const(coeff(n)) for n in range(N + 1)], N)


def _cos(n):
    return Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 == 0 else Fraction(0)


def _sin(n):
    return Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 == 1 else Fraction(0)


def _exp_neg(n):
    return Fraction((-1) ** n, math.factorial(n))


def closed_form_D1234_u0(N: int) -> ZSeries:
    """``(cos z + sin z + e^-z) / (cos z - sin z + e^-z)`` as an exact series."""
    num = _taylor(lambda n: _cos(n) + _sin(n) + _exp_neg(n), N)
    den = _taylor(lambda n: _cos(n) - _sin(n) + _exp_neg(n), N)
    return num / den


def eval_D123_closed(u0: float, z0: float) -> float:
    """Closed form of ``D`` for 123 at a numeric point.

    Uses ``s = sqrt(u**2 + 2u - 3)`` in complex arithmetic, so ``u`` with a
    negative discriminant goes through the trigonometric branch automatically.
    When ``s = 0`` the Riccati equation is a perfect square and the limit
    ``r + y0 / (1 - y0 z)`` with ``r = (1-u)/2``, ``y0 = (1+u)/2`` is used.
    """
    disc = u0 * u0 + 2 * u0 - 3
    if disc == 0:
        r, y0 = (1 - u0) / 2, (1 + u0) / 2
        if 1 - y0 * z0 == 0:
            raise DomainError(f"pole at u={u0}, z={z0}")
        return r + y0 / (1 - y0 * z0)
    s = cmath.sqrt(disc)
    try:
        t = cmath.tanh(z0 * s / 2 - cmath.atanh((u0 + 1) / s))
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise DomainError(f"closed form undefined at u={u0}, z={z0}") from exc
    value = 0.5 * (1 - u0 - t * s)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"pole at u={u0}, z={z0}")
    if abs(value.imag) > 1e-9 * max(1.0, abs(value.real)):
        raise DomainError(f"closed form is not real at u={u0}, z={z0}: {value}")
    return value.real


# -- ODE residuals (zero series when the input solves the equation) ---------

def residual_monotone(omega: ZSeries, m: int) -> ZSeries:
    derivs = [omega]
    for _ in range(m - 1):
        derivs.append(derive(derivs[-1]))
    lower = derivs[0]
    for f in derivs[1:m - 1]:
        lower = lower + f
    return derivs[m - 1] + ONE_MINUS_U * lower


def residual_riccati_123(D: ZSeries) -> ZSeries:
    return derive(D) - (D * D + U_MINUS_1 * (D - 1))


def residual_riccati_1234(D: ZSeries) -> ZSeries:
    D1 = derive(D)
    return derive(D1) - (3 * D1 * D - D * D * D + U_MINUS_1 * (D1 - D * D + D - 1))


def residual_nonoverlapping(omega: ZSeries, sigma) -> ZSeries:
    sigma = _nonoverlapping_member(sigma)
    m, b = len(sigma), sigma[-1]
    derivs = [omega]
    for _ in range(b):
        derivs.append(derive(derivs[-1]))
    poly = ZSeries.monomial(ONE_MINUS_U / math.factorial(m - b), m - b, omega.order)
    return derivs[b] + poly * derivs[1]


def residual_dnonover(D: ZSeries, m: int) -> ZSeries:
    """Residual of ``D' = D**2 + (u-1) z**(m-2)/(m-2)! D``."""
    poly = ZSeries.monomial(U_MINUS_1 / math.factorial(m - 2), m - 2, D.order)
    return derive(D) - (D * D + poly * D)


def is_zero_series(f: ZSeries) -> bool:
    return all(c.is_zero() for c in f.coeffs)


# -- assembled generating functions -----------------------------------------

def is_monotone(sigma) -> bool:
    sigma = tuple(sigma)
    return sigma == tuple(range(1, len(sigma) + 1)) or sigma == tuple(range(len(sigma), 0, -1))


@dataclass(frozen=True)
class PatternGF:
    pattern: tuple
    P: ZSeries
    omega: ZSeries
    C: ZSeries
    D: ZSeries
    provenance: dict = field(default_factory=dict)

    def get(self, name: str) -> ZSeries:
        try:
            return {"P": self.P, "omega": self.omega, "C": self.C, "D": self.D}[name]
        except KeyError:
            raise ValueError(f"unknown generating function {name!r}") from None

    def to_json_obj(self, name: str) -> dict:
        obj = self.get(name).to_json_obj()
        obj["pattern"] = format_word(self.pattern)
        obj["gf"] = name
        obj["provenance"] = dict(self.provenance)
        return obj


def pattern_gf(sigma, N: int, source: str = "ode", *, u=None, workers: int = 1,
               max_n: int = DEFAULT_MAX_N) -> PatternGF:
    """All four generating functions of ``sigma`` to order ``N`` from one source.

    ``source`` is ``"bruteforce"`` (enumeration), ``"ode"`` (coefficient
    recurrences, monotone and non-overlapping patterns) or ``"closed-form"``
    (non-overlapping patterns ending in 2, and 1234 at ``u = 0``).  A
    rational ``u`` substitutes that value into all four series.
    """
    gf = _pattern_gf(sigma, N, source, u, workers, max_n)
    if u is None:
        return gf
    u = Fraction(u)
    prov = dict(gf.provenance, u=str(u))
    return PatternGF(gf.pattern, gf.P.subs_u(u), gf.omega.subs_u(u), gf.C.subs_u(u),
                     gf.D.subs_u(u), prov)


def _pattern_gf(sigma, N, source, u, workers, max_n):
    sigma = check_pattern(sigma)
    norm = normalize_pattern(sigma)
    prov = {"source": source}
    if norm is not None:
        prov["normalized_pattern"] = format_word(norm[0])
        prov["transform"] = norm[1]

    if source == "bruteforce":
        P = P_bruteforce(sigma, N, workers=workers, max_n=max_n)
        C = C_bruteforce(sigma, N, workers=workers, max_n=max_n)
        return PatternGF(sigma, P, 1 / P, C, derive(C), prov)

    if norm is None:
        raise PatternNotSupportedError(
            f"no {source} generating function for {format_word(sigma)}")
    member = norm[0]
    m = len(member)

    if source == "ode":
        if member == (1, 2, 3):
            D = D_riccati_123(max(N - 1, 0))
            C = 1 + integrate(D) if N > 0 else ZSeries([ONE], 0)
            omega = omega_from_C(C)
            prov["method"] = "riccati-123"
        elif member == (1, 2, 3, 4):
            D = D_riccati_1234(max(N - 1, 1)).truncate(max(N - 1, 0))
            C = 1 + integrate(D) if N > 0 else ZSeries([ONE], 0)
            omega = omega_from_C(C)
            prov["method"] = "riccati-1234"
        elif is_monotone(member) and m >= 3:
            omega = omega_monotone(m, N)
            C = 1 - ln1(omega)
            prov["method"] = "monotone"
        elif m >= 3 and is_nonoverlapping(member):
            omega = omega_nonoverlapping(member, N)
            C = 1 - ln1(omega)
            prov["method"] = "nonoverlapping"
        else:
            raise PatternNotSupportedError(f"no ODE known for {format_word(sigma)}")
        return PatternGF(sigma, 1 / omega, omega, C, derive(C), prov)

    if source == "closed-form":
        if m >= 3 and is_nonoverlapping(member) and member[-1] == 2:
            C = C_nonoverlapping_closed(member, N)
            omega = omega_from_C(C)
            prov["method"] = "nonoverlapping-integral"
            return PatternGF(sigma, 1 / omega, omega, C, derive(C), prov)
        if member == (1, 2, 3, 4) and u is not None and Fraction(u) == 0:
            D = closed_form_D1234_u0(max(N - 1, 0))
            C = 1 + integrate(D) if N > 0 else ZSeries([ONE], 0)
            omega = omega_from_C(C)
            prov["method"] = "trigonometric-1234-u0"
            return PatternGF(sigma, 1 / omega, omega, C, D, prov)
        raise PatternNotSupportedError(
            f"no closed form for {format_word(sigma)} at symbolic u")

    raise ValueError(f"unknown source {source!r}")
