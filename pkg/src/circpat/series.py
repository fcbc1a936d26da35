"""Exact truncated power series in ``z`` with polynomial-in-``u`` coefficients.

:class:`UPoly` is a polynomial in ``u`` over the rationals, stored as integer
numerators over one common positive denominator so that products reduce to
integer convolutions.  :class:`ZSeries` holds ``a_0, ..., a_N`` (``a_n`` the
coefficient of ``z**n``) and remembers its truncation order ``N``; binary
operations on series of different orders truncate to the smaller one.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import SingularDivisionError, UnsupportedDivisionError


class UPoly:
    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        self._set([int(f * den) for f in fracs], den)

    @classmethod
    def _raw(cls, num, den) -> "UPoly":
        p = cls.__new__(cls)
        p._set(num, den)
        return p

    def _set(self, num, den):
        num = list(num)
        while num and num[-1] == 0:
            num.pop()
        if not num:
            den = 1
        else:
            g = math.gcd(den, *num)
            if g != 1:
                num = [x // g for x in num]
                den //= g
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls((c,))

    # -- inspection --
    @property
    def coeffs(self) -> tuple:
        """Coefficients of ``u**0, u**1, ...`` as fractions, trailing zeros trimmed."""
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def degree(self) -> int:
        return len(self._num) - 1

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self[0]

    # -- arithmetic --
    @staticmethod
    def _coerce(other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Rational)):
            return UPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        den = a._den * b._den // math.gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        na, nb = a._num, b._num
        if len(na) < len(nb):
            na, nb, fa, fb = nb, na, fb, fa
        num = [x * fa for x in na]
        for i, y in enumerate(nb):
            num[i] += y * fb
        return UPoly._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-x for x in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        na, nb = self._num, other._num
        if not na or not nb:
            return ZERO
        num = [0] * (len(na) + len(nb) - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    num[i + j] += x * y
        return UPoly._raw(num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by rational constants
        if isinstance(other, UPoly):
            if not other.is_constant() or other.is_zero():
                return NotImplemented
            other = other[0]
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("UPoly division by zero")
        sign = 1 if other > 0 else -1
        return UPoly._raw([sign * x * other.denominator for x in self._num],
                          self._den * abs(other.numerator))

    def __pow__(self, k: int):
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    # -- evaluation --
    def __call__(self, u):
        """Evaluate at ``u`` (exact for rationals, float for floats)."""
        acc = 0
        for x in reversed(self._num):
            acc = acc * u + x
        if isinstance(u, float) or isinstance(u, complex):
            return acc / self._den
        return Fraction(acc, 1) / self._den

    def integer_coeffs(self) -> list:
        """Coefficients as Python ints; raises if any is not integral."""
        if self._den != 1:
            raise ValueError(f"{self} has non-integer coefficients")
        return list(self._num)

    # -- text --
    def __repr__(self):
        return f"UPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c]
        if not terms:
            return "0"
        parts = []
        for k, c in reversed(terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "u" if k == 1 else f"u^{k}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}{mono}"
                else:
                    body = f"({a}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_pairs(self, fraction_form: bool = True) -> list:
        """Sparse ``[[k, "p/q"], ...]`` list with ascending exponents."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c:
                out.append([k, f"{c.numerator}/{c.denominator}" if fraction_form
                            else str(c)])
        return out

    @classmethod
    def from_pairs(cls, pairs) -> "UPoly":
        deg = max((k for k, _ in pairs), default=-1)
        coeffs = [Fraction(0)] * (deg + 1)
        for k, c in pairs:
            coeffs[k] += Fraction(c)
        return cls(coeffs)


ZERO = UPoly()
ONE = UPoly((1,))
U = UPoly((0, 1))


def _as_upoly(c) -> UPoly:
    return c if isinstance(c, UPoly) else UPoly.const(c)


class ZSeries:
    """Truncated series ``a_0 + a_1 z + ... + a_N z**N`` with ``UPoly`` coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_as_upoly(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = cs[:order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    # -- constructors --
    @classmethod
    def constant(cls, c, order: int) -> "ZSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, c, k: int, order: int) -> "ZSeries":
        return cls([ZERO] * k + [c], order)

    @classmethod
    def from_egf(cls, rows: Sequence, order: int | None = None) -> "ZSeries":
        """Series whose ``n``-th coefficient is ``rows[n] / n!``."""
        return cls([_as_upoly(r) / math.factorial(n) for n, r in enumerate(rows)], order)

    # -- inspection --
    def __getitem__(self, n: int) -> UPoly:
        return self.coeffs[n] if 0 <= n <= self.order else ZERO

    def egf_row(self, n: int) -> UPoly:
        """``n! * a_n``: for counting series, the occurrence distribution at size ``n``."""
        return self[n] * math.factorial(n)

    def truncate(self, order: int) -> "ZSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return ZSeries(self.coeffs[:order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"ZSeries(order={self.order}, {self})"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return (" + ".join(terms) or "0") + f" + O(z^{self.order + 1})"

    # -- arithmetic --
    def _coerce(self, other):
        if isinstance(other, ZSeries):
            return other
        if isinstance(other, (int, Rational, UPoly)):
            return ZSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return ZSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        return add(-self, other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational, UPoly)):
            return ZSeries([c * other for c in self.coeffs], self.order)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return ZSeries([c / other for c in self.coeffs], self.order)
        return div(self, other)

    def __rtruediv__(self, other):
        return div(self._coerce(other), self)

    def subs_u(self, value) -> "ZSeries":
        """Substitute a rational value for ``u``; coefficients become constants."""
        value = Fraction(value)
        return ZSeries([UPoly.const(c(value)) for c in self.coeffs], self.order)

    # -- serialisation --
    def to_json_obj(self) -> dict:
        return {"order": self.order,
                "coeffs": [[n, c.to_pairs()] for n, c in enumerate(self.coeffs)]}

    @classmethod
    def from_json_obj(cls, obj) -> "ZSeries":
        order = obj["order"]
        cs = [ZERO] * (order + 1)
        for n, pairs in obj["coeffs"]:
            cs[n] = UPoly.from_pairs(pairs)
        return cls(cs, order)


def add(f: ZSeries, g) -> ZSeries:
    g = f._coerce(g)
    if g is NotImplemented:
        raise TypeError(f"cannot add ZSeries and {type(g).__name__}")
    order = min(f.order, g.order)
    return ZSeries([f.coeffs[n] + g.coeffs[n] for n in range(order + 1)], order)


def mul(f: ZSeries, g: ZSeries) -> ZSeries:
    order = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(order + 1):
        acc = ZERO
        for k in range(n + 1):
            if not a[k].is_zero() and not b[n - k].is_zero():
                acc = acc + a[k] * b[n - k]
        out.append(acc)
    return ZSeries(out, order)


def _unit_constant(g: ZSeries) -> Fraction:
    g0 = g.coeffs[0]
    if g0.is_zero():
        raise SingularDivisionError("divisor has zero constant term")
    if not g0.is_constant():
        raise UnsupportedDivisionError(
            f"divisor constant term {g0} is not a rational constant")
    return g0[0]


def div(f: ZSeries, g: ZSeries) -> ZSeries:
    """Quotient ``f / g`` for ``g`` with a nonzero rational constant term."""
    c = _unit_constant(g)
    order = min(f.order, g.order)
    q = []
    for n in range(order + 1):
        acc = f.coeffs[n]
        for k in range(1, n + 1):
            if not g.coeffs[k].is_zero():
                acc = acc - g.coeffs[k] * q[n - k]
        q.append(acc / c)
    return ZSeries(q, order)


def derive(f: ZSeries) -> ZSeries:
    """Derivative in ``z``; the order drops by one (order 0 stays order 0, value 0)."""
    if f.order == 0:
        return ZSeries([ZERO], 0)
    return ZSeries([f.coeffs[n] * n for n in range(1, f.order + 1)], f.order - 1)


def integrate(f: ZSeries) -> ZSeries:
    """Antiderivative vanishing at ``z = 0``; the order rises by one."""
    return ZSeries([ZERO] + [c / (n + 1) for n, c in enumerate(f.coeffs)], f.order + 1)


def ln1(f: ZSeries) -> ZSeries:
    """``log f`` for ``f`` with constant term 1."""
    if f.coeffs[0] != ONE:
        raise ValueError(f"ln1 needs constant term 1, got {f.coeffs[0]}")
    if f.order == 0:
        return ZSeries([ZERO], 0)
    return integrate(div(derive(f), f.truncate(f.order - 1)))


def exp0(f: ZSeries) -> ZSeries:
    """``exp f`` for ``f`` with constant term 0, via ``n e_n = sum k f_k e_{n-k}``."""
    if not f.coeffs[0].is_zero():
        raise ValueError(f"exp0 needs constant term 0, got {f.coeffs[0]}")
    kf = [f.coeffs[k] * k for k in range(f.order + 1)]
    e = [ONE]
    for n in range(1, f.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if not kf[k].is_zero():
                acc = acc + kf[k] * e[n - k]
        e.append(acc / n)
    return ZSeries(e, f.order)


def eval_numeric(f: ZSeries, u0: float, z0: float) -> float:
    """Horner evaluation of the truncated series at ``(u0, z0)`` in floating point."""
    acc = 0.0
    for c in reversed(f.coeffs):
        acc = acc * z0 + c(float(u0))
    return acc


def first_divergence(expected: ZSeries, got: ZSeries, upto: int | None = None):
    """Smallest ``n`` at which the coefficients differ, or ``None``."""
    if upto is None:
        upto = min(expected.order, got.order)
    for n in range(upto + 1):
        if expected[n] != got[n]:
            return n
    return None
