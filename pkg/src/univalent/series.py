"""Truncated univariate power series with complex or exact rational coefficients.

A :class:`UnivariateSeries` of order ``N`` stores ``c_0 ... c_N``; coefficients
above ``N`` are unknown, not zero.  Binary operations on operands of
different order return a result of the smaller order.

Two coefficient modes exist:

* float mode (default): every coefficient is a Python ``complex``;
* exact mode (``exact=True``): every coefficient is a :class:`fractions.Fraction`.

Mixing modes yields a float-mode result.  log, exp and sqrt are computed by
formal recurrences, so no branch cut is ever consulted.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

from .errors import DivisionBySingularSeries, NonUnitConstantTerm

DEFAULT_ORDER = 25


def to_exact(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, complex):
        if value.imag != 0:
            raise ValueError(f"exact mode needs real rational coefficients, got {value!r}")
        value = value.real
    return Fraction(value)


def normalize_coeffs(values: Iterable, exact: bool) -> tuple:
    if exact:
        return tuple(to_exact(v) for v in values)
    return tuple(complex(v) for v in values)


@dataclass(frozen=True, init=False)
class UnivariateSeries:
    """Power series ``c_0 + c_1 z + ... + c_N z^N`` truncated at order ``N``."""

    coeffs: tuple
    exact: bool

    def __init__(self, coeffs: Iterable, exact: bool = False):
        coeffs = normalize_coeffs(coeffs, exact)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "exact", exact)

    @classmethod
    def zero(cls, order: int, exact: bool = False) -> "UnivariateSeries":
        return cls([0] * (order + 1), exact=exact)

    @classmethod
    def one(cls, order: int, exact: bool = False) -> "UnivariateSeries":
        return cls([1] + [0] * order, exact=exact)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        mode = "exact" if self.exact else "float"
        return f"UnivariateSeries(order={self.order}, {mode}, coeffs={list(self.coeffs)!r})"

    def to_numpy(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    def truncate(self, order: int) -> "UnivariateSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return UnivariateSeries(self.coeffs[: order + 1], exact=self.exact)

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z`` (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def _coerce(self, other) -> "UnivariateSeries":
        if isinstance(other, UnivariateSeries):
            return other
        if isinstance(other, Number):
            exact = self.exact and not isinstance(other, (float, complex))
            return UnivariateSeries([other] + [0] * self.order, exact=exact)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(self, other, "sub")

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(other, self, "sub")

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(self, other, "div")

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_arith(other, self, "div")

    def __neg__(self):
        return UnivariateSeries([-c for c in self.coeffs], exact=self.exact)


def series_arith(lhs: UnivariateSeries, rhs: UnivariateSeries, op: str) -> UnivariateSeries:
    """Add, subtract, multiply or divide two truncated series.

    The result has order ``min(lhs.order, rhs.order)``; its degree-k
    coefficient consumes coefficients ``0..k`` of both operands.
    """
    n = min(lhs.order, rhs.order)
    exact = lhs.exact and rhs.exact
    a, b = lhs.coeffs, rhs.coeffs
    if op == "add":
        out = [a[k] + b[k] for k in range(n + 1)]
    elif op == "sub":
        out = [a[k] - b[k] for k in range(n + 1)]
    elif op == "mul":
        out = [sum(a[j] * b[k - j] for j in range(k + 1)) for k in range(n + 1)]
    elif op == "div":
        if b[0] == 0:
            raise DivisionBySingularSeries("divisor has zero constant term")
        out = []
        for k in range(n + 1):
            acc = a[k] - sum(b[j] * out[k - j] for j in range(1, k + 1))
            out.append(acc / b[0])
    else:
        raise ValueError(f"unknown operation {op!r}")
    return UnivariateSeries(out, exact=exact)


def _require_unit(u: UnivariateSeries, what: str) -> None:
    if u.coeffs[0] != 1:
        raise NonUnitConstantTerm(f"{what} needs constant term 1, got {u.coeffs[0]!r}")


def series_log(u: UnivariateSeries) -> UnivariateSeries:
    """Formal logarithm of a series with constant term 1.

    Solves ``L' u = u'`` term by term:
    ``k L_k = k u_k - sum_{j=1}^{k-1} j L_j u_{k-j}``.
    The degree-k coefficient consumes ``u_0..u_k``.
    """
    _require_unit(u, "log")
    c = u.coeffs
    out = [c[0] * 0]
    for k in range(1, u.order + 1):
        acc = k * c[k] - sum(j * out[j] * c[k - j] for j in range(1, k))
        out.append(acc / k)
    return UnivariateSeries(out, exact=u.exact)


def series_exp(g: UnivariateSeries) -> UnivariateSeries:
    """Formal exponential of a series with zero constant term (``E' = g' E``)."""
    if g.coeffs[0] != 0:
        raise ValueError("exp needs a zero constant term")
    c = g.coeffs
    out = [c[0] * 0 + 1]
    for k in range(1, g.order + 1):
        acc = sum(j * c[j] * out[k - j] for j in range(1, k + 1))
        out.append(acc / k)
    return UnivariateSeries(out, exact=g.exact)


def series_sqrt(u: UnivariateSeries) -> UnivariateSeries:
    """Square root with constant term +1.

    ``2 S_k = u_k - sum_{j=1}^{k-1} S_j S_{k-j}``; degree k consumes ``u_0..u_k``.
    """
    _require_unit(u, "sqrt")
    c = u.coeffs
    out = [c[0]]
    for k in range(1, u.order + 1):
        acc = c[k] - sum(out[j] * out[k - j] for j in range(1, k))
        out.append(acc / 2)
    return UnivariateSeries(out, exact=u.exact)


def substitute_square(u: UnivariateSeries) -> UnivariateSeries:
    """``u(z) -> u(z^2)``; order N becomes 2N, odd coefficients exactly zero."""
    zero = u.coeffs[0] * 0
    out = [zero] * (2 * u.order + 1)
    for k, c in enumerate(u.coeffs):
        out[2 * k] = c
    return UnivariateSeries(out, exact=u.exact)


@dataclass(frozen=True, init=False)
class NormalizedFunction:
    """Truncated Taylor series ``z + a_2 z^2 + ... + a_N z^N`` of a class-A function.

    ``f.a(n)`` (equivalently ``f.series[n]``) is the n-th Taylor coefficient.
    """

    series: UnivariateSeries

    def __init__(self, series):
        if not isinstance(series, UnivariateSeries):
            series = UnivariateSeries(series)
        if series.order < 1:
            raise ValueError("a normalized function needs order >= 1")
        if series[0] != 0 or series[1] != 1:
            raise ValueError(
                f"normalized function needs c0 = 0 and c1 = 1, got {series[0]!r}, {series[1]!r}"
            )
        object.__setattr__(self, "series", series)

    @classmethod
    def from_taylor(cls, tail: Sequence, exact: bool = False) -> "NormalizedFunction":
        """Build ``z + tail[0] z^2 + tail[1] z^3 + ...``."""
        return cls(UnivariateSeries([0, 1, *tail], exact=exact))

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def exact(self) -> bool:
        return self.series.exact

    def a(self, n: int):
        return self.series[n]

    def over_z(self) -> UnivariateSeries:
        """``f(z)/z = 1 + a_2 z + ...`` of order N-1."""
        return UnivariateSeries(self.series.coeffs[1:], exact=self.exact)

    def truncate(self, order: int) -> "NormalizedFunction":
        return NormalizedFunction(self.series.truncate(order))

    def __call__(self, z):
        return self.series(z)

    def __repr__(self) -> str:
        return f"NormalizedFunction(order={self.order}, coeffs={list(self.series.coeffs)!r})"


def sqrt_transform(f: NormalizedFunction) -> NormalizedFunction:
    """``f_2(z) = sqrt(f(z^2)) = z sqrt(f(z^2)/z^2)``, an odd normalized function.

    For input order N the output has order 2N-1; its coefficient of
    ``z^(2k+1)`` consumes ``a_1..a_(k+1)``.  Even coefficients are exact zeros.
    """
    root = series_sqrt(substitute_square(f.over_z()))
    zero = root.coeffs[0] * 0
    return NormalizedFunction(UnivariateSeries([zero, *root.coeffs], exact=f.exact))


def rotate(f: NormalizedFunction, theta: float) -> NormalizedFunction:
    """``e^{-i theta} f(e^{i theta} z)``: maps ``a_n -> e^{i(n-1) theta} a_n``."""
    if theta == 0:
        return f
    out = [f.a(0), f.a(1)]
    for n in range(2, f.order + 1):
        out.append(cmath.exp(1j * (n - 1) * theta) * f.a(n))
    return NormalizedFunction(UnivariateSeries(out))
