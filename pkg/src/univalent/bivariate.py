"""Total-degree truncated double power series in ``(t, z)``.

Used to expand ``log((f(t) - f(z)) / (t - z))``, whose coefficients are the
Grunsky coefficients ``omega[p, q]``.  A series of degree ``D`` stores
``b[p][q]`` for every ``p + q <= D`` (row ``p`` holds ``D - p + 1`` entries).
Getting ``omega[p, q]`` for ``p, q <= M`` therefore needs ``D = 2M``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InsufficientTruncation, NonUnitConstantTerm
from .series import NormalizedFunction, UnivariateSeries, normalize_coeffs


@dataclass(frozen=True, init=False)
class BivariateSeries:
    degree: int
    rows: tuple
    exact: bool

    def __init__(self, rows: Iterable[Iterable], exact: bool = False):
        rows = tuple(normalize_coeffs(r, exact) for r in rows)
        degree = len(rows) - 1
        if degree < 0:
            raise ValueError("empty bivariate series")
        for p, row in enumerate(rows):
            if len(row) != degree - p + 1:
                raise ValueError(
                    f"row {p} of a degree-{degree} series needs {degree - p + 1} entries, got {len(row)}"
                )
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "exact", exact)

    @classmethod
    def from_function(cls, degree: int, fn, exact: bool = False) -> "BivariateSeries":
        """Build from a coefficient rule ``fn(p, q)``."""
        return cls([[fn(p, q) for q in range(degree - p + 1)] for p in range(degree + 1)], exact=exact)

    @classmethod
    def from_dense(cls, array, degree: int | None = None) -> "BivariateSeries":
        array = np.asarray(array)
        if degree is None:
            degree = array.shape[0] - 1
        return cls.from_function(degree, lambda p, q: array[p, q])

    def coeff(self, p: int, q: int):
        if p < 0 or q < 0 or p + q > self.degree:
            raise IndexError(f"({p}, {q}) outside total degree {self.degree}")
        return self.rows[p][q]

    def __getitem__(self, pq):
        return self.coeff(*pq)

    def to_dense(self) -> np.ndarray:
        """``(D+1, D+1)`` complex array; entries with ``p + q > D`` are zero."""
        out = np.zeros((self.degree + 1, self.degree + 1), dtype=complex)
        for p, row in enumerate(self.rows):
            out[p, : len(row)] = [complex(c) for c in row]
        return out

    def slice_t(self) -> UnivariateSeries:
        """The ``z = 0`` slice as a series in ``t``."""
        return UnivariateSeries([row[0] for row in self.rows], exact=self.exact)

    def is_symmetric(self, tol: float = 0.0) -> bool:
        d = self.degree
        return all(
            abs(self.rows[p][q] - self.rows[q][p]) <= tol
            for p in range(d + 1)
            for q in range(d - p + 1)
        )

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        d = min(self.degree, other.degree)
        a, b = self.rows, other.rows

        def term(p, q):
            return sum(a[i][j] * b[p - i][q - j] for i in range(p + 1) for j in range(q + 1))

        return BivariateSeries.from_function(d, term, exact=self.exact and other.exact)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        d = min(self.degree, other.degree)
        return BivariateSeries.from_function(
            d, lambda p, q: self.rows[p][q] - other.rows[p][q], exact=self.exact and other.exact
        )


def divided_difference(f: NormalizedFunction, degree: int) -> BivariateSeries:
    """``(f(t) - f(z)) / (t - z)`` truncated at total degree ``degree``.

    Since ``(t^n - z^n)/(t - z) = sum_{p+q=n-1} t^p z^q``, the coefficient of
    ``t^p z^q`` is exactly ``a_{p+q+1}``; the result needs ``f.order >= degree + 1``.
    """
    if f.order < degree + 1:
        raise InsufficientTruncation(
            f"divided difference of degree {degree} needs order >= {degree + 1}, got {f.order}"
        )
    a = f.series.coeffs
    return BivariateSeries.from_function(degree, lambda p, q: a[p + q + 1], exact=f.exact)


def bivariate_log(h: BivariateSeries) -> BivariateSeries:
    """Formal ``log h`` for ``h(0, 0) = 1``.

    Applies the Euler operator ``E = t d/dt + z d/dz`` to ``h = exp(L)``:
    ``E h = h E L``, which at ``(p, q)`` reads

        (p+q) L[p,q] = (p+q) h[p,q] - sum (i+j) L[i,j] h[p-i, q-j]

    over ``0 < i+j < p+q``, ``i <= p``, ``j <= q``.  Coefficients are filled in
    order of increasing total degree, so the result is exact to degree D.
    """
    if h.rows[0][0] != 1:
        raise NonUnitConstantTerm(f"bivariate log needs h(0,0) = 1, got {h.rows[0][0]!r}")
    d = h.degree
    b = h.rows
    L = [[b[0][0] * 0] * (d - p + 1) for p in range(d + 1)]
    for n in range(1, d + 1):
        for p in range(n + 1):
            q = n - p
            acc = n * b[p][q]
            for i in range(p + 1):
                for j in range(q + 1):
                    k = i + j
                    if k == 0 or k == n:
                        continue
                    acc -= k * L[i][j] * b[p - i][q - j]
            L[p][q] = acc / n
    return BivariateSeries(L, exact=h.exact)


def bivariate_exp(g: BivariateSeries) -> BivariateSeries:
    """Formal ``exp g`` for ``g(0, 0) = 0`` via ``E(e) = e E(g)``."""
    if g.rows[0][0] != 0:
        raise ValueError("bivariate exp needs g(0,0) = 0")
    d = g.degree
    c = g.rows
    out = [[c[0][0] * 0] * (d - p + 1) for p in range(d + 1)]
    out[0][0] = c[0][0] * 0 + 1
    for n in range(1, d + 1):
        for p in range(n + 1):
            q = n - p
            acc = 0
            for i in range(p + 1):
                for j in range(q + 1):
                    if i + j:
                        acc += (i + j) * c[i][j] * out[p - i][q - j]
            out[p][q] = acc / n
    return BivariateSeries(out, exact=g.exact)
