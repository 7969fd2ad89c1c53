"""Grunsky coefficient tables and the Grunsky quadratic-form inequality.

``log((f(t) - f(z)) / (t - z)) = sum omega[p, q] t^p z^q``.

Two kinds of table exist, told apart by ``provenance``:

``"direct"``
    the table of ``f`` itself, checked against the full inequality
    ``sum_q q |sum_p omega[p,q] x_p|^2 <= sum_p |x_p|^2 / p``.
``"odd"``
    the table of ``f_2(z) = sqrt(f(z^2))`` restricted to odd indices, checked
    against the odd-index form of the same inequality (weights ``2q-1``).

Indices are 1-based throughout: ``table.omega[p, q]`` is ``omega_{p,q}``;
row and column 0 of ``omega`` are unused and zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .bivariate import bivariate_log, divided_difference
from .errors import InsufficientTruncation, ProvenanceMismatch
from .series import NormalizedFunction, sqrt_transform

DIRECT = "direct"
ODD = "odd"


@dataclass(frozen=True, eq=False)
class GrunskyTable:
    """Grunsky coefficients ``omega[p, q]`` for ``1 <= p, q <= size``.

    ``slice0[p - 1]`` holds ``omega_{p,0}`` for ``1 <= p <= 2 * size`` (the
    ``z = 0`` row, equal to ``2 gamma_p`` of the expanded function).
    For exact tables both arrays have ``dtype=object`` holding Fractions.
    """

    size: int
    omega: np.ndarray
    slice0: np.ndarray
    provenance: str = DIRECT
    exact: bool = False

    def __post_init__(self):
        if self.provenance not in (DIRECT, ODD):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.omega.shape != (self.size + 1, self.size + 1):
            raise ValueError(f"omega must have shape {(self.size + 1,) * 2}, got {self.omega.shape}")
        self.omega.setflags(write=False)
        self.slice0.setflags(write=False)

    def w(self, p: int, q: int):
        """``omega_{p,q}`` (1-based)."""
        if not (1 <= p <= self.size and 1 <= q <= self.size):
            raise InsufficientTruncation(f"omega[{p},{q}] outside table of size {self.size}")
        v = self.omega[p, q]
        return v if self.exact else complex(v)

    def is_symmetric(self, tol: float = 1e-11) -> bool:
        diff = self.omega - self.omega.T
        return all(abs(v) <= tol for v in diff.ravel())

    def max_quadratic_index(self) -> int:
        """Largest truncation ``Q`` that :func:`grunsky_quadratic` accepts."""
        return self.size if self.provenance == DIRECT else (self.size + 1) // 2

    def to_dict(self) -> dict:
        def enc(v):
            v = complex(v)
            return [v.real, v.imag]

        return {
            "provenance": self.provenance,
            "size": self.size,
            "omega": [[enc(self.omega[p, q]) for q in range(1, self.size + 1)] for p in range(1, self.size + 1)],
            "slice0": [enc(v) for v in self.slice0],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GrunskyTable":
        """Inverse of :meth:`to_dict`; entries are ``[re, im]`` pairs or plain numbers."""
        size = int(data["size"])

        def dec(v):
            return complex(v[0], v[1]) if isinstance(v, (list, tuple)) else complex(v)

        rows = data["omega"]
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"omega must be a {size}x{size} array")
        omega = np.zeros((size + 1, size + 1), dtype=complex)
        for p, row in enumerate(rows, start=1):
            omega[p, 1:] = [dec(v) for v in row]
        slice0 = np.array([dec(v) for v in data.get("slice0", [])], dtype=complex)
        return cls(size, omega, slice0, provenance=data.get("provenance", DIRECT))


def _empty(shape, exact):
    if exact:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros(shape, dtype=complex)


def grunsky_table(f: NormalizedFunction, size: int) -> GrunskyTable:
    """Direct Grunsky table of ``f`` for indices up to ``size``.

    Expands to total degree ``2 * size``, so ``f.order >= 2 * size + 1`` is required.
    """
    if size < 1:
        raise ValueError("table size must be >= 1")
    degree = 2 * size
    if f.order < degree + 1:
        raise InsufficientTruncation(
            f"Grunsky table of size {size} needs order >= {degree + 1}, got {f.order}"
        )
    log_h = bivariate_log(divided_difference(f, degree))
    omega = _empty((size + 1, size + 1), f.exact)
    for p in range(1, size + 1):
        for q in range(1, size + 1):
            omega[p, q] = log_h.coeff(p, q)
    slice0 = _empty(degree, f.exact)
    for p in range(1, degree + 1):
        slice0[p - 1] = log_h.coeff(p, 0)
    return GrunskyTable(size, omega, slice0, provenance=DIRECT, exact=f.exact)


def odd_grunsky(f: NormalizedFunction, size: int) -> GrunskyTable:
    """Odd-index Grunsky table of ``f_2 = sqrt(f(z^2))``.

    ``size`` is the largest index kept, so ``odd_grunsky(f, 3)`` holds
    ``omega_11, omega_13, omega_33``.  ``f_2`` has order ``2 f.order - 1``,
    hence ``f.order >= size + 1`` is required.

    Entries of mixed parity vanish because ``f_2`` is odd; this is checked.
    Entries with both indices even are discarded: they do not enter the
    odd-index inequality and are not part of the odd table.
    """
    if f.order < size + 1:
        raise InsufficientTruncation(f"odd Grunsky table of size {size} needs order >= {size + 1}, got {f.order}")
    f2 = sqrt_transform(f).truncate(2 * size + 1)
    full = grunsky_table(f2, size)
    omega = _empty((size + 1, size + 1), f.exact)
    for p in range(1, size + 1):
        for q in range(1, size + 1):
            v = full.omega[p, q]
            if (p + q) % 2:
                if v != 0:
                    raise ArithmeticError(f"odd function produced nonzero omega[{p},{q}] = {v!r}")
            elif p % 2:
                omega[p, q] = v
    slice0 = np.array(full.slice0, dtype=full.slice0.dtype)
    return GrunskyTable(size, omega, slice0, provenance=ODD, exact=f.exact)


@dataclass(frozen=True)
class QuadraticForm:
    """Both sides of a truncated Grunsky inequality.

    ``truncation`` is the number of terms kept; the left side of a truncated
    check underestimates the infinite sum, so ``lhs <= rhs`` remains necessary.
    """

    lhs: float
    rhs: float
    truncation: int
    provenance: str = DIRECT

    def holds(self, tol: float = 1e-9) -> bool:
        return self.lhs <= self.rhs + tol

    def is_equality(self, tol: float = 1e-9) -> bool:
        return abs(self.lhs - self.rhs) <= tol * max(1.0, abs(self.rhs))

    def __iter__(self):
        return iter((self.lhs, self.rhs))


def _indices(table: GrunskyTable, Q: int) -> list[int]:
    if Q < 1:
        raise ValueError("truncation Q must be >= 1")
    if Q > table.max_quadratic_index():
        raise InsufficientTruncation(
            f"truncation Q={Q} exceeds what a {table.provenance} table of size {table.size} supports"
        )
    if table.provenance == DIRECT:
        return list(range(1, Q + 1))
    return list(range(1, 2 * Q, 2))


def grunsky_quadratic(table: GrunskyTable, x: Sequence, Q: int) -> QuadraticForm:
    """Evaluate both sides of the Grunsky inequality truncated to ``Q`` terms.

    ``x[j]`` is the weight of the j-th index used: ``x_{j+1}`` for a direct
    table, ``x_{2j+1}`` for an odd table.  Exact tables with rational ``x``
    give exact Fraction results.
    """
    idx = _indices(table, Q)
    if len(x) < Q:
        raise ValueError(f"test vector has {len(x)} entries, need {Q}")
    lhs = 0
    for q in idx:
        inner = sum(table.omega[p, q] * x[j] for j, p in enumerate(idx))
        lhs += q * abs(inner) ** 2
    rhs = sum(Fraction(1, p) * abs(x[j]) ** 2 for j, p in enumerate(idx))
    if not isinstance(lhs, Fraction) or not isinstance(rhs, Fraction):
        lhs, rhs = float(lhs), float(rhs)
    return QuadraticForm(lhs, rhs, Q, table.provenance)


def grunsky_quadratic_batch(table: GrunskyTable, X: np.ndarray, Q: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`grunsky_quadratic` over the rows of ``X`` (shape ``(n, Q)``)."""
    idx = np.array(_indices(table, Q))
    X = np.asarray(X, dtype=complex)[:, :Q]
    W = np.asarray(table.omega[np.ix_(idx, idx)], dtype=complex)
    inner = X @ W
    lhs = (np.abs(inner) ** 2) @ idx.astype(float)
    rhs = (np.abs(X) ** 2) @ (1.0 / idx)
    return lhs, rhs


def _require_odd(table: GrunskyTable, min_size: int = 3) -> None:
    if table.provenance != ODD:
        raise ProvenanceMismatch("operation needs an odd (square-root transform) table")
    if table.size < min_size:
        raise InsufficientTruncation(f"operation needs table size >= {min_size}, got {table.size}")


def two_term_inequality(table: GrunskyTable, x1, x3) -> QuadraticForm:
    """Two-term specialization with only ``x_1, x_3`` nonzero.

    ``|w11 x1 + w31 x3|^2 + 3 |w13 x1 + w33 x3|^2 <= |x1|^2 + |x3|^2 / 3``
    """
    _require_odd(table)
    w11, w13, w31, w33 = table.w(1, 1), table.w(1, 3), table.w(3, 1), table.w(3, 3)
    lhs = abs(w11 * x1 + w31 * x3) ** 2 + 3 * abs(w13 * x1 + w33 * x3) ** 2
    rhs = abs(x1) ** 2 + Fraction(1, 3) * abs(x3) ** 2
    if not isinstance(lhs, Fraction) or not isinstance(rhs, Fraction):
        lhs, rhs = float(lhs), float(rhs)
    return QuadraticForm(lhs, rhs, 2, ODD)


def coefficients_from_grunsky(table: GrunskyTable) -> tuple:
    """``(a2, a3, a4)`` of ``f`` recovered from the odd table of ``f_2``."""
    _require_odd(table)
    w11, w13, w33 = table.w(1, 1), table.w(1, 3), table.w(3, 3)
    a2 = 2 * w11
    a3 = 2 * w13 + 3 * w11**2
    a4 = 2 * w33 + 8 * w11 * w13 + Fraction(10, 3) * w11**3
    return a2, a3, a4


def gamma3_from_grunsky(table: GrunskyTable):
    """``gamma_3 = omega_33 + 2 omega_11 omega_13``."""
    _require_odd(table)
    return table.w(3, 3) + 2 * table.w(1, 1) * table.w(1, 3)
