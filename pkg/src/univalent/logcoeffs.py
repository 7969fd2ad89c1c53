"""Logarithmic coefficients: ``log(f(z)/z) = 2 sum_{n>=1} gamma_n z^n``."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import InsufficientTruncation
from .series import NormalizedFunction, series_log


class LogCoefficientVector:
    """``gamma_1 .. gamma_N`` with 1-based indexing: ``vec[n]`` is ``gamma_n``."""

    __slots__ = ("_values",)

    def __init__(self, values):
        self._values = tuple(values)

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int):
        if not 1 <= n <= len(self._values):
            raise IndexError(f"gamma_{n} not available (have gamma_1..gamma_{len(self._values)})")
        return self._values[n - 1]

    def __iter__(self):
        return iter(self._values)

    def __repr__(self) -> str:
        return f"LogCoefficientVector({list(self._values)!r})"

    def to_numpy(self) -> np.ndarray:
        return np.array([complex(v) for v in self._values], dtype=complex)


def log_coefficients(f: NormalizedFunction, N: int) -> LogCoefficientVector:
    """``gamma_n = [z^n] log(f(z)/z) / 2`` for ``n = 1..N``.

    ``gamma_N`` consumes ``a_2 .. a_{N+1}``, so ``f.order >= N + 1`` is required.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if f.order < N + 1:
        raise InsufficientTruncation(f"gamma_1..gamma_{N} need order >= {N + 1}, got {f.order}")
    log_u = series_log(f.over_z().truncate(N))
    half = Fraction(1, 2) if f.exact else 0.5
    return LogCoefficientVector(c * half for c in log_u.coeffs[1:])


def gamma_closed_form(a2, a3, a4) -> tuple:
    """``(gamma_1, gamma_2, gamma_3)`` from the first Taylor coefficients."""
    half, third = Fraction(1, 2), Fraction(1, 3)
    g1 = half * a2
    g2 = half * (a3 - half * a2**2)
    g3 = half * (a4 - a2 * a3 + third * a2**3)
    return g1, g2, g3
