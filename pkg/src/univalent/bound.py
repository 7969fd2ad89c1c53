"""Maximization of psi(a, t) = 1/9 + phi(a, t)/3 over the region Omega.

    phi(a, t) = 4a^2 - 4a^4 - t^2 - 4a^2 t
    Omega     = {0 <= a <= 1, -(1 - a^2)/2 <= t <= sqrt(1 - a^2)/sqrt(3)}

The maximum of psi over Omega is 133/225, so |gamma_3| <= sqrt(133)/15 for
every f in S.  Polynomial identities (stationary points, edge restrictions,
vertex values) are computed with exact rationals; only the radical upper
edge and the global grid scan use floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import OutOfRange

BOUND_SQUARED = Fraction(133, 225)
PHI_MAX = Fraction(36, 25)
# Scale in the published (erroneous) lower-edge factorization -(1/4)(a^2 - 1)(a^2 - 1/25).
PRINTED_LOWER_EDGE_SCALE = Fraction(-1, 4)
EDGES = ("interior", "a0", "a1", "t_lower", "t_upper")

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def bound_constant() -> float:
    """sqrt(133)/15 = 0.76884..., an upper bound for |gamma_3| over S (not claimed sharp)."""
    return math.sqrt(133.0) / 15.0


def phi(a, t):
    return 4 * a**2 - 4 * a**4 - t**2 - 4 * a**2 * t


def psi(a, t):
    if isinstance(a, Fraction) and isinstance(t, Fraction):
        return Fraction(1, 9) + phi(a, t) / 3
    return 1.0 / 9.0 + phi(a, t) / 3.0


@dataclass(frozen=True)
class RegionPoint:
    a: float
    t: float

    def in_region(self, tol: float = 1e-12) -> bool:
        if not -tol <= self.a <= 1 + tol:
            return False
        lo, hi = region_bounds(min(max(self.a, 0.0), 1.0))
        return lo - tol <= self.t <= hi + tol


def region_bounds(a: float) -> tuple[float, float]:
    """``(t_min(a), t_max(a))`` for ``0 <= a <= 1``; always ``t_min <= t_max``."""
    if not 0 <= a <= 1:
        raise OutOfRange(f"a must lie in [0, 1], got {a}")
    rest = 1 - a * a
    return -0.5 * rest, math.sqrt(max(rest, 0.0)) / math.sqrt(3.0)


def _bounds_array(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    rest = np.maximum(1.0 - a * a, 0.0)
    return -0.5 * rest, np.sqrt(rest) / math.sqrt(3.0)


# ---------------------------------------------------------------- exact algebra
#
# Polynomials in (a, t) are dicts {(i, j): Fraction} for a^i t^j; univariate
# ones are coefficient lists, lowest degree first.


def _phi_poly() -> dict:
    return {(2, 0): Fraction(4), (4, 0): Fraction(-4), (0, 2): Fraction(-1), (2, 1): Fraction(-4)}


def _diff(poly: dict, var: int) -> dict:
    out = {}
    for (i, j), c in poly.items():
        k = (i, j)[var]
        if k:
            key = (i - 1, j) if var == 0 else (i, j - 1)
            out[key] = out.get(key, 0) + c * k
    return {k: v for k, v in out.items() if v}


def _upoly_mul(p: list, q: list) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _upoly_add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _upoly_trim(p: list) -> list:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _substitute_t(poly: dict, t_of_a: list) -> list:
    """Replace t by the univariate polynomial ``t_of_a`` in ``poly``."""
    out = [Fraction(0)]
    for (i, j), c in poly.items():
        term = [Fraction(0)] * i + [c]
        for _ in range(j):
            term = _upoly_mul(term, t_of_a)
        out = _upoly_add(out, term)
    return _upoly_trim(out)


def _upoly_eval(p: list, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def gradient_residual(a, t) -> tuple:
    """``(phi_a, phi_t) = (8a - 16a^3 - 8at, -4a^2 - 2t)`` at ``(a, t)``."""
    return 8 * a - 16 * a**3 - 8 * a * t, -4 * a**2 - 2 * t


@dataclass(frozen=True)
class StationaryPoint:
    point: RegionPoint
    residual: tuple
    exact: bool


def _stationary_reduction() -> tuple[list, list]:
    """Solve ``phi_t = 0`` for t exactly; return ``(t(a), phi_a(a, t(a)))`` as polynomials in a."""
    p = _phi_poly()
    d_a, d_t = _diff(p, 0), _diff(p, 1)
    if any(j > 1 for (_, j) in d_t):
        raise ArithmeticError("phi_t is not linear in t")
    slope = d_t.get((0, 1), Fraction(0))
    if slope == 0:
        raise ArithmeticError("phi_t does not involve t")
    # phi_t = A(a) + slope * t  =>  t = -A(a) / slope
    deg = max((i for (i, j) in d_t if j == 0), default=0)
    t_of_a = [-d_t.get((i, 0), Fraction(0)) / slope for i in range(deg + 1)]
    return t_of_a, _substitute_t(d_a, t_of_a)


def reduced_gradient_along_stationary_t() -> list:
    """Coefficients (lowest first) of ``phi_a(a, t(a))`` where ``phi_t(a, t(a)) = 0``: ``[0, 8]``."""
    return _stationary_reduction()[1]


def stationary_points() -> list[StationaryPoint]:
    """Real solutions of ``grad phi = 0``, solved exactly.

    ``phi_t`` is linear in ``t``; solving it for ``t`` and substituting into
    ``phi_a`` leaves a univariate polynomial in ``a``.  Its real roots are found
    exactly when it reduces to a monomial times a linear factor, numerically
    otherwise.
    """
    t_of_a, reduced = _stationary_reduction()
    roots: list = []
    low = next((k for k, c in enumerate(reduced) if c != 0), None)
    if low is None:
        raise ArithmeticError("stationary set is a curve, not isolated points")
    if low > 0:
        roots.append(Fraction(0))
    rest = _upoly_trim(reduced[low:])
    if len(rest) == 2:
        roots.append(-rest[0] / rest[1])
    elif len(rest) > 2:
        for r in np.roots([float(c) for c in reversed(rest)]):
            if abs(r.imag) < 1e-12:
                roots.append(float(r.real))
    out = []
    for a in sorted(set(roots)):
        t = _upoly_eval(t_of_a, a)
        out.append(StationaryPoint(RegionPoint(a, t), gradient_residual(a, t), isinstance(a, Fraction)))
    return out


@dataclass(frozen=True)
class EdgeIdentity:
    """Exact expansion of phi on the lower edge ``t = -(1 - u)/2`` in ``u = a^2``."""

    coefficients: tuple  # (c0, c1, c2) of c0 + c1 u + c2 u^2
    leading: Fraction
    roots: tuple
    vertex_u: Fraction
    vertex_value: Fraction
    printed_leading: Fraction
    printed_vertex_value: Fraction

    @property
    def matches_printed(self) -> bool:
        return self.leading == self.printed_leading


def _quadratic_vertex(c0, c1, c2) -> tuple:
    u = -c1 / (2 * c2)
    return u, c0 + c1 * u + c2 * u * u


def exact_edge_identity() -> EdgeIdentity:
    """Expand ``phi(a, -(1 - a^2)/2)`` exactly as a polynomial in ``u = a^2``.

    Result: ``-(25/4) u^2 + (13/2) u - 1/4 = -(25/4)(u - 1)(u - 1/25)`` with
    vertex value 36/25 at ``u = 13/25``.  The printed factor ``-1/4`` instead
    of ``-25/4`` would put the maximum at 36/625.
    """
    # phi as a polynomial in (u, t): 4u - 4u^2 - t^2 - 4u t
    in_u = {(1, 0): Fraction(4), (2, 0): Fraction(-4), (0, 2): Fraction(-1), (1, 1): Fraction(-4)}
    coeffs = _substitute_t(in_u, [Fraction(-1, 2), Fraction(1, 2)])
    coeffs = coeffs + [Fraction(0)] * (3 - len(coeffs))
    c0, c1, c2 = coeffs[:3]
    disc = c1 * c1 - 4 * c2 * c0
    s = Fraction(math.isqrt(disc.numerator), math.isqrt(disc.denominator))
    if s * s != disc:
        raise ArithmeticError("lower-edge quadratic has irrational roots")
    roots = tuple(sorted(((-c1 - s) / (2 * c2), (-c1 + s) / (2 * c2))))
    vu, vv = _quadratic_vertex(c0, c1, c2)
    # printed: k (u - 1)(u - 1/25) with k = -1/4
    k = PRINTED_LOWER_EDGE_SCALE
    printed = _upoly_mul([-roots[1], Fraction(1)], [-roots[0], Fraction(1)])
    printed = [k * c for c in printed]
    _, pv = _quadratic_vertex(*printed)
    return EdgeIdentity((c0, c1, c2), c2, roots, vu, vv, k, pv)


def upper_edge_polynomial_max() -> tuple[Fraction, Fraction]:
    """Vertex ``(u, value)`` of ``(1/3)(-12u^2 + 13u - 1)``: ``(13/24, 121/144)``."""
    third = Fraction(1, 3)
    return _quadratic_vertex(-third, 13 * third, -12 * third)


def upper_edge_dominant(a):
    """``(1/3)(-12a^4 + 13a^2 - 1)``, which dominates phi on the upper edge."""
    return (-12 * a**4 + 13 * a**2 - 1) / 3


def edge_profile(edge: str, value: float) -> float:
    """phi restricted to an edge of Omega.

    ``value`` is ``t`` for the vertical edges ``a0``/``a1`` and ``a`` for the
    curved edges ``t_lower``/``t_upper``.
    """
    if edge == "a0":
        lo, hi = region_bounds(0.0)
        if not lo <= value <= hi:
            raise OutOfRange(f"t = {value} outside [{lo}, {hi}] on the a = 0 edge")
        return phi(0.0, value)
    if edge == "a1":
        if value != 0:
            raise OutOfRange("the a = 1 edge is the single point t = 0")
        return phi(1.0, 0.0)
    if edge in ("t_lower", "t_upper"):
        if not 0 <= value <= 1:
            raise OutOfRange(f"a = {value} outside [0, 1]")
        lo, hi = region_bounds(value)
        return phi(value, lo if edge == "t_lower" else hi)
    raise ValueError(f"unknown edge {edge!r}; expected one of {EDGES[1:]}")


# ---------------------------------------------------------------- numerics


@dataclass(frozen=True)
class OptimizationResult:
    max_value: float
    argmax: RegionPoint
    grid_resolution: int
    refinement_tolerance: float
    edge_attained: str
    s: float = 0.0
    grid_max: float = field(default=float("nan"))


def _psi_as(a: float, s: float) -> float:
    lo, hi = _bounds_array(np.float64(a))
    return float(psi(a, lo + s * (hi - lo)))


def _golden_max(f: Callable[[float], float], lo: float, hi: float, x0: float, f0: float, tol: float):
    """Golden-section maximization on ``[lo, hi]``; never returns worse than ``(x0, f0)``."""
    best_x, best_f = x0, f0
    for x in (lo, hi):
        fx = f(x)
        if fx > best_f:
            best_x, best_f = x, fx
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
    for x, fx in ((x1, f1), (x2, f2)):
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, best_f


def psi_grid(grid_n: int, chunk: int = 256):
    """Yield ``(i0, a, t, psi)`` blocks of the ``grid_n x grid_n`` (a, s) grid, a-major."""
    a_all = np.linspace(0.0, 1.0, grid_n)
    s = np.linspace(0.0, 1.0, grid_n)
    for i0 in range(0, grid_n, chunk):
        a = a_all[i0 : i0 + chunk, None]
        lo, hi = _bounds_array(a)
        t = lo + s[None, :] * (hi - lo)
        yield i0, np.broadcast_to(a, t.shape), t, psi(a, t)


def _classify(a: float, s: float, tol: float) -> str:
    if a <= tol:
        return "a0"
    if a >= 1 - tol:
        return "a1"
    if s <= tol:
        return "t_lower"
    if s >= 1 - tol:
        return "t_upper"
    return "interior"


def maximize_psi(grid_n: int = 2001, refine_tol: float = 1e-12, max_sweeps: int = 200) -> OptimizationResult:
    """Grid scan of psi over ``(a, s) in [0,1]^2`` then coordinate golden-section refinement.

    ``t = t_min(a) + s (t_max(a) - t_min(a))``; at ``a = 1`` every s maps to
    ``t = 0``.  Ties on the grid go to the lexicographically smallest (a, s).
    Refinement alternates s- and a-searches in a window of one grid step around
    the incumbent until a sweep improves psi by at most ``refine_tol``.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    if not refine_tol > 0:
        raise ValueError("refine_tol must be positive")
    best = (-math.inf, 0, 0)
    for i0, _, _, vals in psi_grid(grid_n):
        k = int(np.argmax(vals))  # first occurrence: smallest (a, s) in the block
        v = float(vals.flat[k])
        if v > best[0]:
            best = (v, i0 + k // grid_n, k % grid_n)
    grid_max, i, j = best
    h = 1.0 / (grid_n - 1)
    a, s = i * h, j * h
    value = _psi_as(a, s)

    for _ in range(max_sweeps):
        start = value
        s, value = _golden_max(lambda x: _psi_as(a, x), max(0.0, s - h), min(1.0, s + h), s, value, refine_tol)
        a, value = _golden_max(lambda x: _psi_as(x, s), max(0.0, a - h), min(1.0, a + h), a, value, refine_tol)
        if value - start <= refine_tol:
            break

    lo, hi = region_bounds(a)
    t = lo + s * (hi - lo)
    edge = _classify(a, s, max(10 * refine_tol, 1e-9))
    return OptimizationResult(value, RegionPoint(a, t), grid_n, refine_tol, edge, s, grid_max)


def sample_region(n: int, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Scrambled-Sobol sample of ``n`` points of Omega as ``(a, t)`` arrays."""
    from scipy.stats import qmc

    m = max(1, math.ceil(math.log2(n)))
    u = qmc.Sobol(d=2, scramble=True, seed=seed).random_base2(m)[:n]
    lo, hi = _bounds_array(u[:, 0])
    return u[:, 0], lo + u[:, 1] * (hi - lo)
