"""Known members of the class S with closed-form Taylor and logarithmic coefficients.

Every entry is generated from an exact coefficient rule, never from numerical
differentiation.  Univalence of each entry is a classical fact recorded in its
``notes``; it is not checked at runtime.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ParameterOutOfRange, UnknownCatalogEntry
from .series import DEFAULT_ORDER, NormalizedFunction, UnivariateSeries


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple
    series: NormalizedFunction
    known_a: tuple | None
    known_gamma: tuple | None
    notes: str

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(f'{p:g}' for p in self.params)})"


@dataclass(frozen=True)
class _Recipe:
    n_params: int
    defaults: tuple
    a: Callable  # (n, params) -> a_n
    gamma: Callable | None  # (n, params) -> gamma_n
    rational: bool
    notes: str
    check: Callable | None = None


def _unit(angle: float) -> complex:
    return cmath.exp(1j * angle)


def _two_point_a(n, p):
    u, v = _unit(p[0]), _unit(p[1])
    return sum(u**j * v ** (n - 1 - j) for j in range(n))


def _check_quadratic(p):
    if abs(p[0]) > 0.5:
        raise ParameterOutOfRange(f"z + c z^2 is univalent only for |c| <= 1/2, got c = {p[0]}")


_RECIPES: dict[str, _Recipe] = {
    "identity": _Recipe(
        0, (), lambda n, p: Fraction(int(n == 1)), lambda n, p: Fraction(0), True,
        "f(z) = z.",
    ),
    "koebe": _Recipe(
        0, (), lambda n, p: Fraction(n), lambda n, p: Fraction(1, n), True,
        "Koebe function z/(1-z)^2; a_n = n, gamma_n = 1/n; extremal for most problems in S.",
    ),
    "koebe_rotation": _Recipe(
        1, (0.9,),
        lambda n, p: n * _unit((n - 1) * p[0]),
        lambda n, p: _unit(n * p[0]) / n,
        False,
        "Rotated Koebe function e^{-i theta} k(e^{i theta} z); a_n = n e^{i(n-1) theta}.",
    ),
    "right_half_line": _Recipe(
        0, (), lambda n, p: Fraction(1), lambda n, p: Fraction(1, 2 * n), True,
        "z/(1-z), maps the disc onto the half-plane Re w > -1/2 (convex).",
    ),
    "odd_koebe": _Recipe(
        0, (), lambda n, p: Fraction(n % 2),
        lambda n, p: Fraction(1, n) if n % 2 == 0 else Fraction(0), True,
        "z/(1-z^2), the odd Koebe function; equals sqrt(k(z^2)).",
    ),
    "log_map": _Recipe(
        0, (), lambda n, p: Fraction(1, n) if n % 2 else Fraction(0), None, True,
        "(1/2) log((1+z)/(1-z)), maps the disc onto a horizontal strip (convex).",
    ),
    "convex_parabola": _Recipe(
        0, (), lambda n, p: {1: Fraction(1), 2: Fraction(-1, 2)}.get(n, Fraction(0)),
        lambda n, p: -Fraction(1, 2) ** n / (2 * n), True,
        "z - z^2/2; Re f'(z) = Re(1 - z) > 0 on the disc, hence univalent.",
    ),
    "quadratic": _Recipe(
        1, (0.3,),
        lambda n, p: {1: 1.0, 2: p[0]}.get(n, 0.0),
        lambda n, p: (-1) ** (n + 1) * p[0] ** n / (2 * n),
        False,
        "z + c z^2 with real |c| <= 1/2 (univalent exactly in that range).",
        _check_quadratic,
    ),
    "two_point": _Recipe(
        2, (0.6, -2.1),
        _two_point_a,
        lambda n, p: (_unit(n * p[0]) + _unit(n * p[1])) / (2 * n),
        False,
        "z/((1-uz)(1-vz)) with u = e^{i alpha}, v = e^{i beta}; starlike. u = v = 1 gives Koebe.",
    ),
}

CATALOG_NAMES = tuple(_RECIPES)


def catalog_function(
    name: str, params: Sequence[float] | None = None, order: int = DEFAULT_ORDER, exact: bool = False
) -> CatalogEntry:
    """Generate catalog entry ``name`` to Taylor order ``order``.

    ``params``: ``koebe_rotation`` takes ``(theta,)``, ``two_point`` takes the
    angles ``(alpha, beta)`` of ``u`` and ``v``, ``quadratic`` takes ``(c,)``.
    Exact mode is available for the rational entries only.
    """
    try:
        recipe = _RECIPES[name]
    except KeyError:
        raise UnknownCatalogEntry(f"unknown catalog function {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    params = recipe.defaults if params is None else tuple(float(p) for p in params)
    if len(params) != recipe.n_params:
        raise ParameterOutOfRange(f"{name} takes {recipe.n_params} parameter(s), got {len(params)}")
    if not all(math.isfinite(p) for p in params):
        raise ParameterOutOfRange(f"{name} parameters must be finite, got {params}")
    if recipe.check is not None:
        recipe.check(params)
    if order < 1:
        raise ValueError("order must be >= 1")
    if exact and not recipe.rational:
        raise ValueError(f"{name} has irrational coefficients; exact mode unavailable")

    a = [recipe.a(n, params) for n in range(1, order + 1)]
    series = NormalizedFunction(UnivariateSeries([0, *a], exact=exact))
    known_gamma = None
    if recipe.gamma is not None:
        known_gamma = tuple(recipe.gamma(n, params) for n in range(1, order))
    return CatalogEntry(name, params, series, tuple(a), known_gamma, recipe.notes)


def default_catalog(order: int = DEFAULT_ORDER, exact: bool = False) -> list[CatalogEntry]:
    """All entries at their default parameters (rational entries only if ``exact``)."""
    return [
        catalog_function(name, order=order, exact=exact)
        for name, recipe in _RECIPES.items()
        if recipe.rational or not exact
    ]


def list_functions() -> list[dict]:
    return [
        {"name": name, "n_params": recipe.n_params, "defaults": list(recipe.defaults), "notes": recipe.notes}
        for name, recipe in _RECIPES.items()
    ]
