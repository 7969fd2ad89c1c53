from fractions import Fraction

import pytest
import sympy as sp

from univalent.catalog import default_catalog

z, t = sp.symbols("z t")


def taylor(expr, n, var=z):
    """Exact Taylor coefficients c_0..c_n of ``expr`` about 0 (sympy oracle)."""
    poly = sp.series(expr, var, 0, n + 1).removeO()
    return [sp.Rational(poly.coeff(var, k)) if k else sp.Rational(poly.subs(var, 0)) for k in range(n + 1)]


def taylor2(expr, degree):
    """Exact coefficients ``{(p, q): c}`` of a bivariate expression, ``p + q <= degree``."""
    s = sp.symbols("s")
    # scale both variables by s so total degree becomes the s-degree
    scaled = sp.series(expr.subs({t: s * t, z: s * z}), s, 0, degree + 1).removeO()
    poly = sp.Poly(sp.expand(scaled.subs(s, 1)), t, z)
    out = {}
    for (p, q), c in poly.terms():
        if p + q <= degree:
            out[(p, q)] = sp.Rational(c)
    return out


def frac(x) -> Fraction:
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


@pytest.fixture(scope="session")
def catalog():
    return default_catalog(25)
