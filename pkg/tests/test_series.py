import cmath
import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import frac, taylor, z
from univalent.errors import DivisionBySingularSeries, NonUnitConstantTerm
from univalent.series import (
    NormalizedFunction,
    UnivariateSeries,
    rotate,
    series_arith,
    series_exp,
    series_log,
    series_sqrt,
    sqrt_transform,
    substitute_square,
)

N = 12


def exact_series(expr, n=N):
    return UnivariateSeries([frac(c) for c in taylor(expr, n)], exact=True)


def koebe(n=N, exact=True):
    return NormalizedFunction(UnivariateSeries(range(n + 1), exact=exact))


complex_unit = st.builds(
    lambda r, a: math.sqrt(r) * cmath.exp(2j * math.pi * a),
    st.floats(0, 1), st.floats(0, 1),
)


def unit_series(draw_coeffs, scale=0.5):
    return UnivariateSeries([1, *(scale * c for c in draw_coeffs)])


def max_rel(a, b):
    return max(abs(complex(x) - complex(y)) for x, y in zip(a, b)) / max(abs(complex(x)) for x in b)


class TestConstruction:
    def test_order_and_storage(self):
        s = UnivariateSeries([1, 2, 3])
        assert s.order == 2
        assert len(s.coeffs) == 3
        assert all(isinstance(c, complex) for c in s)

    def test_exact_mode_stores_fractions(self):
        s = UnivariateSeries([1, Fraction(1, 3)], exact=True)
        assert s.exact and s[1] == Fraction(1, 3)

    def test_exact_rejects_complex(self):
        with pytest.raises(ValueError):
            UnivariateSeries([1, 1j], exact=True)

    def test_normalized_function_invariants(self):
        with pytest.raises(ValueError):
            NormalizedFunction(UnivariateSeries([0, 2, 1]))
        with pytest.raises(ValueError):
            NormalizedFunction(UnivariateSeries([1, 1, 1]))
        f = NormalizedFunction.from_taylor([2, 3])
        assert f.a(2) == 2 and f.a(3) == 3 and f.order == 3


class TestArith:
    def test_cancellation(self):
        s = UnivariateSeries([0, 1, 1]) + UnivariateSeries([0, 1, -1])
        assert s.coeffs == (0, 2, 0)

    def test_geometric_identity(self):
        one = UnivariateSeries([1, -1] + [0] * 8, exact=True) * UnivariateSeries([1] * 10, exact=True)
        assert one.coeffs == tuple([1] + [0] * 9)

    def test_koebe_times_square(self):
        # oracle: binomial expansion of z/(1-z)^2 is sum n z^n
        k = exact_series(z / (1 - z) ** 2)
        assert k.coeffs == koebe().series.coeffs
        back = k * UnivariateSeries([1, -2, 1] + [0] * (N - 2), exact=True)
        assert back.coeffs == tuple([0, 1] + [0] * (N - 1))

    def test_division_inverts_multiplication(self):
        a = exact_series(sp.exp(z))
        b = exact_series(1 / (1 - 2 * z))
        assert series_arith(a * b, b, "div").coeffs == a.coeffs

    def test_division_by_singular(self):
        with pytest.raises(DivisionBySingularSeries):
            UnivariateSeries([1, 1]) / UnivariateSeries([0, 1])

    def test_mixed_order_takes_minimum(self):
        s = UnivariateSeries([1, 1, 1, 1]) * UnivariateSeries([1, 1])
        assert s.order == 1

    def test_mixed_modes_fall_back_to_float(self):
        s = UnivariateSeries([1, 1], exact=True) + UnivariateSeries([1, 1])
        assert not s.exact

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            series_arith(UnivariateSeries([1]), UnivariateSeries([1]), "pow")


class TestLog:
    def test_log_one(self):
        assert series_log(UnivariateSeries.one(5, exact=True)).coeffs == (0,) * 6

    def test_log_geometric(self):
        got = series_log(exact_series(1 / (1 - z)))
        assert got.coeffs == tuple([Fraction(0)] + [Fraction(1, n) for n in range(1, N + 1)])

    def test_log_koebe_gives_inverse_integers(self):
        got = series_log(koebe(N + 1).over_z())
        assert got.coeffs == tuple([0] + [Fraction(2, n) for n in range(1, N + 1)])

    def test_log_matches_sympy(self):
        u = 1 + z + 3 * z**2 / 7 - z**5
        got = series_log(exact_series(u))
        assert got.coeffs == tuple(frac(c) for c in taylor(sp.log(u), N))

    def test_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_log(UnivariateSeries([2, 1]))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(complex_unit, min_size=1, max_size=20))
    def test_exp_log_roundtrip(self, coeffs):
        u = unit_series(coeffs)
        assert max_rel(series_exp(series_log(u)).coeffs, u.coeffs) <= 1e-12


class TestSqrt:
    def test_sqrt_one(self):
        assert series_sqrt(UnivariateSeries.one(4)).coeffs == UnivariateSeries.one(4).coeffs

    def test_perfect_square(self):
        s = series_sqrt(UnivariateSeries([1, 2, 1, 0, 0], exact=True))
        assert s.coeffs == (1, 1, 0, 0, 0)

    def test_binomial(self):
        # oracle: (1 - w)^(-1/2) = sum binom(2k, k) (w/4)^k with w = z^2
        got = series_sqrt(exact_series(1 / (1 - z**2)))
        want = [Fraction(math.comb(k, k // 2), 4 ** (k // 2)) if k % 2 == 0 else 0 for k in range(N + 1)]
        assert got.coeffs == tuple(want)

    def test_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_sqrt(UnivariateSeries([0, 1]))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(complex_unit, min_size=1, max_size=20))
    def test_square_roundtrip(self, coeffs):
        u = unit_series(coeffs)
        s = series_sqrt(u)
        assert max_rel((s * s).coeffs, u.coeffs) <= 1e-12


class TestSqrtTransform:
    def test_identity(self):
        f = NormalizedFunction(UnivariateSeries([0, 1, 0, 0], exact=True))
        assert sqrt_transform(f).series.coeffs == (0, 1, 0, 0, 0, 0)

    def test_koebe_gives_odd_koebe(self):
        got = sqrt_transform(koebe())
        assert got.series.coeffs == tuple(frac(c) for c in taylor(z / (1 - z**2), 2 * N - 1))

    def test_right_half_line(self):
        f = NormalizedFunction(UnivariateSeries([0] + [1] * N, exact=True))
        got = sqrt_transform(f)
        assert got.series.coeffs == tuple(frac(c) for c in taylor(z / sp.sqrt(1 - z**2), 2 * N - 1))
        assert got.series.coeffs[:6] == (0, 1, 0, Fraction(1, 2), 0, Fraction(3, 8))

    def test_order_doubles(self):
        assert sqrt_transform(koebe(7)).order == 13

    def test_even_coefficients_vanish(self, catalog):
        for entry in catalog:
            f2 = sqrt_transform(entry.series)
            assert all(f2.a(n) == 0 for n in range(0, f2.order + 1, 2))

    def test_substitute_square(self):
        assert substitute_square(UnivariateSeries([1, 2, 3])).coeffs == (1, 0, 2, 0, 3)


class TestRotate:
    def test_zero_angle(self):
        f = koebe()
        assert rotate(f, 0.0) is f

    def test_half_turn_koebe(self):
        g = rotate(koebe(exact=False), math.pi)
        assert g.a(2) == pytest.approx(-2, abs=1e-14)
        assert g.a(3) == pytest.approx(3, abs=1e-14)
        assert g.a(4) == pytest.approx(-4, abs=1e-14)

    def test_phase_cancellation(self):
        f = NormalizedFunction.from_taylor([2j, 0])
        assert rotate(f, -math.pi / 2).a(2) == pytest.approx(2, abs=1e-15)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(-10, 10), st.floats(-10, 10))
    def test_modulus_and_composition(self, t1, t2):
        f = NormalizedFunction(UnivariateSeries([0, 1, *[(n + 1) * 0.3j + 1 / n for n in range(2, 21)]]))
        g = rotate(f, t1)
        assert max(abs(abs(g.a(n)) - abs(f.a(n))) for n in range(21)) <= 1e-14
        h = rotate(g, t2)
        k = rotate(f, t1 + t2)
        assert max(abs(h.a(n) - k.a(n)) for n in range(21)) <= 1e-12
