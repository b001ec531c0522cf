import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from free_cumulants.exceptions import DivisibilityError, NonUnitError, VariableMismatchError
from free_cumulants.series import (D_operator, DifferenceFraction, KappaPoly, MultiSeries, ONE, TensorState, ZERO,
                                   default_variables, dx_dy, dy_dx, first_order_moments, kappa_value,
                                   specialize_kappa, symbol, univariate_coefficients, x_of_y, y_of_x)

YY = ('Y1', 'Y2')


def k(text: str) -> KappaPoly:
    return KappaPoly.parse(text)


def series(text: str, depth: int = 4, variables=YY) -> MultiSeries:
    return MultiSeries.parse(text, variables, depth)


@st.composite
def small_series(draw, depth=4):
    exps = [(a, b) for a in range(depth + 1) for b in range(depth + 1 - a)]
    coefficients = draw(st.dictionaries(st.sampled_from(exps), st.integers(min_value=-5, max_value=5), max_size=8))
    return MultiSeries(YY, depth, coefficients)


class TestKappaPoly(unittest.TestCase):
    def test_symbols(self):
        self.assertEqual(symbol(1, 2), (2, 1))
        self.assertEqual(KappaPoly.kappa(2, 3), KappaPoly.kappa(3, 2))
        with self.assertRaises(ValueError):
            symbol(0)
        with self.assertRaises(ValueError):
            symbol()

    def test_parse_and_format(self):
        p = k("k[2,1] + 3*k[2]*k[1]")
        self.assertEqual(str(p), "3*k[1]*k[2] + k[2,1]")
        self.assertEqual(p.coefficient("k[1]*k[2]"), 3)
        self.assertEqual(k(str(p)), p)
        self.assertEqual(str(k("(1/2)*k[3] - k[1]^2")), "-k[1]^2 + (1/2)*k[3]")
        self.assertEqual(k("0"), ZERO)
        self.assertEqual(k("1"), ONE)
        with self.assertRaises(ValueError):
            k("k[2]*Z")

    def test_arithmetic(self):
        k1, k2 = KappaPoly.kappa(1), KappaPoly.kappa(2)
        self.assertEqual(k2 * k1, k("k[1]*k[2]"))
        self.assertEqual((k1 + 1) ** 2, k("k[1]^2 + 2*k[1] + 1"))
        self.assertEqual(k1 - k1, ZERO)
        self.assertFalse(k1 - k1)
        self.assertEqual(1 - k1, k("1 - k[1]"))
        self.assertEqual(k("2*k[3]") / 4, k("(1/2)*k[3]"))
        self.assertEqual(ONE * 3, 3)
        self.assertTrue(KappaPoly.constant(5).is_constant())
        self.assertEqual(len({k1 + k2, k2 + k1}), 1)

    def test_derivative(self):
        self.assertEqual(k("k[1]^2*k[2]").derivative(1), k("2*k[1]*k[2]"))
        self.assertEqual(k("k[1,1]*k[2]").derivative(1), ZERO)
        self.assertEqual(k("k[3]").derivative(3), ONE)

    def test_substitute(self):
        p = k("k[2]*k[1,1] + k[3]")
        out = p.substitute(lambda s: k("k[1]^2") if s == (2,) else None)
        self.assertEqual(out, k("k[1]^2*k[1,1] + k[3]"))

    def test_specialize(self):
        value = kappa_value((2,), 42)
        self.assertEqual(value, kappa_value((2,), 42))
        self.assertNotEqual(value, 0)
        self.assertTrue(1 <= abs(value.numerator) <= 9 and value.denominator <= 9)
        self.assertEqual(KappaPoly.kappa(2).specialize(42), value)

        partial = k("k[2]*k[1,1]").specialize(7, orders=[1])
        self.assertEqual(partial, KappaPoly.kappa(1, 1) * kappa_value((2,), 7))
        self.assertTrue(k("k[2]*k[1,1] + k[3]").specialize(7).is_constant())

    def test_content(self):
        parts = k("k[2]*k[1,1] + k[3] + k[2,1]*k[1,1]").content()
        self.assertEqual(set(parts), {(), (2,), (2, 2)})
        self.assertEqual(parts[()], KappaPoly.kappa(3))
        self.assertEqual(parts[(2, 2)], k("k[2,1]*k[1,1]"))
        self.assertEqual(set(k("k[1,1,1]*k[2,2]^2").content()), {(3, 2, 2)})


class TestMultiSeries(unittest.TestCase):
    def test_constructors(self):
        self.assertEqual(default_variables(3), ('Y1', 'Y2', 'Y3'))
        self.assertEqual(default_variables(2, 'X'), ('X1', 'X2'))
        s = MultiSeries.univariate(YY, 3, 1, [0, 1, 2, 3, 4])
        self.assertEqual(s.coefficient((0, 3)), 3)
        self.assertNotIn((0, 4), s.terms)
        self.assertTrue(MultiSeries.zero(YY, 3).is_zero())
        with self.assertRaises(ValueError):
            s.coefficient((0, 4))
        with self.assertRaises(VariableMismatchError):
            s.coefficient((1,))

    def test_text(self):
        s = series("k[2]*Y1*Y2 + (3/2)*k[2]*Y1^2*Y2 - Y2")
        self.assertEqual(s.coefficient((1, 1)), KappaPoly.kappa(2))
        self.assertEqual(s.coefficient((0, 1)), -1)
        self.assertEqual(MultiSeries.parse(s.dump()), s)
        self.assertEqual(s.dump().splitlines()[0], "# variables: Y1,Y2; depth: 4")
        with self.assertRaises(ValueError):
            MultiSeries.parse("Y1 + Y2")
        with self.assertRaises(ValueError):
            MultiSeries.parse("# depth 3\nY1")

    def test_truncation(self):
        y = MultiSeries.variable(('Y1',), 3, 0)
        self.assertTrue((y ** 3 * y).is_zero())
        self.assertEqual((y ** 3).coefficient((3,)), 1)
        with self.assertRaises(VariableMismatchError):
            y + MultiSeries.variable(('Y1',), 4, 0)

    def test_theta(self):
        self.assertEqual(series("Y1^2*Y2").theta(0), series("2*Y1^2*Y2"))
        self.assertTrue(series("Y2^3").theta(0).is_zero())

    def test_derivative_and_shift(self):
        d = series("Y1^3 + Y1*Y2", 3).derivative(0)
        self.assertEqual(d, series("3*Y1^2 + Y2", 2))
        up = series("Y1 + 1", 3).shift(1)
        self.assertEqual(up, series("Y1*Y2 + Y2", 4))

    def test_divided_difference(self):
        self.assertEqual(series("Y1^2 - Y2^2", 3).divide_difference(0, 1), series("Y1 + Y2", 2))
        self.assertTrue(series("Y1 - Y2 + Y2 - Y1", 3).divide_difference(0, 1).is_zero())
        with self.assertRaises(DivisibilityError):
            series("Y1 + Y2^2", 3).divide_difference(0, 1)
        with self.assertRaises(ValueError):
            series("Y1", 3).divide_difference(0, 0)

    def test_rename(self):
        s = series("Y1^2*Y2")
        self.assertEqual(s.swap(0, 1), series("Y1*Y2^2"))
        self.assertEqual(s.permute([1, 0]), s.swap(0, 1))
        diagonal = s.rename(('X',), [0, 0])
        self.assertEqual(diagonal, series("X^3", 4, ('X',)))
        embedded = s.rename(('Y1', 'Y2', 'Y3'), [0, 2])
        self.assertEqual(embedded.coefficient((2, 0, 1)), 1)

    def test_compose(self):
        s = series("Y1^2", 3, ('Y1',))
        same = s.compose_univariate(0, [0, 1, 0, 0])
        self.assertEqual(same.rename(('X1',), [0]), series("X1^2", 3, ('X1',)))
        geometric = s.compose_univariate(0, [0, 1, 1, 1])
        self.assertEqual(geometric, series("Y1^2 + 2*Y1^3", 3, ('Y1',)))
        with self.assertRaises(ValueError):
            s.compose_univariate(0, [0, 1, 0])
        with self.assertRaises(NonUnitError):
            s.compose_univariate(0, [1, 1, 0, 0])

    def test_unit_series(self):
        one = MultiSeries.constant(YY, 4, 1)
        self.assertEqual(one.unit_inverse(), one)
        f = series("1 - Y1")
        self.assertEqual(f.unit_inverse() * f, one)
        self.assertEqual(f.unit_inverse().coefficient((4, 0)), 1)
        with self.assertRaises(NonUnitError):
            series("k[1] + Y1").unit_inverse()

        log = series("Y1").log_one_minus()
        self.assertEqual(univariate_coefficients(log), [0, -1, Fraction(-1, 2), Fraction(-1, 3), Fraction(-1, 4)])
        with self.assertRaises(NonUnitError):
            series("1 + Y1").log_one_minus()

    def test_first_difference(self):
        a = series("Y1 + k[2]*Y1*Y2")
        b = series("Y1 + k[3]*Y1*Y2 + Y2^4")
        self.assertEqual(a.first_difference(b), ((1, 1), KappaPoly.kappa(2), KappaPoly.kappa(3)))
        self.assertTrue(a.agrees_with(a.truncate(2)))
        self.assertFalse(a.agrees_with(b))

    def test_coefficient_operators(self):
        s = series("k[1]^2*Y1 + k[2]*k[1,1]*Y2")
        self.assertEqual(s.kappa_derivative(1), series("2*k[1]*Y1"))
        self.assertEqual(s.first_order_indices(), [1, 2])
        self.assertEqual(set(s.content()), {(), (2,)})
        self.assertEqual(specialize_kappa(s, 3), s.specialize(3))
        self.assertEqual(s.specialize(3).coefficient((1, 0)), kappa_value((1,), 3) ** 2)

    @given(small_series(), small_series(), small_series())
    @settings(max_examples=40, deadline=None)
    def test_ring_laws(self, f, g, h):
        self.assertEqual(f * g, g * f)
        self.assertEqual(f * (g + h), f * g + f * h)
        self.assertEqual((f * g).theta(0), f.theta(0) * g + f * g.theta(0))
        self.assertEqual(f.swap(0, 1).swap(0, 1), f)

    @given(small_series())
    @settings(max_examples=40, deadline=None)
    def test_difference_quotient(self, f):
        self.assertEqual(f.times_difference(0, 1).divide_difference(0, 1), f)


class TestDifferenceFraction(unittest.TestCase):
    def test_double_pole(self):
        f = DifferenceFraction.double_pole(YY, 4, 0, 1)
        self.assertEqual(f.order, 2)
        self.assertEqual(f.depth, 4)
        self.assertEqual(f.numerator.depth, 6)
        # homogeneous of degree zero
        self.assertTrue((f.theta(0) + f.theta(1)).reduce().is_zero())

        square = series("Y1^2 - 2*Y1*Y2 + Y2^2")
        self.assertEqual((f * square).reduce(), series("Y1*Y2"))

        swapped = f.swap(0, 1)
        self.assertEqual(swapped.poles, f.poles)
        self.assertEqual(swapped.numerator, f.numerator)

    def test_simple_pole(self):
        numerator = series("Y1^2 - Y2^2", 3)
        self.assertEqual(DifferenceFraction.simple_pole(numerator, 0, 1).reduce(), series("Y1 + Y2", 2))
        self.assertEqual(DifferenceFraction.simple_pole(numerator, 1, 0).reduce(), series("-Y1 - Y2", 2))
        with self.assertRaises(DivisibilityError):
            DifferenceFraction.simple_pole(series("Y1", 3), 0, 1).reduce()

    def test_validation(self):
        with self.assertRaises(ValueError):
            DifferenceFraction(MultiSeries.constant(YY, 3, 1), {(0, 1): 1})
        with self.assertRaises(ValueError):
            DifferenceFraction(series("Y1", 3), {(1, 0): 1})
        with self.assertRaises(VariableMismatchError):
            DifferenceFraction(series("Y1", 3), {(0, 1): 1}, 3)

    def test_series_round_trip(self):
        s = series("k[2]*Y1*Y2 + Y1^3")
        fraction = DifferenceFraction.from_series(s)
        self.assertEqual(fraction.reduce(), s)
        self.assertEqual((fraction + s).reduce(), s * 2)
        self.assertEqual(set(fraction.content()), {()})

    def test_sum_of_poles(self):
        f = DifferenceFraction.double_pole(YY, 3, 0, 1)
        g = DifferenceFraction.simple_pole(series("Y1*Y2 - Y2^2", 4), 0, 1)
        # g = Y2, and f - f vanishes
        self.assertEqual(g.reduce(), series("Y2", 3))
        self.assertTrue((f - f).reduce().is_zero())
        self.assertEqual((f * g - g * f).reduce(), MultiSeries.zero(YY, 3))


class TestOperators(unittest.TestCase):
    def test_D_operator(self):
        k2 = MultiSeries.constant(YY, 3, KappaPoly.kappa(2))
        k3 = MultiSeries.constant(YY, 3, KappaPoly.kappa(3))
        one = MultiSeries.constant(YY, 3, 1)
        self.assertEqual(D_operator([k2, k3]).constant_term(), KappaPoly.kappa(2, 3))
        self.assertTrue(D_operator([one, k3]).is_zero())
        square = MultiSeries.constant(YY, 3, k("k[1]^2"))
        self.assertEqual(D_operator([square]), square * 2)
        with self.assertRaises(ValueError):
            D_operator([])
        with self.assertRaises(VariableMismatchError):
            D_operator([k2, MultiSeries.constant(YY, 4, 1)])

    def test_tensor_state(self):
        a = series("k[1]*Y1 + k[2]*Y1^2", 3)
        b = series("k[1]^2*Y2", 3)
        state = TensorState.of([a, b])
        self.assertEqual(state.width, 2)
        self.assertEqual(state.apply_D([0, 1]).product(), D_operator([a, b]))
        self.assertEqual(state.product(), a * b)
        with self.assertRaises(ValueError):
            state.apply_D([0])
        with self.assertRaises(ValueError):
            state.apply_D([0, 2])

    def test_first_order_change_of_variables(self):
        c1 = MultiSeries.univariate(('Y',), 3, 0, [1, k("k[1]"), k("k[2]"), k("k[3]")])
        m1 = first_order_moments(c1)
        self.assertEqual(univariate_coefficients(m1),
                         [1, k("k[1]"), k("k[2] + k[1]^2"), k("k[3] + 3*k[1]*k[2] + k[1]^3")])
        self.assertEqual(m1.variables, ('X',))

        # X(Y(X)) = X
        x = x_of_y(c1).rename(('X',), [0])
        y = univariate_coefficients(y_of_x(m1))
        self.assertEqual(x.compose_univariate(0, y), MultiSeries.variable(('X',), 4, 0))

        self.assertEqual(dx_dy(c1) * dy_dx(c1), MultiSeries.constant(('Y',), 3, 1))


if __name__ == '__main__':
    unittest.main()
