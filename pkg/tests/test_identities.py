import json
import unittest

from free_cumulants.cumulants import free_moments_p1, moment_series
from free_cumulants.exceptions import SizeGuardError, UnknownIdentityError
from free_cumulants.generating import build_hatC_pi
from free_cumulants.identities import (C2C2_ORIGIN, C2C2_TAGS, DEFAULT_SEED, REGISTRY, Comparison, IdentityReport,
                                       YRing, c2c2_families, c2c2_family, dump_side, exit_status, first_mismatch,
                                       functional_moments, get_identity, identity_names, split_hat, verify,
                                       verify_all)
from free_cumulants.series import DifferenceFraction, KappaPoly, MultiSeries, default_variables


class TestRegistry(unittest.TestCase):
    def test_names(self):
        names = identity_names()
        self.assertEqual(names, sorted(names))
        for name in ('order1_of_order2', 'order1_of_order3', 'order2_of_order3', 'prop_p_minus_1',
                     'simplifications', 'fourth_c2c2', 'fourth_c2c2_a', 'fourth_c2c2_b', 'fourth_c2c2_c',
                     'conjecture_order1', 'hatC_defs', 'lagrange',
                     'second_order_functional', 'c2dd', 'functional'):
            self.assertIn(name, REGISTRY)
        self.assertTrue(get_identity('conjecture_order1').conjecture)
        self.assertEqual(get_identity('functional').orders, (2, 3))
        with self.assertRaises(UnknownIdentityError):
            get_identity('riemann')

    def test_resolution(self):
        report = verify('c2dd', depth=4, seed=3)
        self.assertEqual(report.mode, 'specialized')
        self.assertEqual(report.seed, 3)
        self.assertEqual(verify('c2dd', depth=4, mode='specialized').seed, DEFAULT_SEED)
        self.assertIsNone(verify('c2dd', depth=4, mode='symbolic', seed=3).seed)
        self.assertEqual(verify('c2dd').depth, get_identity('c2dd').default_depth)

    def test_guards(self):
        with self.assertRaises(SizeGuardError):
            verify('lagrange', depth=9)
        with self.assertRaises(SizeGuardError):
            verify('functional', depth=8)
        with self.assertRaises(ValueError):
            verify('functional', depth=3, p=5)
        with self.assertRaises(ValueError):
            verify('c2dd', depth=3, mode='numeric')
        with self.assertRaises(UnknownIdentityError):
            verify('riemann')


class TestReports(unittest.TestCase):
    def _report(self, verdict, conjecture=False):
        return IdentityReport('x', 4, 'symbolic', None, verdict, 3, conjecture)

    def test_exit_status(self):
        failure = {'monomial': 'M_2 X1*X2', 'lhs': 'k[2]', 'rhs': '0'}
        self.assertEqual(exit_status([]), 0)
        self.assertEqual(exit_status([self._report('pass')]), 0)
        self.assertEqual(exit_status([self._report('pass'), self._report(failure, True)]), 2)
        self.assertEqual(exit_status([self._report(failure), self._report(failure, True)]), 1)

    def test_text_and_json(self):
        failure = {'monomial': 'M_2 X1*X2', 'lhs': 'k[2]', 'rhs': '0'}
        failed = self._report(failure)
        self.assertFalse(failed.passed)
        self.assertIn('FAIL', str(failed))
        self.assertIn('k[2] != 0', str(failed))
        self.assertIn('conjecture holds to D=4', str(self._report('pass', True)))

        data = json.loads(json.dumps(self._report('pass').to_json()))
        self.assertEqual(data, {'name': 'x', 'depth': 4, 'mode': 'symbolic', 'verdict': 'pass', 'millis': 3})
        self.assertTrue(self._report(failure, True).to_json()['conjecture'])

    def test_first_mismatch(self):
        self.assertIsNone(first_mismatch(Comparison('same', KappaPoly.kappa(2), KappaPoly.kappa(2))))
        found = first_mismatch(Comparison('poly', KappaPoly.kappa(2), 0))
        self.assertEqual(found, {'monomial': 'poly', 'lhs': 'k[2]', 'rhs': '0'})

        a = MultiSeries.variable(('Y1',), 3, 0)
        self.assertIsNone(first_mismatch(Comparison('series', a, a)))
        self.assertIsNotNone(first_mismatch(Comparison('series', a, a * 2)))


class TestIdentities(unittest.TestCase):
    def assertHolds(self, name, **kwargs):
        report = verify(name, **kwargs)
        self.assertTrue(report.passed, str(report))
        self.assertTrue(report.checked)
        return report

    def test_univariate(self):
        self.assertHolds('c2dd', depth=6)
        self.assertHolds('lagrange', depth=6)
        self.assertHolds('order1_of_order2', depth=5)

    def test_fused_series(self):
        report = self.assertHolds('hatC_defs', depth=5)
        self.assertEqual(len(report.checked), 6)

    def test_order_three(self):
        self.assertHolds('order1_of_order3', depth=4)
        self.assertHolds('order2_of_order3', depth=4)

    def test_pair_cancellation(self):
        self.assertHolds('prop_p_minus_1', depth=4, seed=5, p=4)
        report = self.assertHolds('prop_p_minus_1', depth=6, seed=3, p=5)
        self.assertEqual(len(report.checked), 10)

    def test_simplifications(self):
        self.assertHolds('simplifications', depth=4, p=3)

    def test_fourth_order_families(self):
        for name in ('fourth_c2c2_a', 'fourth_c2c2_b', 'fourth_c2c2_c'):
            report = self.assertHolds(name, depth=5, seed=3)
            self.assertEqual(len(report.checked), 1)
        self.assertEqual(verify('fourth_c2c2_c', depth=4).checked, ['C-ring_2{1,4} C_2{1,2} C_2{2,3}'])

        report = self.assertHolds('fourth_c2c2', depth=4, seed=3)
        self.assertEqual(report.checked[-1], 'C_2 C_2 families')
        self.assertEqual(len(report.checked), 1 + 48 + 1)

    def test_specialized_verdicts_match_symbolic(self):
        for name in identity_names():
            symbolic = verify(name, depth=3, mode='symbolic')
            for seed in (1, 2, 3):
                specialized = verify(name, depth=3, seed=seed)
                self.assertEqual(specialized.passed, symbolic.passed, f"{name} seed={seed}")

    def test_second_order_functional(self):
        self.assertHolds('second_order_functional', depth=4)
        self.assertHolds('second_order_functional', depth=5, seed=1)

    def test_functional(self):
        self.assertHolds('functional', depth=4, p=2)
        self.assertHolds('functional', depth=4, p=3, seed=9)

    def test_conjecture_flag(self):
        for p in (3, 4):
            report = self.assertHolds('conjecture_order1', depth=4, p=p)
            self.assertTrue(report.conjecture)
            self.assertIn('conjecture holds to D=4', str(report))
            self.assertEqual(exit_status([report]), 0)

    def test_dump_series(self):
        report = verify('c2dd', depth=3, dump=True)
        self.assertEqual([entry['label'] for entry in report.series], report.checked)
        self.assertTrue(report.series[0]['lhs'].startswith('# variables: Y1; depth: '))
        self.assertEqual(report.to_json()['series'], report.series)
        self.assertNotIn('series', verify('c2dd', depth=3).to_json())

        self.assertEqual(dump_side(KappaPoly.kappa(2)), 'k[2]\n')
        pole = DifferenceFraction.double_pole(default_variables(2), 3, 0, 1)
        self.assertTrue(dump_side(pole).startswith('# denominator: (Y1-Y2)^2\n# variables: Y1,Y2; depth: 5'))

    def test_verify_all_subset(self):
        reports = verify_all(depth=4, names=['lagrange', 'c2dd'])
        self.assertEqual([r.name for r in reports], ['c2dd', 'lagrange'])
        self.assertEqual(exit_status(reports), 0)


class TestFunctionalMoments(unittest.TestCase):
    def test_first_order(self):
        m1 = functional_moments(1, 5)
        self.assertEqual(m1.coefficient((0,)), 1)
        for n in range(1, 6):
            self.assertEqual(m1.coefficient((n,)), free_moments_p1(n))

    def test_second_order_routes(self):
        h = functional_moments(2, 4, 'H')
        pole = functional_moments(2, 4, 'pole')
        self.assertEqual(h.first_difference(pole), None)
        self.assertEqual(h.first_difference(moment_series(2, 4)), None)

    def test_errors(self):
        with self.assertRaises(ValueError):
            functional_moments(2, 4, 'direct')
        with self.assertRaises(SizeGuardError):
            functional_moments(5, 3)

    def test_ring(self):
        ring = YRing(2, 4)
        one = ring.one()
        self.assertEqual(one.coefficient((0, 0)), 1)
        self.assertEqual(ring.falling(ring.c1[0], 0, 0), ring.c1[0])
        self.assertEqual(ring.double_pole(0, 1).poles, {(0, 1): 2})

    def test_split_hat(self):
        ring = YRing(4, 3)
        parts = split_hat(ring, 0, 3, 1)
        self.assertEqual(sorted(parts), [(0, 1), (1, 3)])
        hat = build_hatC_pi(((0, 3), (1,)), 4, 3, 'closed')
        self.assertIsNone(first_mismatch(Comparison('hat', parts[(0, 1)] + parts[(1, 3)], hat)))

    def test_c2c2_family_keys(self):
        families = c2c2_families(YRing(4, 4, 3))
        self.assertEqual(len(families), 48)
        for tags in C2C2_TAGS.values():
            self.assertIn(c2c2_family(C2C2_ORIGIN, *tags), families)
        self.assertEqual(c2c2_family((3, 0), (2, 3), (1, 0)), ((0, 3), ((0, 1), (2, 3))))
        with self.assertRaises(ValueError):
            c2c2_families(YRing(3, 3))


if __name__ == '__main__':
    unittest.main()
