import unittest

from free_cumulants.exceptions import InvalidTreeError, RouteDisagreementError, SizeGuardError
from free_cumulants.generating import (BAR_ROUTES, TILDE_C2_ROUTES, TILDE_C3_ROUTES, bar_kappa, build_barC, build_C,
                                       build_H, build_hatC, build_hatC_pi, build_tildeC, build_tildeC2,
                                       build_tildeC3, c2_ring, compare_routes, correction_shapes, double_pole_kernel,
                                       embed, exponent_vectors, h_coefficient, h_summands, ns_kappa,
                                       pair_block_shape, shape_kind, theta_all, tilde_kappa)
from free_cumulants.series import KappaPoly, MultiSeries, kappa_value


def k(text: str) -> KappaPoly:
    return KappaPoly.parse(text)


class TestCumulantSeries(unittest.TestCase):
    def test_build_C(self):
        c1 = build_C(1, 4)
        self.assertEqual(c1.coefficient((0,)), 1)
        self.assertEqual(c1.coefficient((2,)), KappaPoly.kappa(2))
        self.assertEqual(build_C(2, 4).coefficient((1, 1)), KappaPoly.kappa(1, 1))
        self.assertEqual(build_C(2, 4).coefficient((2, 1)), KappaPoly.kappa(2, 1))
        self.assertTrue(build_C(3, 2).is_zero())
        self.assertEqual(build_C(1, 4, seed=3).coefficient((2,)), kappa_value((2,), 3))
        with self.assertRaises(ValueError):
            build_C(0, 3)

    def test_exponent_vectors(self):
        self.assertEqual(list(exponent_vectors(2, 3)), [(1, 1), (1, 2), (2, 1)])
        self.assertEqual(list(exponent_vectors(0, 2)), [()])
        self.assertEqual(len(list(exponent_vectors(3, 3))), 1)
        self.assertEqual(list(exponent_vectors(1, 2, low=0)), [(0,), (1,), (2,)])

    def test_embed(self):
        moved = embed(build_C(1, 3), 3, [2])
        self.assertEqual(moved.variables, ('Y1', 'Y2', 'Y3'))
        self.assertEqual(moved.coefficient((0, 0, 2)), KappaPoly.kappa(2))
        s = build_C(2, 3)
        self.assertEqual(theta_all(s, [0, 1]).coefficient((2, 1)), KappaPoly.kappa(2, 1) * 2)

    def test_compare_routes(self):
        a = build_C(1, 3)
        compare_routes('same', a, a)
        with self.assertRaises(RouteDisagreementError) as caught:
            compare_routes('shifted', a, a + MultiSeries.variable(('Y1',), 3, 0))
        self.assertEqual(caught.exception.monomial, (1,))
        self.assertEqual(caught.exception.what, 'shifted')


class TestFusedSeries(unittest.TestCase):
    def test_hat_coefficients(self):
        hat = build_hatC(2, 4)
        self.assertEqual(hat.coefficient((1, 1)), KappaPoly.kappa(2))
        self.assertEqual(hat.coefficient((2, 1)), KappaPoly.kappa(3))
        split = build_hatC_pi(((0,), (1, 2)), 3, 4)
        self.assertEqual(split.coefficient((1, 1, 1)), KappaPoly.kappa(1, 2))

    def test_hat_routes_agree(self):
        shapes = [
            (((0, 1),), 2),
            (((0, 1, 2),), 3),
            (((0,), (1, 2)), 3),
            (((0, 2), (1,)), 3),
            (((0, 1), (2, 3)), 4),
            (((1, 2),), 3),
        ]
        for blocks, p in shapes:
            compare_routes(str(blocks), build_hatC_pi(blocks, p, 5, 'closed'), build_hatC_pi(blocks, p, 5, 'sum'))
        compare_routes('specialized', build_hatC_pi(((0, 1, 2),), 3, 6, 'closed', 11),
                       build_hatC_pi(((0, 1, 2),), 3, 6, 'sum', 11))

    def test_unknown_route(self):
        with self.assertRaises(ValueError):
            build_hatC_pi(((0, 1),), 2, 4, 'fast')


class TestCorrectionCoefficients(unittest.TestCase):
    def test_tilde_kappa(self):
        self.assertEqual(tilde_kappa(1, 1), KappaPoly.kappa(2))
        self.assertEqual(tilde_kappa(2, 1), k("2*k[3]"))
        self.assertEqual(tilde_kappa(2, 2), k("4*k[4] + 2*k[2]^2"))
        with self.assertRaises(ValueError):
            tilde_kappa(0, 2)

    def test_ns_kappa(self):
        self.assertEqual(ns_kappa((1, 1)), KappaPoly.kappa(2))
        self.assertEqual(ns_kappa((1, 1, 1)), k("2*k[3]"))
        self.assertEqual(ns_kappa((1, 2)), ns_kappa((2, 1)))
        for m in range(1, 6):
            for n in range(1, 7 - m):
                self.assertEqual(tilde_kappa(m, n), ns_kappa((m, n)), f"({m}, {n})")

    def test_correction_shapes(self):
        self.assertEqual(correction_shapes(2), ((((0, 1),), ()),))
        self.assertEqual(len(correction_shapes(3)), 4)
        self.assertEqual(len(correction_shapes(4)), 20)

    def test_bar_kappa_single_block(self):
        self.assertEqual(bar_kappa((1, 1), ((0, 1),), ()), ns_kappa((1, 1)))

    def test_h_coefficient(self):
        self.assertEqual(h_coefficient((1, 1)), k("k[1,1] + k[2]"))
        self.assertEqual(h_coefficient((2, 1)), h_coefficient((1, 2)))


class TestOneBlockCorrections(unittest.TestCase):
    def test_tildeC2_values(self):
        t = build_tildeC2(5)
        self.assertEqual(t.coefficient((1, 1)), KappaPoly.kappa(2))
        self.assertEqual(t.coefficient((2, 1)), k("2*k[3]"))
        self.assertEqual(t.coefficient((2, 2)), k("4*k[4] + 2*k[2]^2"))

    def test_tildeC2_routes_agree(self):
        reference = build_tildeC2(6, 'log')
        for route in TILDE_C2_ROUTES[1:]:
            compare_routes(route, reference, build_tildeC2(6, route))

    def test_tildeC2_specialized(self):
        for route in TILDE_C2_ROUTES:
            compare_routes(route, build_tildeC2(7, 'closed', 5), build_tildeC2(7, route, 5))

    def test_tildeC3_routes_agree(self):
        reference = build_tildeC3(6, 'gen')
        self.assertEqual(reference.coefficient((1, 1, 1)), k("2*k[3]"))
        for route in TILDE_C3_ROUTES[1:]:
            compare_routes(route, reference, build_tildeC3(6, route))

    def test_tildeC_dispatch(self):
        self.assertEqual(build_tildeC(1, 4), build_C(1, 4))
        self.assertEqual(build_tildeC(2, 4), build_tildeC2(4))
        four = build_tildeC(4, 5)
        self.assertEqual(four.coefficient((1, 1, 1, 1)), ns_kappa((1, 1, 1, 1)))

    def test_depth_guards(self):
        with self.assertRaises(SizeGuardError):
            build_tildeC2(9)
        build_tildeC2(9, 'closed', 1)
        with self.assertRaises(SizeGuardError):
            build_tildeC2(11, 'closed', 1)
        with self.assertRaises(ValueError):
            build_tildeC2(4, 'nope')
        with self.assertRaises(ValueError):
            build_tildeC3(4, 'nope')

    def test_double_pole(self):
        kernel = double_pole_kernel(4)
        self.assertEqual(kernel.variables, ('Y1', 'Y2'))
        self.assertEqual(kernel.poles, {(0, 1): 2})
        ring = c2_ring(4)
        self.assertEqual(ring.poles, {(0, 1): 2})
        self.assertEqual(ring.depth, 4)


class TestTreeCorrections(unittest.TestCase):
    def test_shapes(self):
        blocks, tree = pair_block_shape(3, 0, 2)
        self.assertEqual(blocks, ((0, 2), (1,)))
        self.assertEqual(tree, ((0, 1),))
        self.assertEqual(shape_kind(blocks, tree), 'bar[2+1|2]')
        self.assertEqual(shape_kind(((0, 1),), ()), 'tilde')

    def test_invalid_trees(self):
        with self.assertRaises(InvalidTreeError):
            build_barC(((0, 1), (2,)), (), 3, 4)
        with self.assertRaises(InvalidTreeError):
            build_barC(((0, 1, 2),), ((0,),), 3, 4)
        with self.assertRaises(InvalidTreeError):
            build_barC(((0, 1), (2,)), ((0,), (1,)), 3, 4)
        with self.assertRaises(ValueError):
            build_barC(((0, 1), (2,)), ((0, 1),), 3, 4, 'magic')

    def test_singleton_with_two_neighbours_vanishes(self):
        bar = build_barC(((0,), (1, 2), (3, 4)), ((0, 1), (0, 2)), 5, 6)
        self.assertTrue(bar.is_zero())

    def test_single_block_is_one_block_correction(self):
        self.assertEqual(build_barC(((0, 1),), (), 2, 5), build_tildeC2(5))

    def test_routes_agree(self):
        shapes = [
            (((0, 1), (2,)), ((0, 1),), 3),
            (((0,), (1, 2)), ((0, 1),), 3),
            (((0, 1), (2, 3)), ((0, 1),), 4),
            (((0, 1), (2,), (3,)), ((0, 1, 2),), 4),
            (((0, 1), (2,), (3,)), ((0, 1), (0, 2)), 4),
        ]
        for blocks, tree, p in shapes:
            closed = build_barC(blocks, tree, p, 6, 'closed')
            compare_routes(f"{blocks} {tree} generating", closed, build_barC(blocks, tree, p, 6, 'generating'))
            compare_routes(f"{blocks} {tree} coefficients", closed, build_barC(blocks, tree, p, 6, 'coefficients'))

    def test_three_vertex_block(self):
        blocks, tree = ((0, 1, 2), (3,)), ((0, 1),)
        compare_routes('3+1', build_barC(blocks, tree, 4, 6, 'generating'),
                       build_barC(blocks, tree, 4, 6, 'coefficients'))
        with self.assertRaises(ValueError):
            build_barC(blocks, tree, 4, 6, 'closed')
        with self.assertRaises(ValueError):
            build_barC(blocks, tree, 4, 6, 'generating', seed=3)

    def test_route_names(self):
        self.assertEqual(BAR_ROUTES, ('auto', 'closed', 'generating', 'coefficients'))


class TestVertexWeights(unittest.TestCase):
    def test_summand_counts(self):
        self.assertEqual(len(h_summands(2, 4)), 2)
        self.assertEqual(len(h_summands(3, 4)), 5)
        four = h_summands(4, 4)
        self.assertEqual(len(four), 21)
        self.assertEqual({s.kind for s in four},
                         {'C', 'tilde', 'bar[3+1|2]', 'bar[2+2|2]', 'bar[2+1+1|3]', 'bar[2+1+1|2,2]'})
        self.assertEqual(four[0].kind, 'C')
        with self.assertRaises(SizeGuardError):
            h_summands(5, 5)

    def test_H2(self):
        h2 = build_H(2, 5)
        self.assertEqual(h2.coefficient((1, 1)), k("k[1,1] + k[2]"))
        self.assertEqual(build_H(1, 4), build_C(1, 4))

    def test_H_matches_coefficients(self):
        for p in (2, 3):
            h = build_H(p, 5)
            for e in exponent_vectors(p, 5):
                self.assertEqual(h.coefficient(e), h_coefficient(e), str(e))

    def test_H_specialized(self):
        symbolic = build_H(3, 5)
        compare_routes('H3', symbolic.specialize(4, (1,)), build_H(3, 5, seed=4))


if __name__ == '__main__':
    unittest.main()
