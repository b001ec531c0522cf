import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from free_cumulants.combinatorics import Permutation, SetPartition, all_permutations, gamma_of, integer_partitions
from free_cumulants.exceptions import NotCoCyclicError, SizeGuardError, SizeMismatchError
from free_cumulants.maps import (BipartiteMap, adjacency_matrix, count_maps_M, decompose_hypermap, enumerate_nc,
                                 enumerate_ns, enumerate_ns_of, genus, is_planar, ns_adjacency_census, ns_census,
                                 random_map, unicellular_count_closed)

CATALAN = [1, 2, 5, 14, 42, 132, 429, 1430]


def _map(black: str, white: str, n: int = None) -> BipartiteMap:
    return BipartiteMap(Permutation.parse(black, n), Permutation.parse(white, n))


def _first_return(white: Permutation, blocks) -> Permutation:
    # white restricted to each block, in the cyclic order it induces
    image = list(range(white.n))
    for block in blocks:
        members = set(block)
        for a in block:
            b = white.image[a]
            while b not in members:
                b = white.image[b]
            image[a] = b
    return Permutation(tuple(image))


class TestGenus(unittest.TestCase):
    def test_small_maps(self):
        self.assertEqual(genus(Permutation.parse("(1 2)"), Permutation.parse("(1 2)")), 0)
        self.assertEqual(genus(Permutation.parse("(1 2 3)"), Permutation.parse("(1 2 3)")), 1)

        empty = BipartiteMap(Permutation.identity(2), Permutation.identity(2))
        self.assertEqual(empty.genus(), 0)
        self.assertEqual(empty.num_components(), 2)
        self.assertFalse(empty.is_connected())

        planar = _map("(1 2)(3 4)", "(1 2 3 4)")
        self.assertEqual(planar.genus(), 0)
        self.assertTrue(is_planar(planar.sigma1, planar.sigma2))
        self.assertEqual(planar.faces(), SetPartition.parse("{1|2,4|3}"))
        self.assertEqual(_map("(1 3)(2 4)", "(1 2 3 4)").genus(), 1)

        with self.assertRaises(SizeMismatchError):
            genus(Permutation.identity(2), Permutation.identity(3))
        with self.assertRaises(SizeMismatchError):
            BipartiteMap(Permutation.identity(2), Permutation.identity(3))

    @given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2 ** 32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_random_maps(self, n, seed):
        m = random_map(n, np.random.default_rng(seed))
        g = m.genus()
        self.assertGreaterEqual(g, 0)
        # the dual map swaps white vertices and faces
        dual = m.sigma1.inverse() * m.sigma2.inverse()
        self.assertEqual(genus(m.sigma1, dual), g)
        self.assertEqual(len(m.components()), m.num_components())


class TestSplitting(unittest.TestCase):
    def test_split(self):
        m = _map("", "(1 2)", 2)
        split = m.split_white_vertex(0, 1)
        self.assertTrue(split.sigma2.is_identity())
        self.assertEqual(m.num_components(), 1)
        self.assertEqual(split.num_components(), 2)

        m = _map("(1 2)(3 4)", "(1 2 3 4)")
        split = m.split_white_vertex(0, 2)
        self.assertEqual(split.sigma2, Permutation.parse("(1 2)(3 4)"))
        self.assertEqual(split.num_components(), 2)

    def test_split_errors(self):
        m = _map("(1 2)(3 4)", "(1 2)(3 4)")
        with self.assertRaises(NotCoCyclicError):
            m.split_white_vertex(0, 2)
        with self.assertRaises(NotCoCyclicError):
            m.split_white_vertex(1, 1)

    def test_white_cut_vertex(self):
        leaves = _map("", "(1 2)", 2)
        self.assertTrue(leaves.is_white_cut_vertex((0, 1)))
        doubled = _map("(1 2)", "(1 2)")
        self.assertFalse(doubled.is_white_cut_vertex((0, 1)))
        self.assertFalse(doubled.has_white_cut_vertex())

        single = _map("(1 2)", "", 2)
        self.assertFalse(single.is_white_cut_vertex((0,)))
        self.assertTrue(_map("(1 2)(3 4)", "(1 2 3 4)").has_white_cut_vertex())

    def test_decompose(self):
        self.assertEqual(_map("", "(1 2)", 2).decompose(), SetPartition.finest(2))
        self.assertEqual(_map("(1 2)(3 4)", "(1 2 3 4)").decompose(), SetPartition.parse("{1,2|3,4}"))
        self.assertEqual(_map("(1 2 3)", "", 3).decompose(), SetPartition.coarsest(3))

    def test_decompose_refines_components(self):
        m = _map("(1 3)(2 5 6)(4)", "(1 3 5 4 2)(6)")
        parts = m.decompose()
        self.assertEqual(parts, SetPartition.parse("{1,3|2,5,6|4}"))
        self.assertLessEqual(m.sigma1.orbit_partition(), parts)
        self.assertLessEqual(parts, m.components())
        self.assertGreater(len(parts), 1)

    @given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=2 ** 32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_split_order_is_immaterial(self, n, seed):
        m = random_map(n, np.random.default_rng(seed))
        first = m.decompose()
        for shift in range(1, 11):
            self.assertEqual(decompose_hypermap(m, np.random.default_rng(seed + shift)), first)
        self.assertLessEqual(m.sigma1.orbit_partition(), first)
        self.assertLessEqual(first, m.components())

    def test_splits_add_one_face_each(self):
        for n in range(1, 7):
            for lam in integer_partitions(n):
                white = gamma_of(lam.parts)
                for nu in all_permutations(n):
                    if not is_planar(nu, white):
                        continue
                    before = BipartiteMap(nu, white)
                    after = BipartiteMap(nu, _first_return(white, before.decompose().blocks))
                    self.assertEqual(after.genus(), 0)
                    self.assertFalse(after.has_white_cut_vertex())
                    splits = after.num_components() - before.num_components()
                    self.assertEqual(len(after.faces()), len(before.faces()) + splits, str(before))


class TestEnumeration(unittest.TestCase):
    def test_unicellular_closed(self):
        self.assertEqual(unicellular_count_closed(3, {1: 1, 2: 1}), 3)
        self.assertEqual(unicellular_count_closed(3, {3: 1}), 1)
        self.assertEqual(unicellular_count_closed(1, {1: 1}), 1)
        with self.assertRaises(ValueError):
            unicellular_count_closed(3, {2: 1})

    def test_count_maps_unicellular(self):
        for n in range(1, 9):
            total = 0
            for black in integer_partitions(n):
                count = count_maps_M([n], black)
                self.assertEqual(count, unicellular_count_closed(n, black.multiplicities))
                total += count
            self.assertEqual(total, CATALAN[n - 1])

    def test_count_maps_guard(self):
        with self.assertRaises(ValueError):
            count_maps_M([3, 2], [2, 2])
        with self.assertRaises(SizeGuardError):
            count_maps_M([10], [10])

    def test_enumerate_nc(self):
        self.assertEqual(len(enumerate_nc([3])), 5)
        self.assertEqual(len(enumerate_nc([2, 2])), 4)
        for n in range(1, 9):
            self.assertEqual(len(enumerate_nc([n])), CATALAN[n - 1])
        gamma = gamma_of([2, 3])
        for tau in enumerate_nc([2, 3]):
            for block in gamma.cycles:
                self.assertEqual(genus(tau.restrict(block), gamma.restrict(block).inverse()), 0)
            self.assertLessEqual(tau.orbit_partition(), gamma.orbit_partition())

    def test_enumerate_ns(self):
        self.assertEqual(enumerate_ns([4]), (gamma_of([4]).inverse(),))
        self.assertEqual(enumerate_ns([1, 1]), (Permutation.parse("(1 2)"),))
        self.assertEqual(len(enumerate_ns([1, 1, 1])), 2)
        white = gamma_of([2, 1])
        for nu in enumerate_ns_of(white):
            m = BipartiteMap(nu, white)
            self.assertEqual(m.genus(), 0)
            self.assertTrue(m.is_connected())
            self.assertFalse(m.has_white_cut_vertex())
        with self.assertRaises(SizeGuardError):
            enumerate_ns([5, 4])

    def test_enumerate_ns_matches_filter(self):
        for n in range(1, 7):
            coarsest = SetPartition.coarsest(n)
            for lam in integer_partitions(n):
                white = gamma_of(lam.parts)
                found = {nu for nu in all_permutations(n)
                         if is_planar(nu, white) and BipartiteMap(nu, white).decompose() == coarsest}
                self.assertEqual(set(enumerate_ns(lam.parts)), found, str(lam))

    def test_census(self):
        self.assertEqual(ns_adjacency_census([1, 1], 1), {((1,), (1,)): 1})
        self.assertEqual(ns_adjacency_census([2, 2], 1)[((2,), (2,))], 4)

        census = ns_census([1, 1, 1])
        self.assertEqual(census['profile'], [1, 1, 1])
        self.assertEqual(census['total'], 2)
        self.assertEqual(census['by_black_count'], {'1': 2})

        census = ns_census([2, 2])
        self.assertEqual(sum(census['by_black_count'].values()), census['total'])
        self.assertEqual(sum(ns_adjacency_census([2, 2]).values()), census['total'])

    def test_adjacency_matrix(self):
        white = gamma_of([1, 1, 1])
        for nu in enumerate_ns([1, 1, 1]):
            self.assertEqual(adjacency_matrix(nu, white), ((1,), (1,), (1,)))


if __name__ == '__main__':
    unittest.main()
