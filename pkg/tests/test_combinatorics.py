import math
import unittest

from hypothesis import given, settings, strategies as st

from free_cumulants.combinatorics import (IntegerPartition, LabeledTree, Permutation, SetPartition, all_permutations,
                                         conjugacy_class, enumerate_set_partitions, enumerate_trees, excess_L,
                                         gamma_of, integer_partitions, mobius, trees_on)
from free_cumulants.exceptions import (InvalidTreeError, NotCoCyclicError, RefinementError, SizeGuardError,
                                       SizeMismatchError)

BELL = [1, 2, 5, 15, 52, 203, 877, 4140]


@st.composite
def permutation_pairs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    a = draw(st.permutations(list(range(n))))
    b = draw(st.permutations(list(range(n))))
    return Permutation(tuple(a)), Permutation(tuple(b))


class TestPermutation(unittest.TestCase):
    def test_compose(self):
        id3 = Permutation.identity(3)
        self.assertEqual(id3 * id3, id3)
        swap = Permutation.parse("(1 2)")
        self.assertTrue((swap * swap).is_identity())
        self.assertEqual(Permutation.parse("(1 2 3)") * Permutation.parse("(1 2)", 3), Permutation.parse("(1 3)", 3))

        with self.assertRaises(SizeMismatchError):
            Permutation.identity(2) * Permutation.identity(3)

    def test_cycle_notation(self):
        sigma = Permutation.parse("(1 3)(2 5 6)(4)")
        self.assertEqual(sigma.cycles, ((0, 2), (1, 4, 5), (3,)))
        self.assertEqual(str(sigma), "(1 3)(2 5 6)(4)")
        self.assertEqual(sigma.num_cycles, 3)
        self.assertEqual(sigma.length, 3)
        self.assertEqual(sigma.cycle_type.parts, (3, 2, 1))
        self.assertEqual(sigma.cycle_of(4), (1, 4, 5))
        self.assertEqual(Permutation.parse("()", 2), Permutation.identity(2))

        with self.assertRaises(ValueError):
            Permutation((0, 0, 1))
        with self.assertRaises(SizeMismatchError):
            Permutation.parse("(1 5)", 3)

    def test_gamma_of(self):
        self.assertEqual(gamma_of([1]), Permutation.identity(1))
        self.assertEqual(gamma_of([3]), Permutation.parse("(1 2 3)"))
        self.assertEqual(gamma_of([2, 2]), Permutation.parse("(1 2)(3 4)"))
        self.assertEqual(gamma_of([2, 1]).cycles, ((0, 1), (2,)))
        with self.assertRaises(ValueError):
            gamma_of([])

    def test_orbit_partition(self):
        self.assertEqual(Permutation.identity(3).orbit_partition(), SetPartition.finest(3))
        self.assertEqual(Permutation.parse("(1 2 3)").orbit_partition(), SetPartition.coarsest(3))
        self.assertEqual(Permutation.parse("(1 3)(2 5 6)(4)").orbit_partition(), SetPartition.parse("{1,3|2,5,6|4}"))

    def test_restrict(self):
        self.assertEqual(Permutation.identity(4).restrict([1, 2]), Permutation.identity(2))
        self.assertEqual(Permutation.parse("(1 2)(3 4)").restrict([2, 3]), Permutation.parse("(1 2)"))
        self.assertEqual(Permutation.parse("(1 2 3)(4 5)").restrict([0, 1, 2]), Permutation.parse("(1 2 3)"))
        with self.assertRaises(NotCoCyclicError):
            Permutation.parse("(1 2 3)(4 5)").restrict([0, 1])

    def test_all_permutations(self):
        for n in range(1, 6):
            self.assertEqual(len(set(all_permutations(n))), math.factorial(n))
        with self.assertRaises(SizeGuardError):
            next(all_permutations(10))

    def test_conjugacy_class(self):
        self.assertEqual(len(conjugacy_class([2, 1])), 3)
        self.assertEqual(len(conjugacy_class([2, 2])), 3)
        self.assertEqual(len(conjugacy_class([1, 3])), 8)
        for n in range(1, 7):
            total = 0
            for shape in integer_partitions(n):
                members = conjugacy_class(shape)
                self.assertTrue(all(m.cycle_type == shape for m in members))
                total += len(members)
            self.assertEqual(total, math.factorial(n))

    @given(permutation_pairs())
    @settings(max_examples=60, deadline=None)
    def test_group_laws(self, pair):
        sigma, tau = pair
        self.assertTrue((sigma * sigma.inverse()).is_identity())
        self.assertEqual((sigma * tau).inverse(), tau.inverse() * sigma.inverse())
        self.assertEqual((sigma * tau)(0), sigma(tau(0)))
        self.assertEqual(sigma.length, sigma.n - sigma.num_cycles)
        self.assertEqual(sigma.cycle_type.n, sigma.n)
        # conjugation preserves the cycle type
        self.assertEqual((tau * sigma * tau.inverse()).cycle_type, sigma.cycle_type)


class TestIntegerPartition(unittest.TestCase):
    def test_parse(self):
        alpha = IntegerPartition.parse("2+3+2")
        self.assertEqual(alpha.parts, (3, 2, 2))
        self.assertEqual(alpha.n, 7)
        self.assertEqual(alpha.multiplicities, {3: 1, 2: 2})
        self.assertEqual(str(alpha), "3+2+2")
        self.assertEqual(IntegerPartition.parse("3,2,2"), alpha)
        with self.assertRaises(ValueError):
            IntegerPartition.parse("")
        with self.assertRaises(ValueError):
            IntegerPartition.of([2, 0])

    def test_integer_partitions(self):
        counts = [len(integer_partitions(n)) for n in range(1, 9)]
        self.assertEqual(counts, [1, 2, 3, 5, 7, 11, 15, 22])
        four = integer_partitions(4)
        self.assertEqual(four[0].parts, (4,))
        self.assertEqual(four[-1].parts, (1, 1, 1, 1))


class TestSetPartition(unittest.TestCase):
    def test_parse(self):
        pi = SetPartition.parse("{1,3|2,5,6|4}")
        self.assertEqual(pi.n, 6)
        self.assertEqual(len(pi), 3)
        self.assertEqual(pi, SetPartition.parse("{1,3}{2,5,6}{4}"))
        self.assertEqual(pi.block_of(4), (1, 4, 5))
        self.assertEqual(pi, SetPartition.from_labels(pi.labels))
        with self.assertRaises(ValueError):
            SetPartition.from_blocks(3, [[0, 1]])

    def test_lattice(self):
        a = SetPartition.parse("{1,2|3|4}")
        b = SetPartition.parse("{1|2,3|4}")
        self.assertEqual(a | b, SetPartition.parse("{1,2,3|4}"))
        self.assertEqual(a.join(b), a | b)
        self.assertEqual(SetPartition.parse("{1,2|3,4}").meet(SetPartition.parse("{1,3|2,4}")), SetPartition.finest(4))
        self.assertTrue(a <= a | b)
        self.assertTrue(SetPartition.coarsest(4) >= b)
        self.assertFalse(a <= b)
        self.assertEqual(a.restrict_to([0, 1]), SetPartition.coarsest(2))
        with self.assertRaises(SizeMismatchError):
            a.join(SetPartition.finest(3))

    def test_mobius(self):
        self.assertEqual(mobius(SetPartition.finest(2), SetPartition.coarsest(2)), -1)
        self.assertEqual(mobius(SetPartition.finest(3), SetPartition.coarsest(3)), 2)
        self.assertEqual(mobius(SetPartition.finest(4), SetPartition.coarsest(4)), -6)
        self.assertEqual(mobius(SetPartition.finest(3), SetPartition.finest(3)), 1)
        with self.assertRaises(RefinementError):
            mobius(SetPartition.parse("{1,2|3|4}"), SetPartition.parse("{1|2,3|4}"))

        # sum over an interval vanishes
        for n in range(2, 6):
            total = sum(mobius(SetPartition.finest(n), pi) for pi in enumerate_set_partitions(n))
            self.assertEqual(total, 0)

    def test_excess(self):
        base = SetPartition.finest(4)
        self.assertEqual(excess_L(SetPartition.coarsest(4), SetPartition.coarsest(4), base), 3)
        base = SetPartition.finest(3)
        tilde = SetPartition.parse("{1,2|3}")
        self.assertEqual(excess_L(tilde, SetPartition.parse("{1|2,3}"), base), 0)
        self.assertEqual(excess_L(tilde, tilde, base), 1)
        with self.assertRaises(RefinementError):
            excess_L(tilde, base, SetPartition.coarsest(3))

    def test_enumerate(self):
        for n, bell in enumerate(BELL, start=1):
            partitions = enumerate_set_partitions(n)
            self.assertEqual(len(partitions), bell)
            self.assertEqual(len(set(partitions)), bell)
        self.assertEqual(enumerate_set_partitions(1), (SetPartition.finest(1),))

        floor = SetPartition.parse("{1,2|3}")
        self.assertEqual(set(enumerate_set_partitions(3, floor)), {floor, SetPartition.coarsest(3)})
        self.assertEqual(len(enumerate_set_partitions(4, SetPartition.parse("{1,2|3|4}"))), 5)

        with self.assertRaises(SizeMismatchError):
            enumerate_set_partitions(4, floor)
        with self.assertRaises(SizeGuardError):
            enumerate_set_partitions(13)


class TestTrees(unittest.TestCase):
    def test_labeled_tree(self):
        tree = LabeledTree(3, [(1, 2), (0, 1)])
        self.assertEqual(tree.hyperedges, ((0, 1), (1, 2)))
        self.assertEqual(tree.edge_degree(1), 2)
        self.assertEqual(tree.incident(0), ((0, 1),))
        self.assertTrue(tree.is_reduced())
        self.assertEqual(tree.automorphisms(), 1)
        self.assertEqual(str(tree), "{1,2} {2,3}")

        leafy = LabeledTree(2, [(0, 1)], (1, 0))
        self.assertFalse(leafy.is_reduced())
        self.assertEqual(leafy.degree(0), 2)

        with self.assertRaises(InvalidTreeError):
            LabeledTree(3, [(0, 1)])
        with self.assertRaises(InvalidTreeError):
            LabeledTree(3, [(0, 1), (0, 1, 2)])
        with self.assertRaises(InvalidTreeError):
            LabeledTree(2, [(0, 1)], (1,))

    def test_enumerate_reduced(self):
        self.assertEqual([len(enumerate_trees(p, 'G')) for p in range(1, 5)], [1, 1, 4, 29])
        self.assertEqual(enumerate_trees(1, 'G')[0].hyperedges, ())
        for tree in enumerate_trees(4, 'G'):
            self.assertTrue(tree.is_reduced())
            self.assertEqual(sum(len(h) - 1 for h in tree.hyperedges), 3)

    def test_enumerate_with_leaves(self):
        self.assertEqual(len(enumerate_trees(1, 'T')), 1)
        self.assertEqual(len(enumerate_trees(2, 'T')), 4)
        self.assertEqual(len(enumerate_trees(3, 'T')), 16)

        with self.assertRaises(ValueError):
            enumerate_trees(3, 'X')
        with self.assertRaises(SizeGuardError):
            enumerate_trees(7)

    def test_trees_on(self):
        self.assertEqual(list(trees_on(['a', 'b'])), [(('a', 'b'),)])
        self.assertEqual(len(list(trees_on('abc'))), 4)


if __name__ == '__main__':
    unittest.main()
