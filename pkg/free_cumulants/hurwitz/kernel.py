"""
The leading-order kernel Gamma[nu, pi, tilde] relating cumulants of
different orders, as a partition sum and as a sum over labelled trees.
"""
import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..combinatorics import Permutation, SetPartition, enumerate_trees, excess_L
from ..exceptions import RefinementError
from .gamma import gamma_closed, partitions_above

logger = logging.getLogger(__name__)


def _check_chain(nu: Permutation, pi: SetPartition, tilde: SetPartition):
    if not (nu.orbit_partition() <= tilde and tilde <= pi):
        raise RefinementError(f"need cycles of {nu} <= {tilde} <= {pi}")


def big_gamma(nu: Permutation, pi: SetPartition, tilde: SetPartition) -> Fraction:
    """
    Sum over ``bar`` coarser than the cycles of ``nu`` with ``tilde v bar == pi``
    and zero excess of ``prod_{G in bar} gamma_closed(type of nu|_G)``.
    :param nu: permutation
    :param pi: upper partition
    :param tilde: partition between the cycles of ``nu`` and ``pi``
    :return: Fraction
    """
    _check_chain(nu, pi, tilde)
    base = nu.orbit_partition()
    total = Fraction(0)
    for bar in partitions_above(nu):
        if tilde.join(bar) != pi or excess_L(tilde, bar, base):
            continue
        term = Fraction(1)
        for block in bar.blocks:
            term *= gamma_closed(nu.restrict(block).cycle_type.parts)
        total += term
    return total


def _cycle_lengths(nu: Permutation, tilde: SetPartition) -> List[List[int]]:
    return [[len(c) for c in nu.restrict(block).cycles] for block in tilde.blocks]


def big_gamma_tree(nu: Permutation, tilde: SetPartition) -> Fraction:
    """
    Gamma[nu, 1_n, tilde] as a sum over reduced trees on the blocks of ``tilde``.

    Every black vertex I of the tree picks one cycle of ``nu`` in each block
    G in I, different black vertices picking different cycles; it contributes
    gamma_closed of the picked lengths, and each cycle left unpicked
    contributes gamma_closed of its own length.
    :param nu: permutation
    :param tilde: partition coarser than the cycles of ``nu``
    :return: Fraction
    """
    _check_chain(nu, SetPartition.coarsest(nu.n), tilde)
    lengths = _cycle_lengths(nu, tilde)
    total = Fraction(0)
    for tree in enumerate_trees(len(tilde.blocks), 'G'):
        total += _tree_weight(tree.hyperedges, lengths)
    return total


def _tree_weight(hyperedges: Sequence[Tuple[int, ...]], lengths: List[List[int]]) -> Fraction:
    # per block, the black vertices touching it pick distinct cycles
    touching: Dict[int, List[int]] = {g: [] for g in range(len(lengths))}
    for e, h in enumerate(hyperedges):
        for g in h:
            touching[g].append(e)
    per_block = []
    for g, edges in touching.items():
        per_block.append(list(itertools.permutations(range(len(lengths[g])), len(edges))))
    total = Fraction(0)
    for choice in itertools.product(*per_block):
        picked: Dict[int, List[int]] = {e: [] for e in range(len(hyperedges))}
        term = Fraction(1)
        for g, cycles in enumerate(choice):
            for e, c in zip(touching[g], cycles):
                picked[e].append(lengths[g][c])
            for c in set(range(len(lengths[g]))) - set(cycles):
                term *= gamma_closed([lengths[g][c]])
        for e in picked:
            term *= gamma_closed(picked[e])
        total += term
    return total
