"""
Cumulant coefficients of the vertex corrections.

The one-block correction of a profile mu sums, over the non-separable
hypermaps NS(mu), the product of first-order cumulants of their black
vertices.  Corrections on several blocks glue one hypermap per block along a
tree: every black vertex K of the tree picks one black vertex of each
hypermap it touches (distinct picks inside a block) and fuses them into a
cumulant of order |K|.
"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from ..combinatorics import enumerate_set_partitions, trees_on
from ..maps import enumerate_ns
from ..series import KappaPoly

logger = logging.getLogger(__name__)

Blocks = Tuple[Tuple[int, ...], ...]
Hyperedges = Tuple[Tuple[int, ...], ...]


def _compositions(m: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Ordered ways of writing ``m`` as ``r`` positive parts."""
    if r == 1:
        if m >= 1:
            yield (m,)
        return
    for first in range(1, m - r + 2):
        for rest in _compositions(m - first, r - 1):
            yield (first,) + rest


def tilde_kappa(m: int, n: int) -> KappaPoly:
    """
    Closed form of the two-vertex correction,
    ``sum_r sum_{i |= m, j |= n in r parts} i_1 * n * prod_s k[i_s + j_s]``.
    :param m: degree of the first white vertex
    :param n: degree of the second white vertex
    :return: KappaPoly in first-order cumulants
    """
    if m < 1 or n < 1:
        raise ValueError(f"degrees must be positive, got {(m, n)}")
    total = KappaPoly()
    for r in range(1, min(m, n) + 1):
        for i in _compositions(m, r):
            for j in _compositions(n, r):
                term = KappaPoly.constant(i[0] * n)
                for a, b in zip(i, j):
                    term = term * KappaPoly.kappa(a + b)
                total = total + term
    return total


@lru_cache(maxsize=None)
def _ns_kappa(mu: Tuple[int, ...]) -> KappaPoly:
    total = KappaPoly()
    for nu in enumerate_ns(mu):
        term = KappaPoly.constant(1)
        for cycle in nu.cycles:
            term = term * KappaPoly.kappa(len(cycle))
        total = total + term
    return total


def ns_kappa(mu: Sequence[int]) -> KappaPoly:
    """
    One-block correction ``sum_{nu in NS(mu)} prod_{black c} k[|c|]``.
    :param mu: white vertex degrees, all positive
    :return: KappaPoly, symmetric in ``mu``
    """
    return _ns_kappa(tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def _block_options(mu: Tuple[int, ...], picks: int) -> Tuple[Tuple[Tuple[int, ...], KappaPoly], ...]:
    # (ordered lengths of the picked black vertices, weight of the unpicked ones)
    grouped: Dict[Tuple[int, ...], KappaPoly] = {}
    for nu in enumerate_ns(mu):
        lengths = [len(c) for c in nu.cycles]
        for chosen in itertools.permutations(range(len(lengths)), picks):
            rest = KappaPoly.constant(1)
            for c in range(len(lengths)):
                if c not in chosen:
                    rest = rest * KappaPoly.kappa(lengths[c])
            key = tuple(lengths[c] for c in chosen)
            grouped[key] = grouped.get(key, KappaPoly()) + rest
    return tuple(grouped.items())


def bar_kappa(mu: Sequence[int], blocks: Blocks, hyperedges: Hyperedges) -> KappaPoly:
    """
    Coefficient of ``prod Y_i^mu_i`` in the correction for the partition
    ``blocks`` of the variables and the tree ``hyperedges`` on its blocks.
    :param mu: exponent of each variable, all positive
    :param blocks: partition of the variable positions
    :param hyperedges: black vertices of the tree, as tuples of block indices;
        empty for a single block
    :return: KappaPoly
    """
    touching: List[List[int]] = [[e for e, h in enumerate(hyperedges) if g in h] for g in range(len(blocks))]
    options = []
    for g, block in enumerate(blocks):
        profile = tuple(sorted((mu[i] for i in block), reverse=True))
        found = _block_options(profile, len(touching[g]))
        if not found:
            return KappaPoly()
        options.append(found)
    total = KappaPoly()
    for choice in itertools.product(*options):
        picked: List[List[int]] = [[] for _ in hyperedges]
        term = KappaPoly.constant(1)
        for g, (lengths, rest) in enumerate(choice):
            term = term * rest
            for e, length in zip(touching[g], lengths):
                picked[e].append(length)
        for lengths in picked:
            term = term * KappaPoly.kappa(*lengths)
        total = total + term
    return total


@lru_cache(maxsize=None)
def correction_shapes(p: int) -> Tuple[Tuple[Blocks, Hyperedges], ...]:
    """
    Every (partition, tree) pair of the corrections on ``p`` variables: all
    partitions except the finest, and the reduced trees on their blocks in
    which no single-variable block has more than one black neighbour.
    """
    out = []
    for pi in enumerate_set_partitions(p):
        if pi.is_finest():
            continue
        labels = list(range(len(pi.blocks)))
        for tree in trees_on(labels):
            degree = [sum(1 for h in tree if g in h) for g in labels]
            if any(len(pi.blocks[g]) == 1 and degree[g] > 1 for g in labels):
                continue
            out.append((pi.blocks, tree))
    return tuple(out)


@lru_cache(maxsize=None)
def _h_coefficient(mu: Tuple[int, ...]) -> KappaPoly:
    total = KappaPoly.kappa(*mu)
    for blocks, tree in correction_shapes(len(mu)):
        total = total + bar_kappa(mu, blocks, tree)
    return total


def h_coefficient(mu: Sequence[int]) -> KappaPoly:
    """
    Coefficient of ``prod Y_i^mu_i`` in the corrected vertex weight H: the
    cumulant itself plus every correction.
    :param mu: exponents, all positive
    :return: KappaPoly, symmetric in ``mu``
    """
    mu = tuple(sorted(mu, reverse=True))
    if not mu or mu[-1] < 1:
        raise ValueError(f"exponents must be positive, got {mu}")
    return _h_coefficient(mu)

