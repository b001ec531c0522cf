"""
Moments of all orders in terms of free cumulants of all orders, by three
combinatorial routes that must agree:

  - the brute-force sum over planar permutations and admissible partitions,
  - the tree formula, gluing planar connected maps along labelled trees,
  - the factorised sum over non-crossing permutations of each cycle, with
    the corrected block weights of :func:`h_coefficient`.

Every function returns a symbolic :class:`KappaPoly`; passing a
:class:`CumulantTable` substitutes its entries at the end.
"""
import itertools
import logging
import math
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..combinatorics import (Permutation, SetPartition, all_permutations, enumerate_set_partitions,
                             enumerate_trees, excess_L, gamma_of, integer_partitions)
from ..exceptions import check_size
from ..generating import h_coefficient
from ..maps import count_maps_M, enumerate_nc, genus, unicellular_count_closed
from ..series import KappaPoly
from .tables import CumulantTable, Profile, canonical_profile

logger = logging.getLogger(__name__)

MAX_FIRST_ORDER_N = 10
MAX_BRUTEFORCE_N = 7
MAX_TREE_N = 7
MAX_TREE_P = 4
MAX_FACTORIZED_N = 6
MAX_FACTORIZED_P = 3


def substitute_kappa(value: KappaPoly, kappa: Optional[CumulantTable]) -> KappaPoly:
    """Evaluate ``value`` at the entries of ``kappa``, or return it symbolic when no table is given."""
    return value if kappa is None else kappa.evaluate(value)


def _cycle_weight(tau: Permutation, block: Sequence[int]) -> KappaPoly:
    return KappaPoly.kappa(*tau.restrict(block).cycle_type.parts)


def free_moments_p1(n: int, kappa: Optional[CumulantTable] = None, limit: int = MAX_FIRST_ORDER_N) -> KappaPoly:
    """
    ``phi_1(b^n)``: sum over non-crossing partitions of products of first-order cumulants.
    :param n: moment order
    :param kappa: optional table of cumulant values
    :param limit: size guard on n
    :return: KappaPoly
    """
    check_size('n', n, limit)
    total = KappaPoly()
    for tau in enumerate_nc((n,)):
        term = KappaPoly.constant(1)
        for cycle in tau.cycles:
            term = term * KappaPoly.kappa(len(cycle))
        total = total + term
    return substitute_kappa(total, kappa)


def free_moments_p1_closed(n: int, kappa: Optional[CumulantTable] = None) -> KappaPoly:
    """
    The same moment grouped by block multiplicities,
    ``sum_k n!/((n+1-sum k_a)! prod k_a!) prod k[a]^k_a``.
    """
    total = KappaPoly()
    for lam in integer_partitions(n):
        mult = lam.multiplicities
        term = KappaPoly.constant(unicellular_count_closed(n, mult))
        for a, k in mult.items():
            term = term * KappaPoly.kappa(a) ** k
        total = total + term
    return substitute_kappa(total, kappa)


@lru_cache(maxsize=None)
def _bruteforce(sigma: Permutation) -> KappaPoly:
    base = sigma.orbit_partition()
    n = sigma.n
    one = SetPartition.coarsest(n)
    total = KappaPoly()
    planar = 0
    for tau in all_permutations(n):
        if genus(sigma, tau.inverse()):
            continue
        planar += 1
        cycles = tau.orbit_partition()
        floor = base.join(cycles)
        for pi in enumerate_set_partitions(n, cycles):
            if pi.join(base) != one or excess_L(pi, floor, cycles):
                continue
            term = KappaPoly.constant(1)
            for block in pi.blocks:
                term = term * _cycle_weight(tau, block)
            total = total + term
    logger.debug("brute force %s: %d planar permutations", sigma, planar)
    return total


def higher_moments_bruteforce(profile: Sequence[int], kappa: Optional[CumulantTable] = None,
                              limit: int = MAX_BRUTEFORCE_N) -> KappaPoly:
    """
    ``phi_p(b^lambda_1, ..., b^lambda_p)`` as the sum over tau with
    g(gamma_lambda, tau^-1) = 0 and over pi >= Pi(tau) with
    pi v Pi(gamma_lambda) = 1_n and zero excess against Pi(gamma_lambda) v Pi(tau)
    of ``prod_{B in pi} k[cycle type of tau|_B]``.
    :param profile: lambda
    :param kappa: optional table of cumulant values
    :param limit: size guard on n
    :return: KappaPoly
    """
    profile = canonical_profile(profile)
    check_size('n', sum(profile), limit)
    return substitute_kappa(_bruteforce(gamma_of(profile)), kappa)


def moment_of_permutation(sigma: Permutation, kappa: Optional[CumulantTable] = None,
                          limit: int = MAX_BRUTEFORCE_N) -> KappaPoly:
    """phi(1_n, sigma) by the brute-force sum, for any sigma rather than gamma_lambda."""
    check_size('n', sigma.n, limit)
    return substitute_kappa(_bruteforce(sigma), kappa)


def bounded_compositions(d: int, total: int) -> Iterator[Tuple[int, ...]]:
    """``d`` positive integers with sum at most ``total``."""
    if d == 0:
        yield ()
        return
    for first in range(1, total - (d - 1) + 1):
        for rest in bounded_compositions(d - 1, total - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _vertex_options(white: Tuple[int, ...], d: int) -> Tuple[Tuple[Tuple[int, ...], KappaPoly], ...]:
    # (black degrees attached to the d tree edges, weight of the free black vertices)
    size = sum(white)
    out = []
    for js in bounded_compositions(d, size):
        rest = size - sum(js)
        frees = [()] if rest == 0 else [lam.parts for lam in integer_partitions(rest)]
        weight = KappaPoly()
        for free in frees:
            count = count_maps_M(white, sorted(js + free, reverse=True))
            if not count:
                continue
            mult: Dict[int, int] = {}
            for a in free:
                mult[a] = mult.get(a, 0) + 1
            attached: Dict[int, int] = {}
            for a in js:
                attached[a] = attached.get(a, 0) + 1
            term = KappaPoly.constant(count)
            for a, q in attached.items():
                k = mult.get(a, 0)
                term = term * (math.factorial(k + q) // math.factorial(k))
            for a, k in mult.items():
                term = term * KappaPoly.kappa(a) ** k
            weight = weight + term
        if weight:
            out.append((js, weight))
    return tuple(out)


@lru_cache(maxsize=None)
def _treeformula(profile: Profile) -> KappaPoly:
    p = len(profile)
    total = KappaPoly()
    for grouping in enumerate_set_partitions(p):
        whites = [tuple(profile[r] for r in block) for block in grouping.blocks]
        for tree in enumerate_trees(len(whites), 'G'):
            incident = [[e for e, h in enumerate(tree.hyperedges) if i in h] for i in range(len(whites))]
            options = [_vertex_options(w, len(edges)) for w, edges in zip(whites, incident)]
            for choice in itertools.product(*options):
                picked: List[List[int]] = [[] for _ in tree.hyperedges]
                term = KappaPoly.constant(1)
                for i, (js, weight) in enumerate(choice):
                    term = term * weight
                    for e, j in zip(incident[i], js):
                        picked[e].append(j)
                for js in picked:
                    term = term * KappaPoly.kappa(*js)
                total = total + term
    return total


def higher_moments_treeformula(profile: Sequence[int], kappa: Optional[CumulantTable] = None,
                               limit_n: int = MAX_TREE_N, limit_p: int = MAX_TREE_P) -> KappaPoly:
    """
    Moments by the tree formula.  The cycles of gamma_lambda are grouped by a
    set partition; each group carries a planar connected map whose black
    vertices are either free (weight k[a]) or attached to a black vertex of a
    reduced tree on the groups, which fuses its attached vertices into one
    higher-order cumulant.
    :param profile: lambda
    :param kappa: optional table of cumulant values
    :param limit_n: size guard on n
    :param limit_p: size guard on p
    :return: KappaPoly
    """
    profile = canonical_profile(profile)
    check_size('n', sum(profile), limit_n)
    check_size('p', len(profile), limit_p)
    return substitute_kappa(_treeformula(profile), kappa)


@lru_cache(maxsize=None)
def _factorized(profile: Profile) -> KappaPoly:
    gamma = gamma_of(profile)
    base = gamma.orbit_partition()
    n = gamma.n
    one = SetPartition.coarsest(n)
    total = KappaPoly()
    for tau in enumerate_nc(profile):
        cycles = tau.orbit_partition()
        for pi in enumerate_set_partitions(n, cycles):
            if pi.join(base) != one or excess_L(pi, base, cycles):
                continue
            term = KappaPoly.constant(1)
            for block in pi.blocks:
                term = term * h_coefficient(tau.restrict(block).cycle_type.parts)
            total = total + term
    return total


def moments_via_factorized(profile: Sequence[int], kappa: Optional[CumulantTable] = None,
                           limit_n: int = MAX_FACTORIZED_N, limit_p: int = MAX_FACTORIZED_P) -> KappaPoly:
    """
    Moments as a sum over tau in NC(lambda_1) x ... x NC(lambda_p) and over
    pi >= Pi(tau) with pi v Pi(gamma_lambda) = 1_n and zero excess against
    Pi(gamma_lambda); a block B weighs the corrected cumulant of the cycle
    sizes of tau|_B.
    :param profile: lambda
    :param kappa: optional table of cumulant values
    :param limit_n: size guard on n
    :param limit_p: size guard on p
    :return: KappaPoly
    """
    profile = canonical_profile(profile)
    check_size('n', sum(profile), limit_n)
    check_size('p', len(profile), limit_p)
    return substitute_kappa(_factorized(profile), kappa)
