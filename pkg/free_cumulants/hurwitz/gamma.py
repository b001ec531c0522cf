"""
Monotone Hurwitz numbers, constellation counts and the coefficients
gamma_l(pi, nu) of the 1/N expansion of the Weingarten function.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from ..combinatorics import (IntegerPartition, Permutation, SetPartition, all_permutations,
                             enumerate_set_partitions, gamma_of)
from ..exceptions import RefinementError, check_size

logger = logging.getLogger(__name__)

MAX_HURWITZ_N = 6
MAX_HURWITZ_GENUS = 2
MAX_CONSTELLATION_N = 5
MAX_GAMMA_L_EXTRA = 4
# one-block sums run over a fixed set of (product, orbit) states, so they allow longer factorisations
MAX_ONE_BLOCK_EXTRA = 8


def gamma_closed(alpha: Iterable[int]) -> Fraction:
    """
    Genus-zero coefficient of the Weingarten function for cycle type ``alpha``.
    :param alpha: cycle type (nonempty)
    :return: (-1)^(k+n) (2n+k-3)!/(2n)! prod_p (2p)!/(p!(p-1)!), k = number of parts
    """
    alpha = IntegerPartition.of(alpha)
    n, k = alpha.n, len(alpha)
    if k == 0:
        raise ValueError("gamma_closed needs a nonempty cycle type")
    value = Fraction(math.factorial(2 * n + k - 3), math.factorial(2 * n))
    for p in alpha.parts:
        value *= Fraction(math.factorial(2 * p), math.factorial(p) * math.factorial(p - 1))
    return (-1) ** (k + n) * value


def minimal_length(nu: Permutation) -> int:
    """Fewest transpositions in a transitive factorisation of ``nu``: n - 2 + #nu."""
    return nu.n - 2 + nu.num_cycles


def _merge(labels: Tuple[int, ...], a: int, b: int) -> Tuple[int, ...]:
    la, lb = labels[a], labels[b]
    if la == lb:
        return labels
    low, high = min(la, lb), max(la, lb)
    return tuple(low if x == high else x for x in labels)


def monotone_hurwitz(alpha: Iterable[int], genus: int, limit: int = MAX_HURWITZ_N) -> int:
    """
    Transitive factorisations of the fixed permutation gamma_alpha into
    l = 2g + n - 2 + #alpha transpositions (p q), p < q, with weakly increasing q.
    :param alpha: cycle type
    :param genus: genus g
    :param limit: size guard on n
    :return: number of factorisations
    """
    alpha = IntegerPartition.of(alpha)
    check_size('n', alpha.n, limit)
    check_size('genus', genus, MAX_HURWITZ_GENUS)
    length = 2 * genus + alpha.n - 2 + len(alpha)
    if length < 0:
        return 0
    target = gamma_of(alpha.parts).image
    n = alpha.n

    @lru_cache(maxsize=None)
    def count(product: Tuple[int, ...], labels: Tuple[int, ...], last: int, left: int) -> int:
        if left == 0:
            return int(product == target and len(set(labels)) == 1)
        total = 0
        for q in range(max(last, 1), n):
            for p in range(q):
                # right multiplication by (p q)
                image = list(product)
                image[p], image[q] = product[q], product[p]
                total += count(tuple(image), _merge(labels, p, q), q, left - 1)
        return total

    return count(tuple(range(n)), tuple(range(n)), 1, length)


@lru_cache(maxsize=None)
def _block_preserving(pi: SetPartition) -> Tuple[Tuple[Permutation, int], ...]:
    out = []
    for rho in all_permutations(pi.n, MAX_CONSTELLATION_N):
        if rho.is_identity():
            continue
        if all(pi.labels[a] == pi.labels[rho(a)] for a in range(pi.n)):
            out.append((rho, rho.length))
    return tuple(out)


def constellation_count(pi: SetPartition, nu: Permutation, length: int, k: int,
                        limit: int = MAX_CONSTELLATION_N) -> int:
    """
    Number of k-tuples of non-identity permutations with product ``nu``,
    total length ``length`` and joint orbit partition ``pi``.
    :param pi: orbit partition, coarser than the cycles of ``nu``
    :param nu: product
    :param length: sum of the lengths n - #rho_i
    :param k: number of factors
    :param limit: size guard on n
    :return: nonnegative integer
    """
    if not nu.orbit_partition() <= pi:
        raise RefinementError(f"{pi} is not coarser than the cycles of {nu}")
    n = nu.n
    check_size('n', n, limit)
    check_size('length', length, n + MAX_GAMMA_L_EXTRA)
    if k > length:
        return 0
    if k == 0:
        return int(length == 0 and nu.is_identity() and pi.is_finest())
    factors = _block_preserving(pi)
    table: Dict[Tuple[Tuple[int, ...], Tuple[int, ...], int], int] = {
        (tuple(range(n)), tuple(range(n)), 0): 1}
    for _ in range(k):
        nxt: Dict = {}
        for (product, labels, used), ways in table.items():
            for rho, size in factors:
                if used + size > length:
                    continue
                image = tuple(product[j] for j in rho.image)
                merged = labels
                for cycle in rho.cycles:
                    for a in cycle[1:]:
                        merged = _merge(merged, cycle[0], a)
                key = (image, merged, used + size)
                nxt[key] = nxt.get(key, 0) + ways
        table = nxt
    target_labels = SetPartition.from_labels(pi.labels)
    total = 0
    for (product, labels, used), ways in table.items():
        if used == length and product == nu.image and SetPartition.from_labels(labels) == target_labels:
            total += ways
    return total


def gamma_l_direct(pi: SetPartition, nu: Permutation, length: int) -> Fraction:
    """Alternating constellation sum, sum_k (-1)^k M(pi, nu; length, k)."""
    return Fraction(sum((-1) ** k * constellation_count(pi, nu, length, k) for k in range(length + 1)))


@lru_cache(maxsize=None)
def _alternating_table(m: int, length: int) -> Dict[Tuple[int, ...], int]:
    # signed counts of transitive tuples of non-identity permutations, keyed by product
    factors = [(rho, rho.length) for rho in all_permutations(m, MAX_CONSTELLATION_N) if not rho.is_identity()]
    layers: List[Dict] = [{(tuple(range(m)), tuple(range(m))): 1}]
    for total in range(1, length + 1):
        layer: Dict = {}
        for size in range(1, total + 1):
            for (product, labels), ways in layers[total - size].items():
                for rho, rho_len in factors:
                    if rho_len != size:
                        continue
                    image = tuple(product[j] for j in rho.image)
                    merged = labels
                    for cycle in rho.cycles:
                        for a in cycle[1:]:
                            merged = _merge(merged, cycle[0], a)
                    key = (image, merged)
                    layer[key] = layer.get(key, 0) - ways
        layers.append(layer)
    out: Dict[Tuple[int, ...], int] = {}
    for (product, labels), ways in layers[length].items():
        if len(set(labels)) == 1:
            out[product] = out.get(product, 0) + ways
    return out


@lru_cache(maxsize=None)
def gamma_one_block(cycle_type: Tuple[int, ...], length: int) -> Fraction:
    """
    gamma_length(1_m, nu) for any nu of the given cycle type.
    :param cycle_type: cycle type of nu (sorted, decreasing)
    :param length: total length l
    :return: Fraction
    """
    nu = gamma_of(cycle_type)
    m = nu.n
    lowest = minimal_length(nu)
    if length < lowest or (length - lowest) % 2:
        return Fraction(0)
    if length == lowest:
        return gamma_closed(cycle_type)
    check_size('n', m, MAX_CONSTELLATION_N)
    check_size('length', length, m + MAX_ONE_BLOCK_EXTRA)
    logger.debug("alternating constellation sum for %s at l=%d", cycle_type, length)
    return Fraction(_alternating_table(m, length).get(nu.image, 0))


def gamma_l(pi: SetPartition, nu: Permutation, length: int) -> Fraction:
    """
    Coefficient of N^(-n-l) contributed by ``pi`` in the Weingarten function,
    computed block by block: a convolution over the lengths l_G of the
    one-block values gamma_{l_G}(1, nu|_G).
    :param pi: partition coarser than the cycles of ``nu``
    :param nu: permutation
    :param length: l
    :return: Fraction
    """
    if not nu.orbit_partition() <= pi:
        raise RefinementError(f"{pi} is not coarser than the cycles of {nu}")
    if length < 0:
        return Fraction(0)
    per_block = []
    for block in pi.blocks:
        restricted = nu.restrict(block)
        per_block.append((restricted.cycle_type.parts, minimal_length(restricted)))
    spare = length - sum(low for _, low in per_block)
    if spare < 0 or spare % 2:
        return Fraction(0)
    # distribute the spare length (in steps of 2) across the blocks
    convolution = {0: Fraction(1)}
    for shape, low in per_block:
        nxt: Dict[int, Fraction] = {}
        for used, value in convolution.items():
            for extra in range(0, spare - used + 1, 2):
                term = gamma_one_block(shape, low + extra)
                if term:
                    nxt[used + extra] = nxt.get(used + extra, Fraction(0)) + value * term
        convolution = nxt
    return convolution.get(spare, Fraction(0))


def mobius_mu(pi: SetPartition, sigma: Permutation) -> Fraction:
    """
    Moebius weight of the second-order convolution, gamma_{#sigma - 2#pi + n}(pi, sigma).
    :param pi: partition coarser than the cycles of ``sigma``
    :param sigma: permutation
    :return: Fraction (1 for pi = 0_n, sigma = id)
    """
    length = sigma.num_cycles - 2 * len(pi) + sigma.n
    return gamma_l(pi, sigma, length)


def minimal_l(nu: Permutation, pi: SetPartition, tilde: SetPartition) -> int:
    """Smallest l with gamma_l(bar, nu) != 0 over bar with tilde v bar = pi: n - #nu + 2(#tilde - #pi)."""
    return nu.n - nu.num_cycles + 2 * (len(tilde) - len(pi))


def partitions_above(nu: Permutation) -> Tuple[SetPartition, ...]:
    """Set partitions coarser than the cycles of ``nu``."""
    return enumerate_set_partitions(nu.n, nu.orbit_partition())
