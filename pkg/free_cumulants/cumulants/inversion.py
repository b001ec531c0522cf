"""
Cumulants of all orders from moments of all orders.

Two formulas are implemented: the single sum over planar permutations and
admissible partitions with the tree kernel Gamma as Möbius weight, and the
double convolution with the second-order Möbius function.  The module also
checks the lemma that splits the convolution condition into a genus
condition and two forest conditions, and the multiplicativity of the
moment function.
"""
import logging
from typing import Dict, Iterator, Optional, Sequence, Tuple

from ..combinatorics import (Permutation, SetPartition, all_permutations, conjugacy_class, enumerate_set_partitions,
                             excess_L, gamma_of, integer_partitions)
from ..exceptions import RouteDisagreementError, check_size
from ..hurwitz import big_gamma, mobius_mu
from ..maps import genus
from ..series import KappaPoly
from .moments import moment_of_permutation
from .tables import CumulantTable, MomentTable, canonical_profile, profiles_up_to

logger = logging.getLogger(__name__)

MAX_GAMMA_FORM_N = 6
MAX_CMSS_N = 5
MAX_SPLIT_N = 4
MAX_MULTIPLICATIVITY_N = 5

INVERSION_METHODS = ('gamma', 'cmss')


def _cumulant_of_permutation(sigma: Permutation, moments: MomentTable) -> KappaPoly:
    n = sigma.n
    base = sigma.orbit_partition()
    one = SetPartition.coarsest(n)
    total = KappaPoly()
    for tau in all_permutations(n):
        if genus(sigma, tau.inverse()):
            continue
        cycles = tau.orbit_partition()
        floor = base.join(cycles)
        nu = sigma * tau.inverse()
        for pi in enumerate_set_partitions(n, cycles):
            if excess_L(pi, floor, cycles):
                continue
            weight = big_gamma(nu, one, pi.join(base))
            if weight:
                total = total + moments.phi(pi, tau) * weight
    return total


def higher_cumulants_from_moments(profile: Sequence[int], moments: MomentTable,
                                  limit: int = MAX_GAMMA_FORM_N) -> KappaPoly:
    """
    ``k[lambda] = sum_tau sum_pi phi(pi, tau) Gamma[sigma tau^-1, 1_n, pi v Pi(sigma)]``
    over tau with g(sigma, tau^-1) = 0 and pi >= Pi(tau) with zero excess
    against Pi(sigma) v Pi(tau), where sigma = gamma_lambda.
    :param profile: lambda
    :param moments: moments of every profile the sum reaches (all profiles up to |lambda| suffice)
    :param limit: size guard on n
    :return: KappaPoly, constant when the moments are numbers
    :raises MissingEntryError: if a needed moment is absent
    """
    profile = canonical_profile(profile)
    check_size('n', sum(profile), limit)
    return _cumulant_of_permutation(gamma_of(profile), moments)


def _partitions_by_size(sigma: Permutation) -> Dict[int, Tuple[SetPartition, ...]]:
    out: Dict[int, list] = {}
    for pi in enumerate_set_partitions(sigma.n, sigma.orbit_partition()):
        out.setdefault(len(pi), []).append(pi)
    return {k: tuple(v) for k, v in out.items()}


def higher_cumulants_cmss(profile: Sequence[int], moments: MomentTable, limit: int = MAX_CMSS_N) -> KappaPoly:
    """
    The convolution form ``k(1_n, sigma) = sum phi(pi_1, sigma_1) mu(pi_2, sigma_2)``
    over sigma_1 sigma_2 = sigma, pi_i >= Pi(sigma_i), pi_1 v pi_2 = 1_n and
    ``#sigma_1 - 2#pi_1 + #sigma_2 - 2#pi_2 + n = #sigma - 2``.
    :param profile: lambda
    :param moments: moment table
    :param limit: size guard on n
    :return: KappaPoly
    """
    profile = canonical_profile(profile)
    n = sum(profile)
    check_size('n', n, limit)
    sigma = gamma_of(profile)
    one = SetPartition.coarsest(n)
    total = KappaPoly()
    for sigma1 in all_permutations(n):
        sigma2 = sigma1.inverse() * sigma
        # the degree condition fixes #pi_1 + #pi_2
        blocks = sigma1.num_cycles + sigma2.num_cycles + n - sigma.num_cycles + 2
        if blocks % 2:
            continue
        blocks //= 2
        first = _partitions_by_size(sigma1)
        second = _partitions_by_size(sigma2)
        for k1, pis1 in first.items():
            pis2 = second.get(blocks - k1, ())
            if not pis2:
                continue
            for pi2 in pis2:
                mu = mobius_mu(pi2, sigma2)
                if not mu:
                    continue
                for pi1 in pis1:
                    if pi1.join(pi2) == one:
                        total = total + moments.phi(pi1, sigma1) * mu
    return total


def cumulant_of_profile(profile: Sequence[int], moments: MomentTable, method: str = 'gamma') -> KappaPoly:
    """One cumulant by the inversion ``method``, ``'gamma'`` or ``'cmss'``."""
    if method not in INVERSION_METHODS:
        raise ValueError(f"unknown inversion method {method!r}, expected one of {', '.join(INVERSION_METHODS)}")
    compute = higher_cumulants_from_moments if method == 'gamma' else higher_cumulants_cmss
    return compute(profile, moments)


def cumulant_table(moments: MomentTable, max_n: int, max_p: Optional[int] = None,
                   method: str = 'gamma') -> CumulantTable:
    """
    Invert a moment table profile by profile.
    :param moments: moments of every profile up to ``max_n``
    :param max_n: largest |lambda|
    :param max_p: largest number of parts
    :param method: ``'gamma'`` or ``'cmss'``
    :return: CumulantTable
    """
    table = CumulantTable()
    for lam in profiles_up_to(max_n, max_p):
        table[lam] = cumulant_of_profile(lam, moments, method)
    logger.info("cumulant table by %s: %d profiles up to n=%d", method, len(table), max_n)
    return table


def _split_conditions(pi1: SetPartition, sigma1: Permutation, pi2: SetPartition, sigma2: Permutation) -> Tuple[bool, bool]:
    n = sigma1.n
    product = sigma2 * sigma1
    degree = (sigma1.num_cycles - 2 * len(pi1) + sigma2.num_cycles - 2 * len(pi2) + n
              == product.num_cycles - 2 * len(pi1.join(pi2)))
    cycles1 = sigma1.orbit_partition()
    merged = cycles1.join(product.orbit_partition())
    three = (genus(sigma1, sigma1.inverse() * sigma2.inverse()) == 0
             and excess_L(pi1, merged, cycles1) == 0
             and excess_L(pi2, pi1.join(product.orbit_partition()), sigma2.orbit_partition()) == 0)
    return degree, three


def split_lemma_cases(n: int, limit: int = MAX_SPLIT_N) -> Iterator[Tuple[SetPartition, Permutation, SetPartition, Permutation]]:
    """Every (pi_1, sigma_1, pi_2, sigma_2) on n points with pi_i >= Pi(sigma_i)."""
    check_size('n', n, limit)
    perms = list(all_permutations(n))
    above = {s: enumerate_set_partitions(n, s.orbit_partition()) for s in perms}
    for sigma1 in perms:
        for sigma2 in perms:
            for pi1 in above[sigma1]:
                for pi2 in above[sigma2]:
                    yield pi1, sigma1, pi2, sigma2


def check_split_lemma(n: int, limit: int = MAX_SPLIT_N) -> int:
    """
    Check that the single degree condition of the dot product holds exactly
    when the genus condition and both forest conditions hold.
    :param n: ground-set size
    :param limit: size guard
    :return: number of quadruples satisfying the conditions
    :raises RouteDisagreementError: on the first quadruple where they differ
    """
    check_size('n', n, limit)
    satisfied = 0
    for pi1, sigma1, pi2, sigma2 in split_lemma_cases(n, limit):
        degree, three = _split_conditions(pi1, sigma1, pi2, sigma2)
        if degree != three:
            raise RouteDisagreementError('split lemma', (str(pi1), str(sigma1), str(pi2), str(sigma2)), degree, three)
        satisfied += degree
    logger.info("split lemma on %d points: %d admissible quadruples", n, satisfied)
    return satisfied


def check_multiplicativity(n: int, limit: int = MAX_MULTIPLICATIVITY_N) -> int:
    """
    Check that phi(1_n, sigma) computed for each sigma depends only on its cycle type.
    :param n: number of points
    :param limit: size guard
    :return: number of permutations checked
    :raises RouteDisagreementError: when two conjugate permutations give different moments
    """
    check_size('n', n, limit)
    checked = 0
    for lam in integer_partitions(n):
        reference = moment_of_permutation(gamma_of(lam.parts))
        for sigma in conjugacy_class(lam.parts):
            value = moment_of_permutation(sigma)
            if value != reference:
                raise RouteDisagreementError(f"phi(1_{n}, {sigma})", lam.parts, value, reference)
            checked += 1
    return checked


def roundtrip_defect(max_n: int, moments: MomentTable, method: str = 'gamma') -> Dict[Tuple[int, ...], KappaPoly]:
    """
    ``k[lambda]`` recovered from moments minus the symbol itself, for every
    profile whose difference is nonzero; empty when the inversion is exact.
    """
    return cumulant_defect(cumulant_table(moments, max_n, method=method))


def cumulant_defect(recovered: CumulantTable) -> Dict[Tuple[int, ...], KappaPoly]:
    """Entries of an already inverted symbolic table that differ from their own symbol."""
    out = {}
    for lam in recovered:
        diff = recovered[lam] - KappaPoly.kappa(*lam)
        if diff:
            out[lam] = diff
    return out
