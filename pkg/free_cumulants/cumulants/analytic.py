"""
The coefficient form of the functional moment-cumulant relations: a sum
over reduced trees on the p cycles, each black vertex weighted by the
corrected cumulant of :func:`h_coefficient`, each white vertex by
factorials and powers of first-order cumulants.

Also collects the moment routes behind one name for the tables and the
generating series.
"""
import itertools
import logging
import math
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..combinatorics import enumerate_trees, integer_partitions
from ..exceptions import check_size
from ..generating import exponent_vectors, h_coefficient
from ..series import KappaPoly, MultiSeries, default_variables
from .moments import (MAX_FACTORIZED_P, MAX_TREE_P, bounded_compositions, free_moments_p1, higher_moments_bruteforce,
                      higher_moments_treeformula, moments_via_factorized, substitute_kappa)
from .tables import CumulantTable, MomentTable, Profile, canonical_profile, profiles_up_to

logger = logging.getLogger(__name__)

MAX_ANALYTIC_N = 7
MAX_ANALYTIC_P = 4


@lru_cache(maxsize=None)
def _white_options(size: int, d: int) -> Tuple[Tuple[Tuple[int, ...], KappaPoly], ...]:
    # (weights j on the d incident black vertices, factorial and leaf weight)
    out = []
    for js in bounded_compositions(d, size):
        rest = size - sum(js)
        frees = [()] if rest == 0 else [lam.parts for lam in integer_partitions(rest)]
        weight = KappaPoly()
        for free in frees:
            top = size + 1 - len(free) - d
            if top < 0:
                continue
            term = KappaPoly.constant(math.factorial(size) // math.factorial(top))
            mult: Dict[int, int] = {}
            for a in free:
                mult[a] = mult.get(a, 0) + 1
            for a, k in mult.items():
                term = term * KappaPoly.kappa(a) ** k / math.factorial(k)
            weight = weight + term
        if weight:
            out.append((js, weight))
    return tuple(out)


@lru_cache(maxsize=None)
def _analytic(profile: Profile) -> KappaPoly:
    p = len(profile)
    total = KappaPoly()
    for tree in enumerate_trees(p, 'G'):
        incident = [[e for e, h in enumerate(tree.hyperedges) if i in h] for i in range(p)]
        options = [_white_options(lam, len(edges)) for lam, edges in zip(profile, incident)]
        for choice in itertools.product(*options):
            picked: List[List[int]] = [[] for _ in tree.hyperedges]
            term = KappaPoly.constant(1)
            for i, (js, weight) in enumerate(choice):
                term = term * weight
                for e, j in zip(incident[i], js):
                    picked[e].append(j)
            for js in picked:
                term = term * h_coefficient(tuple(js))
                if not term:
                    break
            total = total + term
    return total


def higher_moments_analytic(profile: Sequence[int], kappa: Optional[CumulantTable] = None,
                            limit_n: int = MAX_ANALYTIC_N, limit_p: int = MAX_ANALYTIC_P) -> KappaPoly:
    """
    Moments from the tree sum over reduced trees T on p labelled white vertices:
    white vertex i distributes lambda_i into positive weights j on its black
    neighbours and k_a leaves of weight a, and contributes
    ``lambda_i!/(lambda_i + 1 - l_i - deg_T(i))! prod_a k[a]^k_a / k_a!`` with
    l_i = sum_a k_a; a black vertex contributes the corrected cumulant of its
    weights, which already holds the regularised double pole for p = 2.
    :param profile: lambda
    :param kappa: optional table of cumulant values
    :param limit_n: size guard on n
    :param limit_p: size guard on p
    :return: KappaPoly
    """
    profile = canonical_profile(profile)
    check_size('n', sum(profile), limit_n)
    check_size('p', len(profile), limit_p)
    return substitute_kappa(_analytic(profile), kappa)


MOMENT_METHODS: Dict[str, Callable[..., KappaPoly]] = {
    'bruteforce': higher_moments_bruteforce,
    'tree': higher_moments_treeformula,
    'analytic': higher_moments_analytic,
    'factorized': moments_via_factorized,
}


# largest number of parts each route accepts; single-part profiles always use the first-order sum
METHOD_P_LIMITS: Dict[str, Optional[int]] = {
    'bruteforce': None,
    'tree': MAX_TREE_P,
    'analytic': MAX_ANALYTIC_P,
    'factorized': MAX_FACTORIZED_P,
}


def method_p_limit(name: str) -> Optional[int]:
    """Largest p the moment route ``name`` accepts, None when only n is bounded."""
    _method(name)
    return METHOD_P_LIMITS[name]


def _method(name: str) -> Callable[..., KappaPoly]:
    try:
        return MOMENT_METHODS[name]
    except KeyError:
        raise ValueError(f"unknown moment method {name!r}, expected one of {', '.join(MOMENT_METHODS)}") from None


def moment_of_profile(profile: Sequence[int], method: str = 'bruteforce',
                      kappa: Optional[CumulantTable] = None) -> KappaPoly:
    """One moment by the route ``method``; a single part always takes the first-order sum."""
    profile = canonical_profile(profile)
    if len(profile) == 1:
        return free_moments_p1(profile[0], kappa)
    return _method(method)(profile, kappa)


def moment_table(max_n: int, max_p: Optional[int] = None, method: str = 'bruteforce',
                 kappa: Optional[CumulantTable] = None) -> MomentTable:
    """
    Moments of every profile up to ``max_n``.
    :param max_n: largest |lambda|
    :param max_p: largest number of parts (all when None)
    :param method: key of :data:`MOMENT_METHODS`
    :param kappa: optional table of cumulant values
    :return: MomentTable
    """
    _method(method)
    table = MomentTable()
    for lam in profiles_up_to(max_n, max_p):
        table[lam] = moment_of_profile(lam, method, kappa)
    logger.info("moment table by %s: %d profiles up to n=%d", method, len(table), max_n)
    return table


def moment_series(p: int, depth: int, method: str = 'analytic', seed: Optional[int] = None) -> MultiSeries:
    """
    The moment generating series ``M_1 = 1 + sum_n phi_1(b^n) X^n`` and, for
    p >= 2, ``M_p = sum phi_p(b^a_1, ..., b^a_p) X_1^a_1 ... X_p^a_p`` over positive exponents.
    :param p: order
    :param depth: truncation, bounded by the guards of ``method``
    :param method: key of :data:`MOMENT_METHODS`
    :param seed: specialises the first-order cumulants
    :return: MultiSeries in X1..Xp
    """
    compute = _method(method)
    terms: Dict[Tuple[int, ...], KappaPoly] = {}
    if p == 1:
        terms[(0,)] = KappaPoly.constant(1)
        for n in range(1, depth + 1):
            terms[(n,)] = free_moments_p1(n)
    else:
        for exps in exponent_vectors(p, depth):
            terms[exps] = compute(exps)
    series = MultiSeries(default_variables(p, 'X'), depth, terms)
    return series if seed is None else series.specialize(seed, (1,))
