"""
The Weingarten function of the unitary group as a truncated series in 1/N.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

import sympy

from ..combinatorics import (Permutation, SetPartition, all_permutations, gamma_of, integer_partitions,
                             mobius)
from ..exceptions import RefinementError, SizeMismatchError, check_size
from .gamma import gamma_l, partitions_above

logger = logging.getLogger(__name__)

MAX_WEINGARTEN_N = 4
MAX_ORACLE_N = 3


@dataclass(frozen=True)
class LaurentSeriesInInverseN:
    """
    Sum of ``coeffs[k] * N^(-k)`` for ``k <= depth``; higher powers are unknown.
    """
    coeffs: Dict[int, Fraction] = field(default_factory=dict)
    depth: int = 0

    def __post_init__(self):
        clean = {int(k): Fraction(v) for k, v in self.coeffs.items() if v and k <= self.depth}
        object.__setattr__(self, 'coeffs', clean)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    def __add__(self, other: 'LaurentSeriesInInverseN') -> 'LaurentSeriesInInverseN':
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return LaurentSeriesInInverseN(out, min(self.depth, other.depth))

    def __mul__(self, other) -> 'LaurentSeriesInInverseN':
        if not isinstance(other, LaurentSeriesInInverseN):
            return LaurentSeriesInInverseN({k: v * other for k, v in self.coeffs.items()}, self.depth)
        # the lowest order of each factor shifts the depth up to which the product is known
        low_self = min(self.coeffs, default=self.depth)
        low_other = min(other.coeffs, default=other.depth)
        depth = min(self.depth + low_other, other.depth + low_self)
        out: Dict[int, Fraction] = {}
        for a, u in self.coeffs.items():
            for b, v in other.coeffs.items():
                if a + b <= depth:
                    out[a + b] = out.get(a + b, Fraction(0)) + u * v
        return LaurentSeriesInInverseN(out, depth)

    __rmul__ = __mul__

    def __sub__(self, other: 'LaurentSeriesInInverseN') -> 'LaurentSeriesInInverseN':
        return self + other * -1

    def truncate(self, depth: int) -> 'LaurentSeriesInInverseN':
        return LaurentSeriesInInverseN(self.coeffs, min(depth, self.depth))

    def agrees_with(self, other: 'LaurentSeriesInInverseN') -> bool:
        depth = min(self.depth, other.depth)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys if k <= depth)

    def to_dict(self) -> Dict[str, str]:
        return {str(k): str(v) for k, v in sorted(self.coeffs.items())}

    def __str__(self) -> str:
        terms = [f"{v}*N^-{k}" for k, v in sorted(self.coeffs.items())]
        return ' + '.join(terms or ['0']) + f" + O(N^-{self.depth + 1})"


def weingarten_series(nu: Permutation, depth: int, limit: int = MAX_WEINGARTEN_N) -> LaurentSeriesInInverseN:
    """
    Truncated 1/N expansion of W(nu), summing gamma_l(pi, nu) N^(-n-l)
    over partitions pi coarser than the cycles of ``nu``.
    :param nu: permutation
    :param depth: largest power k of 1/N kept
    :param limit: size guard on n
    :return: LaurentSeriesInInverseN
    """
    n = nu.n
    check_size('n', n, limit)
    check_size('depth', depth, n + 8)
    coeffs: Dict[int, Fraction] = {}
    for pi in partitions_above(nu):
        for length in range(0, depth - n + 1):
            value = gamma_l(pi, nu, length)
            if value:
                coeffs[n + length] = coeffs.get(n + length, Fraction(0)) + value
    return LaurentSeriesInInverseN(coeffs, depth)


@lru_cache(maxsize=None)
def _inverse_gram(n: int) -> Tuple[Tuple[Permutation, ...], sympy.Matrix]:
    N = sympy.Symbol('N')
    group = tuple(all_permutations(n, MAX_ORACLE_N))
    gram = sympy.Matrix(len(group), len(group),
                        lambda i, j: N ** (group[i] * group[j].inverse()).num_cycles)
    return group, gram.inv()


def weingarten_oracle(nu: Permutation, limit: int = MAX_ORACLE_N) -> sympy.Expr:
    """
    W(nu) as a rational function of N, read off the inverse of the Gram
    matrix ``G[s, t] = N^#(s t^-1)`` of S_n.
    :param nu: permutation
    :param limit: size guard on n
    :return: sympy expression in the symbol ``N``
    """
    check_size('n', nu.n, limit)
    group, inverse = _inverse_gram(nu.n)
    row = group.index(nu)
    col = group.index(Permutation.identity(nu.n))
    return sympy.factor(sympy.cancel(inverse[row, col]))


def weingarten_oracle_series(nu: Permutation, depth: int, limit: int = MAX_ORACLE_N) -> LaurentSeriesInInverseN:
    """:func:`weingarten_oracle` expanded at N = infinity up to N^-depth."""
    N, t = sympy.Symbol('N'), sympy.Symbol('t')
    expr = weingarten_oracle(nu, limit).subs(N, 1 / t)
    poly = sympy.Poly(sympy.series(expr, t, 0, depth + 1).removeO(), t)
    coeffs = {}
    for (k,), value in poly.terms():
        value = sympy.Rational(value)
        coeffs[k] = Fraction(int(value.p), int(value.q))
    return LaurentSeriesInInverseN(coeffs, depth)


def explicit_weingarten_check(nu: Permutation, pi: SetPartition, tilde: SetPartition,
                              depth: int) -> Tuple[LaurentSeriesInInverseN, LaurentSeriesInInverseN]:
    """
    Both sides of the Moebius-inverted product of Weingarten functions:
    ``sum_{tilde <= c <= pi} mu(c, pi) prod_{G in c} W(nu|_G)`` and
    ``sum_l N^(-n-l) sum_{bar : tilde v bar = pi} gamma_l(bar, nu)``.
    :param nu: permutation
    :param pi: upper partition
    :param tilde: partition with cycles(nu) <= tilde <= pi
    :param depth: truncation in powers of 1/N
    :return: (left, right)
    """
    if tilde.n != nu.n or pi.n != nu.n:
        raise SizeMismatchError("partitions and permutation differ in size")
    if not (nu.orbit_partition() <= tilde and tilde <= pi):
        raise RefinementError(f"need cycles of {nu} <= {tilde} <= {pi}")
    n = nu.n
    left = LaurentSeriesInInverseN({}, depth)
    for middle in partitions_above(nu):
        if not (tilde <= middle and middle <= pi):
            continue
        product = LaurentSeriesInInverseN({0: Fraction(1)}, depth)
        for block in middle.blocks:
            product = product * weingarten_series(nu.restrict(block), depth)
        left = left + product * mobius(middle, pi)
    right: Dict[int, Fraction] = {}
    for bar in partitions_above(nu):
        if tilde.join(bar) != pi:
            continue
        for length in range(0, depth - n + 1):
            value = gamma_l(bar, nu, length)
            if value:
                right[n + length] = right.get(n + length, Fraction(0)) + value
    logger.debug("explicit Weingarten check for %s at %s, %s", nu, tilde, pi)
    return left.truncate(depth), LaurentSeriesInInverseN(right, depth)


def weingarten_table(n: int, depth: int) -> Dict[str, Dict[str, str]]:
    """Series of W for one representative per cycle type of S_n."""
    return {str(alpha): weingarten_series(gamma_of(alpha.parts), depth).to_dict()
            for alpha in integer_partitions(n)}

