"""
Functional moment-cumulant relations as sums over reduced trees.

For a weight attached to each tree T on p white vertices, the tree sum is

    sum_T prod_i (X_i d/dX_i)-falling-(deg_T(i) - 1) { prod_i Y_i'(X_i) / C_1(Y_i)^deg_T(i) * weight(T) }

where ``X^k d^k/dX^k`` is the falling product ``prod_{m<k} (X d/dX - m)``.
Everything is computed in the Y variables: ``X d/dX = (Y'/C_1(Y)) Y d/dY``
and M_1(X) = C_1(Y), so no series reversion is needed until the final
substitution ``Y_i = X_i M_1(X_i)``.

With the weight ``prod_I H_|I|(Y_I)`` the sum is the moment series M_p; with
``prod_I C_|I|(Y_I)`` and every C_2 carrying the double pole
``Y_a Y_b/(Y_a - Y_b)^2`` it is M_p again, plus ``X_1 X_2/(X_1 - X_2)^2`` when p = 2.
"""
import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..combinatorics import LabeledTree, enumerate_trees
from ..exceptions import check_size
from ..generating import build_C, build_H, build_hatC_pi, build_tildeC, c2_ring, embed, theta_all
from ..generating.builders import MAX_H_P
from ..series import (DifferenceFraction, MultiSeries, default_variables, dy_dx, first_order_moments,
                      univariate_coefficients, y_of_x)

logger = logging.getLogger(__name__)

Weight = Union[MultiSeries, DifferenceFraction]

FUNCTIONAL_ROUTES = ('H', 'pole')
MAX_FUNCTIONAL_P = MAX_H_P


class YRing:
    """
    The univariate factors of the tree sum, embedded in Y1..Yp.
    """

    def __init__(self, p: int, depth: int, seed: Optional[int] = None):
        self.p = p
        self.depth = depth
        self.seed = seed
        self.variables = default_variables(p)
        c1 = build_C(1, depth, seed)
        inverse = c1.unit_inverse()
        slope = dy_dx(c1)
        self.c1 = [embed(c1, p, (i,)) for i in range(p)]
        self.inverse_c1 = [embed(inverse, p, (i,)) for i in range(p)]
        self.dy_dx = [embed(slope, p, (i,)) for i in range(p)]
        # X d/dX = w Y d/dY
        self.euler = [embed(slope * inverse, p, (i,)) for i in range(p)]

    def one(self) -> MultiSeries:
        return MultiSeries.constant(self.variables, self.depth, 1)

    def x_euler(self, f: Weight, i: int) -> Weight:
        """``X_i d/dX_i`` written in the Y variables."""
        return f.theta(i) * self.euler[i]

    def falling(self, f: Weight, i: int, k: int) -> Weight:
        """``X_i^k d^k/dX_i^k = prod_{m<k} (X_i d/dX_i - m)``."""
        for m in range(k):
            f = self.x_euler(f, i) - f * m
        return f

    def prefactor(self, tree: LabeledTree) -> MultiSeries:
        out = self.one()
        for i in range(self.p):
            out = out * self.dy_dx[i] * self.inverse_c1[i] ** tree.edge_degree(i)
        return out

    def double_pole(self, a: int, b: int) -> DifferenceFraction:
        return DifferenceFraction.double_pole(self.variables, self.depth, a, b)


def _add(total: Optional[Weight], term: Weight) -> Weight:
    if total is None:
        return term
    if isinstance(total, DifferenceFraction) or isinstance(term, DifferenceFraction):
        return as_fraction(total) + as_fraction(term)
    return total + term


def as_fraction(f: Weight) -> DifferenceFraction:
    return f if isinstance(f, DifferenceFraction) else DifferenceFraction.from_series(f)


def tree_term(ring: YRing, tree: LabeledTree, w: Weight) -> Weight:
    """One summand of the tree sum: ``w`` times the univariate factors of ``tree``, under its falling operators."""
    term = w * ring.prefactor(tree)
    for i in range(ring.p):
        if tree.edge_degree(i) > 1:
            term = ring.falling(term, i, tree.edge_degree(i) - 1)
    return term


def tree_sum(ring: YRing, weight: Callable[[LabeledTree], Optional[Weight]],
             trees: Optional[Sequence[LabeledTree]] = None) -> Weight:
    """
    The tree sum in Y variables for a weight per tree.
    :param ring: univariate factors
    :param weight: maps a tree to its weight over Y1..Yp, or None to skip the tree
    :param trees: trees to sum over (default: all reduced trees on p vertices)
    :return: MultiSeries, or DifferenceFraction when a weight carries poles
    """
    total: Optional[Weight] = None
    for tree in trees if trees is not None else enumerate_trees(ring.p, 'G'):
        w = weight(tree)
        if w is None:
            continue
        total = _add(total, tree_term(ring, tree, w))
    if total is None:
        return ring.one() * 0
    return total


def _substitution(depth: int, seed: Optional[int]) -> List:
    # Y(X) = X M_1(X), with coefficients known to degree depth + 1
    m1 = first_order_moments(build_C(1, depth, seed))
    return univariate_coefficients(y_of_x(m1))


def to_x_variables(f: Weight, seed: Optional[int] = None) -> Weight:
    """
    Substitute ``Y_i = X_i M_1(X_i)`` in every variable.
    :param f: series or fraction over Y1..Yp
    :param seed: specialisation seed of the first-order cumulants
    :return: the same kind of object over X1..Xp
    """
    p = len(f.variables)
    variables = default_variables(p, 'X')
    if isinstance(f, DifferenceFraction):
        coefficients = _substitution(f.depth + f.order + 1, seed)
        return f.compose_univariate(coefficients, variables)
    coefficients = _substitution(f.depth, seed)
    out = f
    for i in range(p):
        out = out.compose_univariate(i, coefficients)
    return out.rename(variables, range(p))


def h_weight(ring: YRing, route: str = 'auto') -> Callable[[LabeledTree], MultiSeries]:
    """``prod_I H_|I|(Y_I)`` over the black vertices."""
    def weight(tree: LabeledTree) -> MultiSeries:
        out = ring.one()
        for h in tree.hyperedges:
            out = out * embed(build_H(len(h), ring.depth, ring.seed, route), ring.p, h)
        return out
    return weight


def primed_c(ring: YRing, h: Tuple[int, ...]) -> Weight:
    """C_|h|(Y_h), plus the double pole when |h| = 2."""
    series = embed(build_C(len(h), ring.depth, ring.seed), ring.p, h)
    if len(h) == 2:
        return ring.double_pole(*h) + series
    return series


def pole_weight(ring: YRing) -> Callable[[LabeledTree], Weight]:
    """``prod'_I C_|I|(Y_I)``, every C_2 with its double pole."""
    def weight(tree: LabeledTree) -> Weight:
        out: Weight = ring.one()
        for h in tree.hyperedges:
            factor = primed_c(ring, h)
            out = factor * out if isinstance(factor, DifferenceFraction) else out * factor
        return out
    return weight


def tilde_weight(ring: YRing) -> Callable[[LabeledTree], Weight]:
    """
    ``prod_I C-tilde_|I|(Y_I)`` minus the product of the double poles, the
    latter only when every black vertex joins two white vertices.
    """
    def weight(tree: LabeledTree) -> Weight:
        out: Weight = ring.one()
        for h in tree.hyperedges:
            out = out * embed(build_tildeC(len(h), ring.depth, ring.seed), ring.p, h)
        if all(len(h) == 2 for h in tree.hyperedges):
            poles: Weight = ring.one()
            for h in tree.hyperedges:
                poles = ring.double_pole(*h) * poles
            return as_fraction(out) - poles
        return out
    return weight


def simplification_weight(ring: YRing, route: str = 'auto') -> Callable[[LabeledTree], Weight]:
    """``prod_I H_|I| - prod'_I C_|I|``; zero exactly when the two routes agree tree by tree."""
    by_h = h_weight(ring, route)
    by_pole = pole_weight(ring)

    def weight(tree: LabeledTree) -> Weight:
        return as_fraction(by_h(tree)) - by_pole(tree)
    return weight


# the C_2 C_2 part of the order-4 simplification, family by family

Pair = Tuple[int, int]
FamilyKey = Tuple[Pair, Tuple[Pair, Pair]]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def c2c2_family(origin: Pair, first: Pair, second: Pair) -> FamilyKey:
    """Key of the terms grown from the pair ``origin`` that carry C_2 at ``first`` and at ``second``."""
    return _pair(*origin), tuple(sorted((_pair(*first), _pair(*second))))


def _c2(ring: YRing, a: int, b: int) -> MultiSeries:
    return embed(build_C(2, ring.depth), ring.p, (a, b))


def _pair_inverse(ring: YRing, k: int, l: int) -> MultiSeries:
    return (1 - build_hatC_pi((_pair(k, l),), ring.p, ring.depth, 'closed', ring.seed)).unit_inverse()


def split_hat(ring: YRing, k: int, l: int, i: int) -> Dict[Pair, DifferenceFraction]:
    """
    The fused series of the block {k, l} and the singleton {i},
    ``[Y_l C_2(Y_k, Y_i) - Y_k C_2(Y_l, Y_i)] / (Y_k - Y_l)``, as one
    simple-pole term per placement of C_2.
    """
    return {_pair(k, i): DifferenceFraction.simple_pole(_c2(ring, k, i).shift(l), k, l),
            _pair(l, i): DifferenceFraction.simple_pole(-_c2(ring, l, i).shift(k), k, l)}


def c2c2_families(ring: YRing) -> Dict[FamilyKey, DifferenceFraction]:
    """
    The terms of the order-4 simplification tree sum with exactly two
    second-order cumulants, grouped by the pair whose C-tilde_2 they grow
    from and by the placements of the two C_2.

    They come from the corrections of H_4 on a pair and two singletons, from
    the corrections of H_3 on a pair and a singleton times C_2, and from
    C-ring_2 times two C_2 on the trees with three edges.  The families add
    up to the k^2.2 class of the residual.
    :param ring: univariate factors for p = 4
    :return: family key -> its tree-summed terms
    """
    if ring.p != 4:
        raise ValueError(f"the C_2 C_2 families live at order 4, got p={ring.p}")
    ringed = c2_ring(ring.depth, ring.seed)
    families: Dict[FamilyKey, DifferenceFraction] = {}

    def add(key: FamilyKey, term: Weight):
        families[key] = as_fraction(term) if key not in families else families[key] + term

    for tree in enumerate_trees(4, 'G'):
        shape = sorted(len(h) for h in tree.hyperedges)
        if shape == [4]:
            for k, l in itertools.combinations(range(4), 2):
                i, j = (a for a in range(4) if a not in (k, l))
                inverse = _pair_inverse(ring, k, l) ** 2
                for x, tx in split_hat(ring, k, l, i).items():
                    for y, ty in split_hat(ring, k, l, j).items():
                        add(c2c2_family((k, l), x, y), tree_term(ring, tree, theta_all(tx * ty * inverse, (k, l))))
        elif shape == [2, 3]:
            edge, big = sorted(tree.hyperedges, key=len)
            for k, l in itertools.combinations(big, 2):
                r = next(a for a in big if a not in (k, l))
                inverse = _pair_inverse(ring, k, l)
                for x, tx in split_hat(ring, k, l, r).items():
                    w = theta_all(tx * inverse, (k, l)) * _c2(ring, *edge)
                    add(c2c2_family((k, l), x, edge), tree_term(ring, tree, w))
        else:
            for e in tree.hyperedges:
                first, second = (h for h in tree.hyperedges if h != e)
                w = ringed.rename(ring.variables, list(e)) * _c2(ring, *first) * _c2(ring, *second)
                add(c2c2_family(e, first, second), tree_term(ring, tree, w))
    logger.debug("%d C_2 C_2 families at depth %d", len(families), ring.depth)
    return families


@lru_cache(maxsize=None)
def functional_moments(p: int, depth: int, route: str = 'H', seed: Optional[int] = None) -> MultiSeries:
    """
    The moment series M_p from the cumulant series by the tree sum.
    :param p: order, at most :data:`MAX_FUNCTIONAL_P`
    :param depth: truncation
    :param route: ``'H'`` for the corrected vertex weights, ``'pole'`` for
        the cumulant series with double poles
    :param seed: specialises the first-order cumulants
    :return: MultiSeries in X1..Xp, comparable with :func:`moment_series`
    """
    check_size('p', p, MAX_FUNCTIONAL_P)
    if route not in FUNCTIONAL_ROUTES:
        raise ValueError(f"unknown route {route!r}, expected one of {', '.join(FUNCTIONAL_ROUTES)}")
    if p == 1:
        return first_order_moments(build_C(1, depth, seed), 'X1')
    ring = YRing(p, depth, seed)
    weight = h_weight(ring) if route == 'H' else pole_weight(ring)
    in_y = tree_sum(ring, weight)
    in_x = to_x_variables(in_y, seed)
    if isinstance(in_x, DifferenceFraction):
        if p == 2:
            in_x = in_x - DifferenceFraction.double_pole(in_x.variables, depth, 0, 1)
        in_x = in_x.reduce()
    logger.info("M_%d to depth %d by the %s route", p, depth, route)
    return in_x
