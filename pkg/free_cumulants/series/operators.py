"""
Operators on cumulant-coefficient series: the multilinear D operator that
fuses first-order cumulants into one higher-order cumulant, its tensor
form D_K with the product P, and the first-order change of variables
X = Y / C_1(Y), Y = X M_1(X).
"""
import itertools
import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..exceptions import VariableMismatchError
from .kappa import KappaPoly
from .multiseries import MultiSeries
from .poles import DifferenceFraction

logger = logging.getLogger(__name__)


def _check_same_ring(series: Sequence[MultiSeries]):
    head = series[0]
    for s in series[1:]:
        if s.variables != head.variables or s.depth != head.depth:
            raise VariableMismatchError(
                f"series over {head.variables}@{head.depth} and {s.variables}@{s.depth}")


def D_operator(args: Sequence[MultiSeries]) -> MultiSeries:
    """
    ``sum_{j_1..j_d} k[j_1,...,j_d] prod_r d f_r / d k[j_r]``.

    Only first-order cumulants are differentiated; higher-order cumulants
    and the series variables are constants.  A single argument gives the
    first-order Euler operator.
    :param args: series over the same variables and depth
    :return: MultiSeries
    """
    if not args:
        raise ValueError("the D operator needs at least one argument")
    args = list(args)
    _check_same_ring(args)
    indices = [s.first_order_indices() for s in args]
    out = MultiSeries.zero(args[0].variables, args[0].depth)
    for js in itertools.product(*indices):
        term = None
        for s, j in zip(args, js):
            part = s.kappa_derivative(j)
            term = part if term is None else term * part
            if term.is_zero():
                break
        if not term.is_zero():
            out = out + term * KappaPoly.kappa(*js)
    return out


class TensorState:
    """
    Finite sum of tensor products ``f_1 (x) ... (x) f_m`` of series, one
    factor per block of a partition, all over the same variables and depth.
    """

    def __init__(self, terms: Iterable[Sequence[MultiSeries]]):
        self.terms: List[Tuple[MultiSeries, ...]] = [tuple(t) for t in terms]
        if not self.terms:
            raise ValueError("empty tensor state")
        width = {len(t) for t in self.terms}
        if len(width) != 1:
            raise ValueError(f"tensor terms of different widths {sorted(width)}")
        _check_same_ring([f for t in self.terms for f in t])

    @classmethod
    def of(cls, factors: Sequence[MultiSeries]) -> 'TensorState':
        return cls([tuple(factors)])

    @property
    def width(self) -> int:
        return len(self.terms[0])

    def apply_D(self, K: Sequence[int]) -> 'TensorState':
        """
        The operator ``sum_j k[j_G : G in K] (x)_{G in K} d/dk[j_G]`` acting on
        the factors in ``K`` and as the identity on the others.  The fused
        cumulant is a scalar; it is stored in the first factor of ``K``.
        :param K: at least two distinct factor positions
        :return: TensorState
        """
        K = sorted(set(K))
        if len(K) < 2:
            raise ValueError(f"D_K fuses at least two factors, got {K}")
        if K[0] < 0 or K[-1] >= self.width:
            raise ValueError(f"factor positions {K} outside 0..{self.width - 1}")
        out = []
        for term in self.terms:
            indices = [term[g].first_order_indices() for g in K]
            for js in itertools.product(*indices):
                factors = list(term)
                for g, j in zip(K, js):
                    factors[g] = factors[g].kappa_derivative(j)
                if any(f.is_zero() for f in factors):
                    continue
                factors[K[0]] = factors[K[0]] * KappaPoly.kappa(*js)
                out.append(tuple(factors))
        if not out:
            zero = MultiSeries.zero(self.terms[0][0].variables, self.terms[0][0].depth)
            out = [tuple(zero for _ in range(self.width))]
        logger.debug("D_K on %s: %d tensor terms", K, len(out))
        return TensorState(out)

    def product(self) -> MultiSeries:
        """The operator P: multiply out every tensor term and add them."""
        total = None
        for term in self.terms:
            value = term[0]
            for f in term[1:]:
                value = value * f
            total = value if total is None else total + value
        return total


def univariate_coefficients(s: MultiSeries, i: int = 0) -> List[KappaPoly]:
    """Coefficients of ``Y_i^k`` for ``k = 0..depth`` in a series of one variable."""
    out = []
    for k in range(s.depth + 1):
        exps = [0] * s.p
        exps[i] = k
        out.append(s.terms.get(tuple(exps), KappaPoly()))
    return out


def x_of_y(c1: MultiSeries) -> MultiSeries:
    """
    ``X(Y) = Y / C_1(Y)``; exact one degree above ``c1``.
    :param c1: univariate C_1 with constant term 1
    """
    return c1.unit_inverse().shift(0)


def dx_dy(c1: MultiSeries) -> MultiSeries:
    """``dX/dY`` at the depth of ``c1``."""
    return x_of_y(c1).derivative(0)


def dy_dx(c1: MultiSeries) -> MultiSeries:
    """``dY/dX`` expressed in Y, as the inverse of ``dX/dY``."""
    return dx_dy(c1).unit_inverse()


def first_order_moments(c1: MultiSeries, variable: str = 'X') -> MultiSeries:
    """
    ``M_1(X)``, the fixed point of ``M = C_1(X M)``.
    :param c1: univariate C_1 with constant term 1
    :param variable: name of the moment variable
    :return: univariate MultiSeries at the depth of ``c1``
    """
    depth = c1.depth
    base = c1.rename((variable,), (0,))
    moments = MultiSeries.constant((variable,), depth, 1)
    # each pass fixes one more degree
    for _ in range(depth + 1):
        moments = base.compose_univariate(0, [KappaPoly()] + univariate_coefficients(moments))
    return moments


def y_of_x(m1: MultiSeries) -> MultiSeries:
    """``Y(X) = X M_1(X)``, exact one degree above ``m1``."""
    return m1.shift(0)


def specialize_kappa(f: Union[MultiSeries, DifferenceFraction], seed: int,
                     orders: Optional[Iterable[int]] = None) -> Union[MultiSeries, DifferenceFraction]:
    """
    Replace cumulants by the seeded rationals of :func:`kappa_value`.
    :param f: series or fraction
    :param seed: specialisation seed
    :param orders: cumulant orders to replace; every order when None
    """
    return f.specialize(seed, orders)
