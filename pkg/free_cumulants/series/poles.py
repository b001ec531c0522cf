"""
Series divided by products of variable differences.

A :class:`DifferenceFraction` stands for ``N / prod_{a<b} (Y_a - Y_b)^e_ab``.
Every fraction built here is balanced: the numerator has no term of degree
below the total pole order ``E``.  The numerator is then kept exact up to
``depth + E`` and the value is known up to ``depth``; products of balanced
fractions stay exact without extra terms.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from ..exceptions import VariableMismatchError
from .kappa import KappaPoly
from .multiseries import MultiSeries

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _canonical_poles(poles: Dict[Pair, int]) -> Dict[Pair, int]:
    out = {}
    for (a, b), e in poles.items():
        if a == b:
            raise ValueError(f"pole at Y_{a} - Y_{a}")
        if a > b:
            raise ValueError(f"pole pairs are stored increasing, got {(a, b)}")
        if e:
            out[(a, b)] = e
    return out


class DifferenceFraction:
    """
    ``numerator / prod (Y_a - Y_b)^e`` with the value exact up to ``depth``.
    """
    __slots__ = ('numerator', 'poles', 'depth')

    def __init__(self, numerator: MultiSeries, poles: Optional[Dict[Pair, int]] = None, depth: int = None):
        self.poles = _canonical_poles(dict(poles or {}))
        order = sum(self.poles.values())
        self.depth = numerator.depth - order if depth is None else depth
        if numerator.depth != self.depth + order:
            raise VariableMismatchError(
                f"numerator depth {numerator.depth} does not match depth {self.depth} + pole order {order}")
        if numerator.low_degree() < order:
            raise ValueError(f"unbalanced fraction: numerator starts at degree {numerator.low_degree()} "
                             f"below the pole order {order}")
        self.numerator = numerator

    @classmethod
    def from_series(cls, s: MultiSeries) -> 'DifferenceFraction':
        return cls(s, {}, s.depth)

    @classmethod
    def double_pole(cls, variables: Sequence[str], depth: int, a: int, b: int) -> 'DifferenceFraction':
        """The kernel ``Y_a Y_b / (Y_a - Y_b)^2``."""
        a, b = min(a, b), max(a, b)
        one = MultiSeries.constant(variables, depth, 1)
        numerator = one.shift(a).shift(b)
        return cls(numerator, {(a, b): 2}, depth)

    @classmethod
    def simple_pole(cls, numerator: MultiSeries, a: int, b: int) -> 'DifferenceFraction':
        """``numerator / (Y_a - Y_b)`` for a numerator exact one degree above the value."""
        if a < b:
            return cls(numerator, {(a, b): 1})
        return cls(-numerator, {(b, a): 1})

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.numerator.variables

    @property
    def order(self) -> int:
        return sum(self.poles.values())

    def _pad(self, depth: int) -> MultiSeries:
        # sound for products only: the extra degrees meet partners of too high a degree
        return self.numerator.pad(depth)

    def _raise_poles(self, poles: Dict[Pair, int]) -> MultiSeries:
        numerator = self.numerator
        for (a, b), e in poles.items():
            for _ in range(e - self.poles.get((a, b), 0)):
                numerator = numerator.times_difference(a, b)
        return numerator

    def _lift(self, other) -> 'DifferenceFraction':
        if isinstance(other, DifferenceFraction):
            if other.variables != self.variables or other.depth != self.depth:
                raise VariableMismatchError(
                    f"fractions over {self.variables}@{self.depth} and {other.variables}@{other.depth}")
            return other
        if isinstance(other, MultiSeries):
            if other.variables != self.variables or other.depth != self.depth:
                raise VariableMismatchError(
                    f"fraction over {self.variables}@{self.depth} and series over {other.variables}@{other.depth}")
            return DifferenceFraction.from_series(other)
        return DifferenceFraction.from_series(MultiSeries.constant(self.variables, self.depth, other))

    def __add__(self, other) -> 'DifferenceFraction':
        other = self._lift(other)
        poles = dict(self.poles)
        for pair, e in other.poles.items():
            poles[pair] = max(poles.get(pair, 0), e)
        numerator = self._raise_poles(poles) + other._raise_poles(poles)
        return DifferenceFraction(numerator, poles, self.depth)

    __radd__ = __add__

    def __neg__(self) -> 'DifferenceFraction':
        return DifferenceFraction(-self.numerator, self.poles, self.depth)

    def __sub__(self, other) -> 'DifferenceFraction':
        return self + (-self._lift(other))

    def __rsub__(self, other) -> 'DifferenceFraction':
        return self._lift(other) - self

    def __mul__(self, other) -> 'DifferenceFraction':
        if isinstance(other, (KappaPoly, int, Fraction)):
            return DifferenceFraction(self.numerator * other, self.poles, self.depth)
        other = self._lift(other)
        poles = dict(self.poles)
        for pair, e in other.poles.items():
            poles[pair] = poles.get(pair, 0) + e
        depth = self.depth + sum(poles.values())
        numerator = self._pad(depth) * other._pad(depth)
        return DifferenceFraction(numerator, poles, self.depth)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'DifferenceFraction':
        out = self._lift(1)
        for _ in range(k):
            out = out * self
        return out

    def theta(self, i: int) -> 'DifferenceFraction':
        """
        ``Y_i d/dY_i`` by the quotient rule; every pole touching ``i`` grows by one.
        """
        touching = [pair for pair in self.poles if i in pair]
        if not touching:
            return DifferenceFraction(self.numerator.theta(i), self.poles, self.depth)
        first = self.numerator.theta(i)
        for a, b in touching:
            first = first.times_difference(a, b)
        second = None
        for pair in touching:
            # theta_i (Y_a - Y_b) is +Y_i or -Y_i
            term = self.numerator.shift(i) * (self.poles[pair] if pair[0] == i else -self.poles[pair])
            for other in touching:
                if other != pair:
                    term = term.times_difference(*other)
            second = term if second is None else second + term
        poles = dict(self.poles)
        for pair in touching:
            poles[pair] += 1
        return DifferenceFraction(first - second, poles, self.depth)

    def rename(self, variables: Sequence[str], mapping: Sequence[int]) -> 'DifferenceFraction':
        """
        Move variable ``k`` to position ``mapping[k]``; the mapping must be injective.
        """
        if len(set(mapping)) != len(mapping):
            raise ValueError("fractions only allow injective variable maps")
        numerator = self.numerator.rename(variables, mapping)
        poles: Dict[Pair, int] = {}
        sign = 1
        for (a, b), e in self.poles.items():
            a, b = mapping[a], mapping[b]
            if a > b:
                a, b = b, a
                sign *= (-1) ** e
            poles[(a, b)] = e
        return DifferenceFraction(numerator * sign, poles, self.depth)

    def permute(self, order: Sequence[int]) -> 'DifferenceFraction':
        """Variable ``k`` of the result is variable ``order[k]`` of ``self``."""
        mapping = [0] * len(order)
        for k, source in enumerate(order):
            mapping[source] = k
        return self.rename(self.variables, mapping)

    def swap(self, a: int, b: int) -> 'DifferenceFraction':
        mapping = list(range(len(self.variables)))
        mapping[a], mapping[b] = b, a
        return self.rename(self.variables, mapping)

    def map_numerator(self, fn) -> 'DifferenceFraction':
        return DifferenceFraction(fn(self.numerator), self.poles, self.depth)

    def specialize(self, seed: int, orders: Optional[Iterable[int]] = None) -> 'DifferenceFraction':
        return self.map_numerator(lambda s: s.specialize(seed, orders))

    def content(self) -> Dict[Tuple[int, ...], 'DifferenceFraction']:
        return {key: DifferenceFraction(part, self.poles, self.depth)
                for key, part in self.numerator.content().items()}

    def reduce(self) -> MultiSeries:
        """
        The value as a power series, dividing out every pole.
        :return: MultiSeries exact up to ``depth``
        :raises DivisibilityError: when the fraction is not a power series
        """
        out = self.numerator
        for (a, b), e in sorted(self.poles.items()):
            for _ in range(e):
                out = out.divide_difference(a, b)
        logger.debug("reduced fraction with poles %s to depth %d", self.poles, out.depth)
        return out

    def compose_univariate(self, coefficients: Sequence[Union[KappaPoly, int, Fraction]],
                           variables: Sequence[str] = None) -> 'DifferenceFraction':
        """
        Substitute ``Y_i := g(X_i)`` in every variable.

        ``g(X_a) - g(X_b) = (X_a - X_b) Q_ab`` with a unit ``Q_ab``, so the
        poles stay where they are and the numerator picks up ``Q_ab^-e``.
        :param coefficients: coefficients of g, g(0) = 0, g'(0) a nonzero number,
            known at least up to ``depth + order + 1``
        :param variables: names of the new variables (default: unchanged)
        :return: DifferenceFraction in the new variables
        """
        variables = tuple(variables or self.variables)
        top = self.depth + self.order
        numerator = self.numerator.rename(variables, range(len(variables)))
        for i in range(len(variables)):
            numerator = numerator.compose_univariate(i, coefficients)
        for (a, b), e in self.poles.items():
            g_a = MultiSeries.univariate(variables, top + 1, a, coefficients[:top + 2])
            g_b = MultiSeries.univariate(variables, top + 1, b, coefficients[:top + 2])
            q = (g_a - g_b).divide_difference(a, b)
            numerator = numerator * q.unit_inverse() ** e
        return DifferenceFraction(numerator, self.poles, self.depth)

    def _denominator(self) -> str:
        names = self.variables
        return '*'.join(f"({names[a]}-{names[b]})" + (f"^{e}" if e > 1 else '')
                        for (a, b), e in sorted(self.poles.items()))

    def __str__(self) -> str:
        if not self.poles:
            return str(self.numerator)
        return f"[{self.numerator}] / {self._denominator()}"

    def dump(self) -> str:
        """The numerator in the :meth:`MultiSeries.dump` form under a comment line naming the denominator."""
        return f"# denominator: {self._denominator() or 1}\n{self.numerator.dump()}"

    def __repr__(self) -> str:
        return f"DifferenceFraction(poles={self.poles}, depth={self.depth})"
