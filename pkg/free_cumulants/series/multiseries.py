"""
Truncated multivariate power series with :class:`KappaPoly` coefficients.

A series keeps every monomial of total degree at most ``depth``; anything
above is unknown and never produced by the arithmetic.  Text form is a
header line followed by the sum of terms::

    # variables: Y1,Y2; depth: 4
    k[2]*Y1*Y2 + (3/2)*k[2]*Y1^2*Y2
"""
import logging
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..exceptions import DivisibilityError, NonUnitError, VariableMismatchError
from .kappa import (KappaPoly, format_coefficient, format_monomial, join_terms, parse_term,
                    split_terms)

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Scalar = Union[KappaPoly, int, Fraction]

_HEADER = re.compile(r"^#\s*variables:\s*(?P<vars>[\w,\s]*?)\s*;\s*depth:\s*(?P<depth>-?\d+)\s*$")


def default_variables(p: int, name: str = 'Y') -> Tuple[str, ...]:
    return tuple(f"{name}{i + 1}" for i in range(p))


class MultiSeries:
    """
    Power series in ``variables`` truncated at total degree ``depth``.
    """
    __slots__ = ('variables', 'depth', 'terms')

    def __init__(self, variables: Sequence[str], depth: int,
                 terms: Optional[Dict[Exponents, Scalar]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        self.depth = int(depth)
        clean: Dict[Exponents, KappaPoly] = {}
        if terms:
            for exps, c in terms.items():
                if sum(exps) > self.depth:
                    continue
                c = KappaPoly.lift(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str], depth: int) -> 'MultiSeries':
        return cls(variables, depth)

    @classmethod
    def constant(cls, variables: Sequence[str], depth: int, c: Scalar) -> 'MultiSeries':
        return cls(variables, depth, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables: Sequence[str], depth: int, i: int) -> 'MultiSeries':
        exps = [0] * len(variables)
        exps[i] = 1
        return cls(variables, depth, {tuple(exps): 1})

    @classmethod
    def univariate(cls, variables: Sequence[str], depth: int, i: int,
                   coefficients: Sequence[Scalar]) -> 'MultiSeries':
        """``sum_k coefficients[k] * Y_i^k`` inside a possibly larger variable set."""
        terms = {}
        for k, c in enumerate(coefficients):
            exps = [0] * len(variables)
            exps[i] = k
            terms[tuple(exps)] = c
        return cls(variables, depth, terms)

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] = None, depth: int = None) -> 'MultiSeries':
        """
        Read the text form written by :meth:`dump`.
        :param text: optional header line, then the sum of terms
        :param variables: used when the text has no header
        :param depth: used when the text has no header
        :return: MultiSeries
        """
        lines = [line for line in text.strip().splitlines() if line.strip()]
        if lines and lines[0].lstrip().startswith('#'):
            header = _HEADER.match(lines[0].strip())
            if not header:
                raise ValueError(f"cannot read series header {lines[0]!r}")
            variables = tuple(v for v in re.split(r"[,\s]+", header['vars']) if v)
            depth = int(header['depth'])
            lines = lines[1:]
        if variables is None or depth is None:
            raise ValueError("series text needs a header or explicit variables and depth")
        body = ' '.join(lines).strip()
        terms: Dict[Exponents, KappaPoly] = {}
        if body and body != '0':
            for piece in split_terms(body):
                c, monomial, exps = parse_term(piece, variables)
                terms[exps] = terms.get(exps, KappaPoly()) + KappaPoly({monomial: c})
        return cls(variables, depth, terms)

    # bookkeeping

    @property
    def p(self) -> int:
        return len(self.variables)

    def _check(self, other: 'MultiSeries'):
        if self.variables != other.variables or self.depth != other.depth:
            raise VariableMismatchError(
                f"series over {self.variables}@{self.depth} and {other.variables}@{other.depth}")

    def _lift(self, other) -> 'MultiSeries':
        if isinstance(other, MultiSeries):
            self._check(other)
            return other
        return MultiSeries.constant(self.variables, self.depth, other)

    def copy_with(self, terms: Dict[Exponents, Scalar], depth: int = None) -> 'MultiSeries':
        return MultiSeries(self.variables, self.depth if depth is None else depth, terms)

    def coefficient(self, exps: Sequence[int]) -> KappaPoly:
        exps = tuple(exps)
        if len(exps) != self.p:
            raise VariableMismatchError(f"exponent {exps} for variables {self.variables}")
        if sum(exps) > self.depth:
            raise ValueError(f"degree {sum(exps)} is above the truncation {self.depth}")
        return self.terms.get(exps, KappaPoly())

    def constant_term(self) -> KappaPoly:
        return self.terms.get((0,) * self.p, KappaPoly())

    def low_degree(self) -> int:
        """Smallest total degree present (``depth + 1`` for the zero series)."""
        return min((sum(e) for e in self.terms), default=self.depth + 1)

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, depth: int) -> 'MultiSeries':
        return MultiSeries(self.variables, min(depth, self.depth), self.terms)

    def pad(self, depth: int) -> 'MultiSeries':
        """Same terms, declared exact up to ``depth``; only sound when the caller knows the missing terms vanish."""
        return MultiSeries(self.variables, depth, self.terms)

    # ring operations

    def __add__(self, other) -> 'MultiSeries':
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return self.copy_with(out)

    __radd__ = __add__

    def __neg__(self) -> 'MultiSeries':
        return self.copy_with({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> 'MultiSeries':
        return self + (-self._lift(other))

    def __rsub__(self, other) -> 'MultiSeries':
        return self._lift(other) - self

    def __mul__(self, other) -> 'MultiSeries':
        if not isinstance(other, MultiSeries):
            other = KappaPoly.lift(other)
            return self.copy_with({e: c * other for e, c in self.terms.items()})
        self._check(other)
        depth = self.depth
        right = [(e, sum(e), c) for e, c in other.terms.items()]
        out: Dict[Exponents, KappaPoly] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, d2, c2 in right:
                if d1 + d2 > depth:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                term = c1 * c2
                out[e] = out[e] + term if e in out else term
        return self.copy_with(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'MultiSeries':
        out = MultiSeries.constant(self.variables, self.depth, 1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other: Union[int, Fraction]) -> 'MultiSeries':
        return self * (1 / Fraction(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.variables, self.depth, self.terms) == (other.variables, other.depth, other.terms)

    __hash__ = None

    def first_difference(self, other: 'MultiSeries') -> Optional[Tuple[Exponents, KappaPoly, KappaPoly]]:
        """
        First monomial (by degree, then exponents) where the two series differ,
        up to the smaller depth; None when they agree.
        """
        if self.variables != other.variables:
            raise VariableMismatchError(f"series over {self.variables} and {other.variables}")
        depth = min(self.depth, other.depth)
        keys = sorted((e for e in set(self.terms) | set(other.terms) if sum(e) <= depth),
                      key=lambda e: (sum(e), e))
        for e in keys:
            a, b = self.terms.get(e, KappaPoly()), other.terms.get(e, KappaPoly())
            if a != b:
                return e, a, b
        return None

    def agrees_with(self, other: 'MultiSeries') -> bool:
        return self.first_difference(other) is None

    # operators on the variables

    def theta(self, i: int) -> 'MultiSeries':
        """``Y_i d/dY_i``, degree preserving."""
        return self.copy_with({e: c * e[i] for e, c in self.terms.items() if e[i]})

    def derivative(self, i: int) -> 'MultiSeries':
        """``d/dY_i``; the result is exact one degree lower."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                lowered = list(e)
                lowered[i] -= 1
                out[tuple(lowered)] = c * e[i]
        return self.copy_with(out, self.depth - 1)

    def shift(self, i: int) -> 'MultiSeries':
        """Multiplication by ``Y_i``, which is exact one degree higher."""
        out = {}
        for e, c in self.terms.items():
            raised = list(e)
            raised[i] += 1
            out[tuple(raised)] = c
        return self.copy_with(out, self.depth + 1)

    def times_difference(self, a: int, b: int) -> 'MultiSeries':
        """Multiplication by ``Y_a - Y_b``, exact one degree higher."""
        return self.shift(a) - self.shift(b)

    def divide_difference(self, a: int, b: int) -> 'MultiSeries':
        """
        Exact quotient by ``Y_a - Y_b``.
        :param a: variable index
        :param b: variable index, different from ``a``
        :return: series exact up to ``depth - 1``
        :raises DivisibilityError: if the series does not vanish at ``Y_a = Y_b``
        """
        if a == b:
            raise ValueError("divided difference needs two distinct variables")
        work: Dict[Exponents, KappaPoly] = dict(self.terms)
        quotient: Dict[Exponents, KappaPoly] = {}
        top = max((e[a] for e in work), default=0)
        # Y^m = (Y_a - Y_b) Y^(m - e_a) + Y^(m - e_a + e_b), from the highest power of Y_a down
        for power in range(top, 0, -1):
            for e in [e for e in work if e[a] == power]:
                c = work.pop(e)
                low = list(e)
                low[a] -= 1
                low = tuple(low)
                quotient[low] = quotient[low] + c if low in quotient else c
                moved = list(low)
                moved[b] += 1
                moved = tuple(moved)
                if moved in work:
                    merged = work[moved] + c
                    if merged:
                        work[moved] = merged
                    else:
                        del work[moved]
                else:
                    work[moved] = c
        rest = {e: c for e, c in work.items() if c}
        if rest:
            e = min(rest, key=lambda x: (sum(x), x))
            raise DivisibilityError(
                f"{self._format_exps(e)} keeps {rest[e]} after dividing by "
                f"({self.variables[a]} - {self.variables[b]})")
        return self.copy_with(quotient, self.depth - 1)

    def rename(self, variables: Sequence[str], mapping: Sequence[int]) -> 'MultiSeries':
        """
        Move variable ``k`` to position ``mapping[k]`` of a new variable list.

        Covers permutations, embeddings into more variables and diagonal
        substitutions (two variables sent to the same position).
        :param variables: the new variable list
        :param mapping: target position of each current variable
        :return: MultiSeries with the same depth
        """
        if len(mapping) != self.p:
            raise VariableMismatchError(f"mapping {mapping} for {self.p} variables")
        out: Dict[Exponents, KappaPoly] = {}
        width = len(variables)
        for e, c in self.terms.items():
            moved = [0] * width
            for k, power in enumerate(e):
                moved[mapping[k]] += power
            moved = tuple(moved)
            out[moved] = out[moved] + c if moved in out else c
        return MultiSeries(variables, self.depth, out)

    def swap(self, a: int, b: int) -> 'MultiSeries':
        mapping = list(range(self.p))
        mapping[a], mapping[b] = b, a
        return self.rename(self.variables, mapping)

    def permute(self, order: Sequence[int]) -> 'MultiSeries':
        """Variable ``k`` of the result is variable ``order[k]`` of ``self``."""
        mapping = [0] * self.p
        for k, source in enumerate(order):
            mapping[source] = k
        return self.rename(self.variables, mapping)

    def compose_univariate(self, i: int, coefficients: Sequence[Scalar]) -> 'MultiSeries':
        """
        Substitute ``Y_i := g(Y_i)`` with ``g = sum_k coefficients[k] Y_i^k``.
        :param i: variable index
        :param coefficients: coefficients of g, known at least up to ``depth``; g(0) must vanish
        :return: MultiSeries with the same depth
        """
        if coefficients and KappaPoly.lift(coefficients[0]):
            raise NonUnitError("substituted series must have a zero constant term")
        if len(coefficients) <= self.depth:
            raise ValueError(f"substituted series known to degree {len(coefficients) - 1}, need {self.depth}")
        g = {k: KappaPoly.lift(c) for k, c in enumerate(coefficients) if k and k <= self.depth}
        g = {k: c for k, c in g.items() if c}
        powers: List[Dict[int, KappaPoly]] = [{0: KappaPoly.constant(1)}]
        top = max((e[i] for e in self.terms), default=0)
        for _ in range(top):
            last, nxt = powers[-1], {}
            for d1, c1 in last.items():
                for d2, c2 in g.items():
                    if d1 + d2 <= self.depth:
                        nxt[d1 + d2] = nxt[d1 + d2] + c1 * c2 if d1 + d2 in nxt else c1 * c2
            powers.append(nxt)
        out: Dict[Exponents, KappaPoly] = {}
        for e, c in self.terms.items():
            others = sum(e) - e[i]
            for d, gc in powers[e[i]].items():
                if others + d > self.depth:
                    continue
                new = list(e)
                new[i] = d
                new = tuple(new)
                term = c * gc
                out[new] = out[new] + term if new in out else term
        return self.copy_with(out)

    # operators on the coefficients

    def map_coefficients(self, fn: Callable[[KappaPoly], KappaPoly]) -> 'MultiSeries':
        return self.copy_with({e: fn(c) for e, c in self.terms.items()})

    def kappa_derivative(self, q: int) -> 'MultiSeries':
        """Derivative with respect to the first-order cumulant k[q]."""
        return self.map_coefficients(lambda c: c.derivative(q))

    def first_order_indices(self) -> List[int]:
        return sorted({q for c in self.terms.values() for q in c.first_order_indices()})

    def specialize(self, seed: int, orders: Optional[Iterable[int]] = None) -> 'MultiSeries':
        orders = None if orders is None else tuple(orders)
        return self.map_coefficients(lambda c: c.specialize(seed, orders))

    def content(self) -> Dict[Tuple[int, ...], 'MultiSeries']:
        """Split the coefficients by higher-order content, see :meth:`KappaPoly.content`."""
        groups: Dict[Tuple[int, ...], Dict[Exponents, KappaPoly]] = {}
        for e, c in self.terms.items():
            for key, part in c.content().items():
                groups.setdefault(key, {})[e] = part
        return {key: self.copy_with(terms) for key, terms in groups.items()}

    # unit series

    def _unit_constant(self) -> Fraction:
        c0 = self.constant_term()
        if not c0 or not c0.is_constant():
            raise NonUnitError(f"constant term {c0} is not an invertible number")
        return c0.constant_term()

    def unit_inverse(self) -> 'MultiSeries':
        """
        ``1/f`` for a series whose constant term is a nonzero number.
        :raises NonUnitError: otherwise
        """
        c0 = self._unit_constant()
        g = self / c0 - 1
        one = MultiSeries.constant(self.variables, self.depth, 1)
        out = one
        for _ in range(self.depth):
            out = one - g * out
        return out / c0

    def log_one_minus(self) -> 'MultiSeries':
        """
        ``log(1 - f)`` for a series without constant term.
        :raises NonUnitError: if f has a constant term
        """
        if self.constant_term():
            raise NonUnitError("log(1 - f) needs f without constant term")
        if self.depth < 1:
            return MultiSeries.zero(self.variables, self.depth)
        s = MultiSeries.constant(self.variables, self.depth, Fraction(1, self.depth))
        for k in range(self.depth - 1, 0, -1):
            s = self * s + Fraction(1, k)
        return -(self * s)

    # text

    def _format_exps(self, e: Exponents) -> str:
        parts = [v + (f"^{k}" if k > 1 else '') for v, k in zip(self.variables, e) if k]
        return '*'.join(parts)

    def __str__(self) -> str:
        pieces = []
        for e in sorted(self.terms, key=lambda x: (sum(x), x)):
            ys = self._format_exps(e)
            for m, c in sorted(self.terms[e].terms.items()):
                rest = '*'.join(p for p in (format_monomial(m), ys) if p)
                pieces.append(format_coefficient(c, rest))
        return join_terms(pieces)

    def dump(self) -> str:
        return f"# variables: {','.join(self.variables)}; depth: {self.depth}\n{self}\n"

    def __repr__(self) -> str:
        return f"MultiSeries({self.variables}, depth={self.depth}, {len(self.terms)} terms)"
