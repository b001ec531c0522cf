"""
Polynomials in the free cumulants with exact rational coefficients.

A cumulant symbol is a sorted tuple of positive integers: ``(3,)`` is the
first-order cumulant k[3] and ``(2, 1)`` the second-order k[2,1].  A
monomial is a sorted tuple of ``(symbol, exponent)`` pairs.  Text form:
``(3/2)*k[2]*k[1,1]^2 - k[3]``.
"""
import logging
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

Symbol = Tuple[int, ...]
Monomial = Tuple[Tuple[Symbol, int], ...]
Number = Union[int, Fraction]

_FACTOR = re.compile(r"^(?:k\[(?P<index>[\d,\s]+)\]|(?P<var>[A-Za-z_]\w*))(?:\^(?P<exp>\d+))?$")
_NUMBER = re.compile(r"^\(?\s*(?P<num>[+-]?\d+)\s*(?:/\s*(?P<den>\d+))?\s*\)?$")


def symbol(*index: int) -> Symbol:
    """Canonical cumulant symbol: indices sorted decreasingly, all positive."""
    if not index or any(int(i) <= 0 for i in index):
        raise ValueError(f"cumulant indices must be positive: {index}")
    return tuple(sorted((int(i) for i in index), reverse=True))


def _merge(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    powers = dict(a)
    for s, e in b:
        powers[s] = powers.get(s, 0) + e
    return tuple(sorted(powers.items()))


def _format_symbol(s: Symbol) -> str:
    return 'k[' + ','.join(str(i) for i in s) + ']'


def format_monomial(monomial: Monomial) -> str:
    return '*'.join(_format_symbol(s) + (f"^{e}" if e > 1 else '') for s, e in monomial)


def format_coefficient(c: Fraction, rest: str) -> str:
    """Signed piece ``+c*rest`` for :func:`join_terms`; ``rest`` may be empty."""
    sign = '-' if c < 0 else '+'
    c = abs(c)
    if c.denominator == 1:
        number = str(c.numerator)
    else:
        number = f"({c.numerator}/{c.denominator})"
    if not rest:
        return sign + number
    if c == 1:
        return sign + rest
    return sign + number + '*' + rest


def join_terms(pieces: Sequence[str]) -> str:
    """Join signed pieces ``'+x'``, ``'-y'`` into ``x - y``."""
    if not pieces:
        return '0'
    text = ' '.join(p[0] + ' ' + p[1:] for p in pieces)
    return text[2:] if text.startswith('+') else '-' + text[2:]


def split_terms(text: str) -> List[str]:
    """Split at the top-level ``+`` and ``-`` signs, keeping the sign on each piece."""
    pieces, depth, current = [], 0, ''
    for ch in text.replace(' ', ''):
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
        if ch in '+-' and depth == 0 and current and current[-1] not in '*^':
            pieces.append(current)
            current = ''
        current += ch
    if current:
        pieces.append(current)
    return pieces


def parse_term(piece: str, variables: Sequence[str] = ()) -> Tuple[Fraction, Monomial, Tuple[int, ...]]:
    """
    Read one product ``c*k[..]^e*...*Y1^a*...``.
    :param piece: the term, with an optional leading sign
    :param variables: names of the series variables allowed in the term
    :return: (coefficient, cumulant monomial, exponent vector over ``variables``)
    """
    sign = 1
    if piece[:1] in '+-':
        sign = -1 if piece[0] == '-' else 1
        piece = piece[1:]
    coefficient = Fraction(sign)
    powers: Dict[Symbol, int] = {}
    exps = [0] * len(variables)
    for factor in _split_factors(piece):
        number = _NUMBER.match(factor)
        if number:
            coefficient *= Fraction(int(number['num']), int(number['den'] or 1))
            continue
        match = _FACTOR.match(factor)
        if not match:
            raise ValueError(f"cannot read factor {factor!r}")
        exp = int(match['exp'] or 1)
        if match['index'] is not None:
            s = symbol(*(int(t) for t in match['index'].split(',') if t.strip()))
            powers[s] = powers.get(s, 0) + exp
        elif match['var'] in variables:
            exps[list(variables).index(match['var'])] += exp
        else:
            raise ValueError(f"unknown variable {match['var']!r}")
    return coefficient, tuple(sorted(powers.items())), tuple(exps)


def _split_factors(piece: str) -> List[str]:
    factors, depth, current = [], 0, ''
    for ch in piece:
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
        if ch == '*' and depth == 0:
            factors.append(current)
            current = ''
        else:
            current += ch
    factors.append(current)
    return [f for f in factors if f]


def kappa_value(s: Symbol, seed: int) -> Fraction:
    """
    Deterministic nonzero rational attached to a cumulant symbol.
    :param s: cumulant symbol
    :param seed: user seed
    :return: Fraction with numerator and denominator in 1..9, random sign
    """
    rng = np.random.default_rng([int(seed), len(s)] + list(s))
    numerator = int(rng.integers(1, 10))
    denominator = int(rng.integers(1, 10))
    if rng.random() < 0.5:
        numerator = -numerator
    return Fraction(numerator, denominator)


class KappaPoly:
    """
    Sparse polynomial in cumulant symbols, coefficients in Q.

    Instances are treated as immutable; zero coefficients are never stored.
    """
    __slots__ = ('terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Monomial, Number]] = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self.terms: Dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def constant(cls, c: Number) -> 'KappaPoly':
        return cls({(): c})

    @classmethod
    def kappa(cls, *index: int) -> 'KappaPoly':
        """The single symbol k[index]."""
        return cls({((symbol(*index), 1),): 1})

    @classmethod
    def lift(cls, value: Union['KappaPoly', Number]) -> 'KappaPoly':
        if isinstance(value, KappaPoly):
            return value
        return cls.constant(value)

    @classmethod
    def parse(cls, text: str) -> 'KappaPoly':
        """
        Read ``"3*k[2]*k[1] + k[2,1] - (1/2)"``.
        :param text: polynomial text
        :return: KappaPoly
        """
        out: Dict[Monomial, Fraction] = {}
        if text.strip() in ('', '0'):
            return cls()
        for piece in split_terms(text):
            c, m, _ = parse_term(piece)
            out[m] = out.get(m, Fraction(0)) + c
        return cls(out)

    # arithmetic

    def __add__(self, other) -> 'KappaPoly':
        other = KappaPoly.lift(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return KappaPoly(out)

    __radd__ = __add__

    def __neg__(self) -> 'KappaPoly':
        return KappaPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> 'KappaPoly':
        return self + (-KappaPoly.lift(other))

    def __rsub__(self, other) -> 'KappaPoly':
        return KappaPoly.lift(other) - self

    def __mul__(self, other) -> 'KappaPoly':
        if not isinstance(other, KappaPoly):
            other = Fraction(other)
            if not other:
                return KappaPoly()
            return KappaPoly({m: c * other for m, c in self.terms.items()})
        if not self.terms or not other.terms:
            return KappaPoly()
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _merge(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return KappaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'KappaPoly':
        out = KappaPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other: Number) -> 'KappaPoly':
        return self * (1 / Fraction(other))

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = KappaPoly.constant(other)
        if not isinstance(other, KappaPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # inspection

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def symbols(self) -> List[Symbol]:
        return sorted({s for m in self.terms for s, _ in m})

    def first_order_indices(self) -> List[int]:
        return sorted({s[0] for m in self.terms for s, _ in m if len(s) == 1})

    def coefficient(self, monomial: Union[str, Monomial]) -> Fraction:
        if isinstance(monomial, str):
            _, monomial, _ = parse_term(monomial)
        return self.terms.get(monomial, Fraction(0))

    # calculus on the cumulants

    def derivative(self, q: int) -> 'KappaPoly':
        """Partial derivative with respect to the first-order cumulant k[q]."""
        s = (q,)
        out: Dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            powers = dict(m)
            e = powers.get(s, 0)
            if not e:
                continue
            if e == 1:
                del powers[s]
            else:
                powers[s] = e - 1
            key = tuple(sorted(powers.items()))
            out[key] = out.get(key, 0) + c * e
        return KappaPoly(out)

    def substitute(self, values: Callable[[Symbol], Optional['KappaPoly']]) -> 'KappaPoly':
        """
        Replace symbols by polynomials.
        :param values: maps a symbol to its replacement, or None to keep it
        :return: KappaPoly
        """
        cache: Dict[Symbol, Optional[KappaPoly]] = {}
        out = KappaPoly()
        for m, c in self.terms.items():
            term = KappaPoly.constant(c)
            kept = []
            for s, e in m:
                if s not in cache:
                    cache[s] = values(s)
                if cache[s] is None:
                    kept.append((s, e))
                else:
                    term = term * cache[s] ** e
            out = out + term * KappaPoly({tuple(kept): 1})
        return out

    def specialize(self, seed: int, orders: Optional[Iterable[int]] = None) -> 'KappaPoly':
        """
        Replace cumulants by the seeded rationals of :func:`kappa_value`.
        :param seed: specialisation seed
        :param orders: cumulant orders to replace (all when None)
        :return: KappaPoly (a constant when every order is replaced)
        """
        orders = None if orders is None else set(orders)

        def value(s: Symbol):
            if orders is not None and len(s) not in orders:
                return None
            return KappaPoly.constant(kappa_value(s, seed))

        return self.substitute(value)

    def content(self) -> Dict[Tuple[int, ...], 'KappaPoly']:
        """
        Split by higher-order content: the sorted orders (>= 2) of the
        symbols of each monomial, with multiplicity.
        :return: mapping content class -> part of the polynomial
        """
        groups: Dict[Tuple[int, ...], Dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            key = tuple(sorted((len(s) for s, e in m if len(s) > 1 for _ in range(e)), reverse=True))
            groups.setdefault(key, {})[m] = c
        return {k: KappaPoly(v) for k, v in groups.items()}

    def __str__(self) -> str:
        pieces = [format_coefficient(c, format_monomial(m)) for m, c in sorted(self.terms.items())]
        return join_terms(pieces)

    def __repr__(self) -> str:
        return f"KappaPoly({self})"


ZERO = KappaPoly()
ONE = KappaPoly.constant(1)
