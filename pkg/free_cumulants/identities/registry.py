"""
Registry of the functional identities checked coefficient by coefficient.

Every identity is a :class:`Identity` entry: a generator of
:class:`Comparison` pairs plus its depth guard and default run settings.
:func:`verify` runs one entry and returns an :class:`IdentityReport`; the
verdict is ``'pass'`` when every coefficient up to the depth matches
exactly, else the first mismatch.

All checks are done in the Y variables; ``dY/dX`` is computed as the inverse
of ``dX/dY = (C_1 - Y C_1')/C_1^2``, so no series is ever reversed except in
the routes that compare against moments.
"""
import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from ..cumulants import moment_series
from ..exceptions import UnknownIdentityError, check_size
from ..generating import (build_barC, build_C, build_hatC, build_hatC_pi, build_tildeC, build_tildeC2, c2_ring,
                          embed, pair_block_shape)
from ..generating.builders import MAX_SPECIALIZED_DEPTH, MAX_SYMBOLIC_DEPTH
from ..series import (DifferenceFraction, KappaPoly, MultiSeries, default_variables, dx_dy, first_order_moments,
                      univariate_coefficients, x_of_y, y_of_x)
from .functional import (FamilyKey, Pair, YRing, as_fraction, c2c2_families, c2c2_family, functional_moments,
                         simplification_weight, tilde_weight, tree_sum)

logger = logging.getLogger(__name__)

MODES = ('symbolic', 'specialized')
DEFAULT_SEED = 42

Side = Union[MultiSeries, DifferenceFraction, KappaPoly]


@dataclass(frozen=True)
class Comparison:
    """Two computations of the same quantity; ``label`` names it in reports."""
    label: str
    lhs: Side
    rhs: Side


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    check: Callable[[int, Optional[int], Optional[int]], Iterator[Comparison]]
    default_depth: int
    default_mode: str = 'symbolic'
    orders: Tuple[int, ...] = ()
    max_depth: Optional[int] = None
    conjecture: bool = False


@dataclass
class IdentityReport:
    name: str
    depth: int
    mode: str
    seed: Optional[int]
    verdict: Union[str, Dict[str, str]]
    millis: int
    conjecture: bool = False
    checked: List[str] = field(default_factory=list)
    series: List[Dict[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == 'pass'

    def to_json(self) -> Dict[str, object]:
        out = {'name': self.name, 'depth': self.depth, 'mode': self.mode, 'verdict': self.verdict,
               'millis': self.millis}
        if self.seed is not None:
            out['seed'] = self.seed
        if self.conjecture:
            out['conjecture'] = True
        if self.series:
            out['series'] = self.series
        return out

    def __str__(self) -> str:
        status = 'pass' if self.passed else 'FAIL'
        if self.conjecture:
            status = f"conjecture holds to D={self.depth}" if self.passed else 'conjecture FAILS'
        seed = '' if self.seed is None else f" seed={self.seed}"
        line = f"{self.name:<26} D={self.depth} {self.mode}{seed}: {status} ({self.millis} ms)"
        if not self.passed:
            line += f"\n  at {self.verdict['monomial']}: {self.verdict['lhs']} != {self.verdict['rhs']}"
        return line


# comparison of the two sides

def dump_side(side: Side) -> str:
    """Text form of one side, with the variables and depth header for series."""
    if isinstance(side, (MultiSeries, DifferenceFraction)):
        return side.dump()
    return f"{side}\n"


def _aligned(lhs: DifferenceFraction, rhs: DifferenceFraction) -> Tuple[MultiSeries, MultiSeries]:
    # the same poles on both sides make the numerators comparable
    return (lhs + rhs * 0).numerator, (rhs + lhs * 0).numerator


def first_mismatch(comparison: Comparison) -> Optional[Dict[str, str]]:
    """
    :return: None when both sides agree, else the first differing monomial and
        both coefficients (numerators over common poles for fractions)
    """
    lhs, rhs = comparison.lhs, comparison.rhs
    if isinstance(lhs, KappaPoly) or isinstance(rhs, KappaPoly):
        lhs, rhs = KappaPoly.lift(lhs), KappaPoly.lift(rhs)
        if lhs == rhs:
            return None
        return {'monomial': comparison.label, 'lhs': str(lhs), 'rhs': str(rhs)}
    if isinstance(lhs, DifferenceFraction) or isinstance(rhs, DifferenceFraction):
        lhs, rhs = _aligned(as_fraction(lhs), as_fraction(rhs))
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    exps, a, b = diff
    return {'monomial': f"{comparison.label} {lhs._format_exps(exps)}", 'lhs': str(a), 'rhs': str(b)}


# helpers in the Y variables

def _embed_fraction(f: DifferenceFraction, p: int, positions) -> DifferenceFraction:
    return f.rename(default_variables(p), list(positions))


def _swap_sum(f: DifferenceFraction, p: int) -> DifferenceFraction:
    """``f`` plus its images under 1<->2, ..., 1<->p."""
    total = f
    for b in range(1, p):
        total = total + f.swap(0, b)
    return total


def _euler_term(ring: YRing, f: DifferenceFraction, a: int) -> DifferenceFraction:
    """``Y_a d/dY_a (dY_a/dX_a f / C_1(Y_a)^2)``."""
    return (f * (ring.dy_dx[a] * ring.inverse_c1[a] ** 2)).theta(a)


def _zero(ring: YRing) -> MultiSeries:
    return MultiSeries.zero(ring.variables, ring.depth)


# the identities

def _order1_of_order2(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    c1 = build_C(1, depth, seed)
    x = x_of_y(c1)
    # X_1 - X_2 = (Y_1 - Y_2) Q
    q = (embed(x, 2, [0]) - embed(x, 2, [1])).divide_difference(0, 1)
    dx = dx_dy(c1)
    ratio = embed(dx, 2, [0]) * embed(dx, 2, [1]) * q.unit_inverse() ** 2
    rhs = DifferenceFraction((-ratio).shift(0).shift(1), {(0, 1): 2}, depth)
    yield Comparison('C-ring_2', c2_ring(depth, seed), rhs)


def _order1_of_order3(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    ring = YRing(3, depth, seed)
    t2 = build_tildeC2(depth, 'log', seed)
    product = as_fraction(embed(t2, 3, (0, 1)) * embed(t2, 3, (0, 2))) \
        - ring.double_pole(0, 1) * ring.double_pole(0, 2)
    terms = _swap_sum(_euler_term(ring, product, 0), 3)
    yield Comparison('C-tilde_3', as_fraction(build_tildeC(3, depth, seed)), -terms)


def _order2_of_order3(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    ring = YRing(3, depth, seed)
    bars = _zero(ring)
    for a, b in ((0, 1), (0, 2), (1, 2)):
        blocks, tree = pair_block_shape(3, a, b)
        bars = bars + build_barC(blocks, tree, 3, depth, 'auto', seed)
    c2 = build_C(2, depth, seed)
    ringed = c2_ring(depth, seed)
    mixed = _embed_fraction(ringed, 3, (0, 2)) * embed(c2, 3, (0, 1)) \
        + _embed_fraction(ringed, 3, (0, 1)) * embed(c2, 3, (0, 2))
    terms = _swap_sum(_euler_term(ring, mixed, 0), 3)
    yield Comparison('C-bar pairs', as_fraction(bars), -terms)


def _prop_p_minus_1(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    ring = YRing(p, depth, seed)
    top = build_C(p - 1, depth, seed)
    ringed = c2_ring(depth, seed)
    for a in range(p):
        for b in range(a + 1, p):
            blocks, tree = pair_block_shape(p, a, b)
            bar = build_barC(blocks, tree, p, depth, 'auto', seed)
            pole = _embed_fraction(ringed, p, (a, b))
            terms = _euler_term(ring, pole * embed(top, p, [i for i in range(p) if i != b]), a) \
                + _euler_term(ring, pole * embed(top, p, [i for i in range(p) if i != a]), b)
            yield Comparison(f"C-bar{{{a + 1},{b + 1}}}", as_fraction(bar), -terms)


def _by_content(label: str, residual: DifferenceFraction,
                only: Optional[Tuple[int, ...]] = None) -> Iterator[Comparison]:
    zero = residual * 0
    parts = residual.content()
    if only is not None:
        parts = {only: parts.get(only, zero)}
    for key in sorted(parts):
        name = 'C_1 only' if not key else 'k^' + '.'.join(str(k) for k in key)
        yield Comparison(f"{label} [{name}]", parts[key], zero)


def _simplifications(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    ring = YRing(p, depth, seed)
    yield from _by_content(f"tree sum p={p}", as_fraction(tree_sum(ring, simplification_weight(ring))))


# families grown from C-tilde_2 on {Y1, Y4}
C2C2_ORIGIN = (0, 3)
C2C2_TAGS = {
    'a': ((0, 1), (2, 3)),
    'b': ((0, 1), (0, 2)),
    'c': ((0, 1), (1, 2)),
}


@lru_cache(maxsize=None)
def _c2c2_families(depth: int, seed: Optional[int]) -> Dict[FamilyKey, DifferenceFraction]:
    return c2c2_families(YRing(4, depth, seed))


def _braces(points) -> str:
    return '{' + ','.join(str(a + 1) for a in points) + '}'


def _family_label(key: FamilyKey) -> str:
    origin, (first, second) = key
    return f"C-ring_2{_braces(origin)} C_2{_braces(first)} C_2{_braces(second)}"


def _fourth_c2c2(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    ring = YRing(4, depth, seed)
    residual = as_fraction(tree_sum(ring, simplification_weight(ring)))
    yield from _by_content('tree sum p=4', residual, (2, 2))
    families = _c2c2_families(depth, seed)
    for key in sorted(families):
        yield Comparison(_family_label(key), families[key], residual * 0)
    total = None
    for key in sorted(families):
        total = families[key] if total is None else total + families[key]
    yield Comparison('C_2 C_2 families', total, residual.content().get((2, 2), residual * 0))


def _fourth_family(tags: Tuple[Pair, Pair]) -> Callable[[int, Optional[int], Optional[int]], Iterator[Comparison]]:
    key = c2c2_family(C2C2_ORIGIN, *tags)

    def check(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
        family = _c2c2_families(depth, seed)[key]
        yield Comparison(_family_label(key), family, family * 0)
    return check


def _conjecture_order1(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    ring = YRing(p, depth, seed)
    yield Comparison(f"C-tilde tree sum p={p}", as_fraction(tree_sum(ring, tilde_weight(ring))), _zero(ring))


HAT_SHAPES = (
    (((0, 1),), 2),
    (((0, 1, 2),), 3),
    (((0,), (1, 2)), 3),
    (((0, 1), (2, 3)), 4),
    (((0,), (1,), (2, 3)), 4),
)


def _hatC_defs(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    for blocks, size in HAT_SHAPES:
        label = 'C-hat' + ''.join('{' + ','.join(str(a + 1) for a in b) + '}' for b in blocks)
        yield Comparison(label, build_hatC_pi(blocks, size, depth, 'closed', seed),
                         build_hatC_pi(blocks, size, depth, 'sum', seed))
    yield Comparison('C-hat_3', build_hatC(3, depth, 'closed', seed), build_hatC(3, depth, 'sum', seed))


def _lagrange(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    c1 = build_C(1, depth, seed)
    y = y_of_x(first_order_moments(c1))
    for lam in range(1, depth + 1):
        for j in range(1, lam + 1):
            for k in range(j):
                lhs = univariate_coefficients(c1 ** (lam - k))[lam - j]
                rhs = univariate_coefficients(y ** (j - k))[lam - k] * (lam - k) / (j - k)
                yield Comparison(f"lambda={lam} j={j} K={k}", lhs, rhs)


def _second_order_functional(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    yield Comparison('M_2', functional_moments(2, depth, 'pole', seed), moment_series(2, depth, 'analytic', seed))


def _functional(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    method = 'analytic' if p <= 2 else 'tree'
    yield Comparison(f"M_{p} (H)", functional_moments(p, depth, 'H', seed), moment_series(p, depth, method, seed))
    if p >= 3:
        yield Comparison(f"M_{p} (pole)", functional_moments(p, depth, 'pole', seed),
                         moment_series(p, depth, method, seed))


def _c2dd(depth: int, seed: Optional[int], p: Optional[int]) -> Iterator[Comparison]:
    c1 = build_C(1, depth, seed)
    yield Comparison('C_1 - Y C_1\'', c1 - c1.derivative(0).shift(0), c1 ** 2 * dx_dy(c1))


REGISTRY: Dict[str, Identity] = {entry.name: entry for entry in (
    Identity('order1_of_order2', "C-tilde_2 minus the double pole, in the moment variables",
             _order1_of_order2, 8),
    Identity('order1_of_order3', "first-order cancellation at order 3", _order1_of_order3, 6),
    Identity('order2_of_order3', "second-order cancellation at order 3", _order2_of_order3, 6),
    Identity('prop_p_minus_1', "order p-1 cumulants cancel at order p, pair by pair", _prop_p_minus_1, 6,
             orders=(4, 5)),
    Identity('simplifications', "H-tree sum minus the primed C-tree sum, per content class", _simplifications, 5,
             'specialized', orders=(3, 4)),
    Identity('fourth_c2c2', "the C_2 C_2 terms of the order-4 simplification, in total and family by family",
             _fourth_c2c2, 5, 'specialized'),
    Identity('fourth_c2c2_a', "order-4 C_2 C_2 terms from C-tilde_2{1,4} with C_2 on {1,2} and {3,4}",
             _fourth_family(C2C2_TAGS['a']), 5, 'specialized'),
    Identity('fourth_c2c2_b', "order-4 C_2 C_2 terms from C-tilde_2{1,4} with C_2 on {1,2} and {1,3}",
             _fourth_family(C2C2_TAGS['b']), 5, 'specialized'),
    Identity('fourth_c2c2_c', "order-4 C_2 C_2 terms from C-tilde_2{1,4} with C_2 on {1,2} and {2,3}",
             _fourth_family(C2C2_TAGS['c']), 5, 'specialized'),
    Identity('conjecture_order1', "C-tilde tree sum minus the pure double-pole trees", _conjecture_order1, 5,
             'specialized', orders=(3, 4), conjecture=True),
    Identity('hatC_defs', "closed forms of the fused series against their definitions", _hatC_defs, 6),
    Identity('lagrange', "Lagrange inversion between C_1 and Y(X)", _lagrange, 8),
    Identity('second_order_functional', "M_2 from the double-pole functional relation",
             _second_order_functional, 6, max_depth=7),
    Identity('c2dd', "C_1 - Y C_1' = C_1^2 dX/dY", _c2dd, 8),
    Identity('functional', "M_p from the H tree sum against the moment tables", _functional, 5,
             orders=(2, 3), max_depth=7),
)}


def identity_names() -> List[str]:
    return sorted(REGISTRY)


def get_identity(name: str) -> Identity:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownIdentityError(f"no identity named {name!r}; known: {', '.join(identity_names())}") from None


def _resolve(entry: Identity, depth: Optional[int], mode: Optional[str],
             seed: Optional[int]) -> Tuple[int, str, Optional[int]]:
    mode = mode or (entry.default_mode if seed is None else 'specialized')
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {', '.join(MODES)}")
    if mode == 'symbolic':
        seed = None
    elif seed is None:
        seed = DEFAULT_SEED
    depth = entry.default_depth if depth is None else depth
    limit = MAX_SYMBOLIC_DEPTH if seed is None else MAX_SPECIALIZED_DEPTH
    if entry.max_depth is not None:
        limit = min(limit, entry.max_depth)
    check_size('depth', depth, limit)
    return depth, mode, seed


def verify(name: str, depth: Optional[int] = None, mode: Optional[str] = None, seed: Optional[int] = None,
           p: Optional[int] = None, dump: bool = False) -> IdentityReport:
    """
    Check one registered identity.
    :param name: registry key, see :func:`identity_names`
    :param depth: truncation (the entry default when None)
    :param mode: ``'symbolic'`` or ``'specialized'`` (the entry default when None;
        a seed alone selects specialized)
    :param seed: specialisation seed of the first-order cumulants
    :param p: one order for the entries indexed by an order (all registered orders when None)
    :param dump: keep the text form of both sides of every comparison in the report
    :return: IdentityReport
    :raises UnknownIdentityError: for an unregistered name
    :raises SizeGuardError: when the depth is above the guard of the entry
    """
    entry = get_identity(name)
    depth, mode, seed = _resolve(entry, depth, mode, seed)
    if p is not None and p not in entry.orders:
        raise ValueError(f"{name} is registered for orders {entry.orders}, got p={p}")
    orders = (p,) if p is not None else (entry.orders or (None,))
    start = time.perf_counter()
    verdict: Union[str, Dict[str, str]] = 'pass'
    checked, series = [], []
    for order in orders:
        for comparison in entry.check(depth, seed, order):
            mismatch = first_mismatch(comparison)
            checked.append(comparison.label)
            if dump:
                series.append({'label': comparison.label, 'lhs': dump_side(comparison.lhs),
                               'rhs': dump_side(comparison.rhs)})
            logger.debug("%s: %s %s", name, comparison.label, 'ok' if mismatch is None else 'differs')
            if mismatch is not None:
                verdict = mismatch
                break
        if verdict != 'pass':
            break
    millis = int(round(1000 * (time.perf_counter() - start)))
    report = IdentityReport(name, depth, mode, seed, verdict, millis, entry.conjecture, checked, series)
    if not report.passed:
        logger.warning("%s fails at D=%d: %s", name, depth, verdict['monomial'])
    else:
        logger.info("%s holds to D=%d (%d comparisons)", name, depth, len(checked))
    return report


def verify_all(depth: Optional[int] = None, mode: Optional[str] = None, seed: Optional[int] = None,
               names: Optional[List[str]] = None, dump: bool = False) -> List[IdentityReport]:
    """Run every registered identity (or ``names``), ordered by name."""
    return [verify(name, depth, mode, seed, dump=dump) for name in sorted(names or identity_names())]


def exit_status(reports: List[IdentityReport]) -> int:
    """0 when everything passes, 2 when only conjectures fail, 1 on any other mismatch."""
    failed = [r for r in reports if not r.passed]
    if not failed:
        return 0
    return 2 if all(r.conjecture for r in failed) else 1
