"""
Builders for the generating functions of the vertex weights: the cumulant
series C_p, the fused series C-hat, the one-block corrections C-tilde, the
tree corrections C-bar and their total H_p.

Every series lives in ``Y1..Yp`` (see :func:`default_variables`) and is
exact up to the requested total degree.  ``seed`` selects the specialised
mode: the first-order cumulants are replaced by the seeded rationals of
:func:`kappa_value` as soon as C_1 is built, while higher-order cumulants
stay symbolic.  Several quantities have more than one ``route``; they are
independent computations of the same series and are compared in the tests
and in the identity registry.
"""
import logging
import math
from functools import lru_cache
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..combinatorics import LabeledTree, SetPartition
from ..exceptions import InvalidTreeError, RouteDisagreementError, check_size
from ..series import DifferenceFraction, KappaPoly, MultiSeries, TensorState, default_variables, dx_dy, x_of_y
from .coefficients import Blocks, Hyperedges, bar_kappa, correction_shapes, ns_kappa, tilde_kappa

logger = logging.getLogger(__name__)

MAX_SYMBOLIC_DEPTH = 8
MAX_SPECIALIZED_DEPTH = 10
MAX_H_P = 4

FIRST_ORDER = (1,)

HAT_ROUTES = ('closed', 'sum')
TILDE_C2_ROUTES = ('log', 'x', 'pole_free', 'ns', 'closed')
TILDE_C3_ROUTES = ('gen', 'alt', 'simple', 'ns')
BAR_ROUTES = ('auto', 'closed', 'generating', 'coefficients')


def _check_depth(depth: int, seed: Optional[int]):
    check_size('depth', depth, MAX_SYMBOLIC_DEPTH if seed is None else MAX_SPECIALIZED_DEPTH)


def _specialize(s: MultiSeries, seed: Optional[int]) -> MultiSeries:
    return s if seed is None else s.specialize(seed, FIRST_ORDER)


def _unknown_route(route: str, known: Sequence[str]):
    raise ValueError(f"unknown route {route!r}, expected one of {', '.join(known)}")


def exponent_vectors(p: int, depth: int, low: int = 1) -> Iterator[Tuple[int, ...]]:
    """Exponent vectors of length ``p`` with entries >= ``low`` and total degree <= ``depth``."""
    if p == 0:
        if depth >= 0:
            yield ()
        return
    for first in range(low, depth - low * (p - 1) + 1):
        for rest in exponent_vectors(p - 1, depth - first, low):
            yield (first,) + rest


def embed(s: MultiSeries, p: int, positions: Sequence[int]) -> MultiSeries:
    """Move the variables of ``s`` to ``positions`` among ``Y1..Yp``."""
    return s.rename(default_variables(p), list(positions))


def theta_all(s, indices: Iterable[int]):
    """Apply ``Y_i d/dY_i`` for every index; works on series and fractions."""
    for i in indices:
        s = s.theta(i)
    return s


def compare_routes(what: str, first: MultiSeries, second: MultiSeries):
    """
    :raises RouteDisagreementError: at the first monomial where the two series differ
    """
    diff = first.first_difference(second)
    if diff is not None:
        exps, a, b = diff
        raise RouteDisagreementError(what, exps, a, b)


@lru_cache(maxsize=None)
def build_C(p: int, depth: int, seed: Optional[int] = None) -> MultiSeries:
    """
    The cumulant series: ``C_1 = 1 + sum_a k[a] Y^a`` and, for p >= 2,
    ``C_p = sum k[a_1..a_p] Y_1^a_1 ... Y_p^a_p`` over positive exponents.
    :param p: order
    :param depth: truncation
    :param seed: specialises the first-order cumulants of C_1; higher-order
        symbols are never specialised
    :return: MultiSeries in Y1..Yp
    """
    if p < 1:
        raise ValueError(f"order must be positive, got {p}")
    variables = default_variables(p)
    if p == 1:
        terms = {(0,): KappaPoly.constant(1)}
        terms.update({(a,): KappaPoly.kappa(a) for a in range(1, depth + 1)})
        return _specialize(MultiSeries(variables, depth, terms), seed)
    return MultiSeries(variables, depth, {e: KappaPoly.kappa(*e) for e in exponent_vectors(p, depth)})


def _g_series(depth: int, seed: Optional[int]) -> MultiSeries:
    # C_1 - Y C_1' = C_1^2 dX/dY
    c1 = build_C(1, depth, seed)
    return c1 - c1.derivative(0).shift(0)


def _spread(f: MultiSeries, source: int, targets: Tuple[int, ...]) -> MultiSeries:
    # Y_source^m -> sum of Y_targets^i over exponents i >= 1 adding up to m
    if len(targets) == 1:
        return f if targets[0] == source else f.swap(source, targets[0])
    first, second, rest = targets[0], targets[1], targets[2:]
    a = _spread(f, source, (first,) + rest)
    b = _spread(f, source, (second,) + rest)
    return (a.shift(second) - b.shift(first)).divide_difference(first, second)


@lru_cache(maxsize=None)
def build_hatC_pi(blocks: Blocks, p: int, depth: int, route: str = 'closed',
                  seed: Optional[int] = None) -> MultiSeries:
    """
    ``sum k[(sum_{a in G} i_a)_G] prod Y_a^i_a`` over positive exponents on
    the points covered by ``blocks``.

    The closed route places C_k (k blocks; C_1 - 1 for one block) at the
    first point of each block and spreads every block variable over the
    block by divided differences.  The sum route is the definition.
    :param blocks: disjoint subsets of 0..p-1, not necessarily covering
    :param p: number of variables
    :param depth: truncation
    :param route: ``'closed'`` or ``'sum'``
    :param seed: specialisation seed
    :return: MultiSeries in Y1..Yp
    """
    blocks = tuple(tuple(b) for b in blocks)
    if route == 'sum':
        points = [a for b in blocks for a in b]
        terms = {}
        for e in exponent_vectors(len(points), depth):
            full = [0] * p
            for a, k in zip(points, e):
                full[a] = k
            sums, start = [], 0
            for b in blocks:
                sums.append(sum(e[start:start + len(b)]))
                start += len(b)
            terms[tuple(full)] = KappaPoly.kappa(*sums)
        return _specialize(MultiSeries(default_variables(p), depth, terms), seed)
    if route != 'closed':
        _unknown_route(route, HAT_ROUTES)
    k = len(blocks)
    base = build_C(1, depth, seed) - 1 if k == 1 else build_C(k, depth)
    f = embed(base, p, [b[0] for b in blocks])
    for b in blocks:
        f = _spread(f, b[0], b)
    return f


def build_hatC(p: int, depth: int, route: str = 'closed', seed: Optional[int] = None) -> MultiSeries:
    """``C-hat(Y1..Yp) = sum k[i_1 + ... + i_p] prod Y_a^i_a`` over positive exponents."""
    return build_hatC_pi((tuple(range(p)),), p, depth, route, seed)


def _inverse_one_minus(block: Tuple[int, ...], p: int, depth: int, seed: Optional[int]) -> MultiSeries:
    return (1 - build_hatC_pi((block,), p, depth, 'closed', seed)).unit_inverse()


@lru_cache(maxsize=None)
def build_tildeC2(depth: int, route: str = 'log', seed: Optional[int] = None) -> MultiSeries:
    """
    One-block correction on two vertices.

    Routes: ``'log'`` is ``-theta_1 theta_2 log(1 - C-hat)``; ``'x'`` uses the
    moment variables, ``Y1 Y2 (1 - X1' X2' (Y1-Y2)^2/(X1-X2)^2) / (Y1-Y2)^2``;
    ``'pole_free'`` writes the same with ``g = C_1 - Y C_1'`` and C-hat only;
    ``'ns'`` sums non-separable hypermaps and ``'closed'`` uses
    :func:`tilde_kappa`.
    :param depth: truncation
    :param route: one of :data:`TILDE_C2_ROUTES`
    :param seed: specialisation seed
    :return: MultiSeries in Y1, Y2
    """
    _check_depth(depth, seed)
    variables = default_variables(2)
    if route == 'log':
        hat = build_hatC(2, depth, 'closed', seed)
        return -hat.log_one_minus().theta(0).theta(1)
    if route in ('x', 'pole_free'):
        if route == 'x':
            c1 = build_C(1, depth, seed)
            x = x_of_y(c1)
            q = (embed(x, 2, [0]) - embed(x, 2, [1])).divide_difference(0, 1)
            dx = dx_dy(c1)
            ratio = embed(dx, 2, [0]) * embed(dx, 2, [1]) * q.unit_inverse() ** 2
        else:
            g = _g_series(depth, seed)
            ratio = embed(g, 2, [0]) * embed(g, 2, [1]) * _inverse_one_minus((0, 1), 2, depth, seed) ** 2
        numerator = (1 - ratio).shift(0).shift(1)
        return DifferenceFraction(numerator, {(0, 1): 2}, depth).reduce()
    if route == 'ns':
        terms = {e: ns_kappa(e) for e in exponent_vectors(2, depth)}
    elif route == 'closed':
        terms = {e: tilde_kappa(*e) for e in exponent_vectors(2, depth)}
    else:
        _unknown_route(route, TILDE_C2_ROUTES)
    return _specialize(MultiSeries(variables, depth, terms), seed)


def _three_point_hats(depth: int, seed: Optional[int]):
    pairs = ((0, 1), (0, 2), (1, 2))
    hats = {pair: build_hatC_pi((pair,), 3, depth, 'closed', seed) for pair in pairs}
    inverses = {pair: (1 - s).unit_inverse() for pair, s in hats.items()}
    return build_hatC(3, depth, 'closed', seed), hats, inverses


@lru_cache(maxsize=None)
def build_tildeC3(depth: int, route: str = 'gen', seed: Optional[int] = None) -> MultiSeries:
    """
    One-block correction on three vertices.
    :param depth: truncation
    :param route: ``'gen'`` (rational function of the C-hat series),
        ``'alt'`` (through C-tilde_2), ``'simple'`` (with simple poles), ``'ns'``
    :param seed: specialisation seed
    :return: MultiSeries in Y1, Y2, Y3
    """
    _check_depth(depth, seed)
    if route == 'ns':
        terms = {e: ns_kappa(e) for e in exponent_vectors(3, depth)}
        return _specialize(MultiSeries(default_variables(3), depth, terms), seed)
    if route not in TILDE_C3_ROUTES:
        _unknown_route(route, TILDE_C3_ROUTES)
    c, hats, inv = _three_point_hats(depth, seed)
    if route == 'gen':
        core = ((1 + c) ** 2 + hats[(0, 1)] * hats[(0, 2)] * hats[(1, 2)] - 1) \
            * inv[(0, 1)] * inv[(0, 2)] * inv[(1, 2)]
        centred = (c.theta(0) - c) * inv[(0, 1)] * inv[(0, 2)]
        return theta_all(core + centred + centred.swap(0, 1) + centred.swap(0, 2), range(3))
    if route == 'alt':
        t2 = build_tildeC2(depth, 'log', seed)
        outer = (embed(t2, 3, [0, 1]).shift(2) - embed(t2, 3, [1, 2]).shift(0)).divide_difference(0, 2)
        outer = theta_all(outer * inv[(0, 2)], (0, 2))
        inner = (c.theta(1) - c - hats[(0, 1)] * hats[(1, 2)]) * inv[(0, 1)] * inv[(1, 2)]
        return outer + theta_all(inner, range(3))
    g = embed(_g_series(depth, seed), 3, [0])
    bracket = inv[(0, 1)] + inv[(0, 2)] - g * inv[(0, 1)] * inv[(0, 2)]
    f = DifferenceFraction(bracket.shift(1).shift(2), {(0, 1): 1, (0, 2): 1}, depth)
    f = theta_all(f, range(3))
    return (f + f.swap(0, 1) + f.swap(0, 2)).reduce()


def build_tildeC(p: int, depth: int, seed: Optional[int] = None) -> MultiSeries:
    """
    One-block correction on ``p`` vertices by its preferred route; C_1 for
    p = 1, so that tensor products over the blocks of a partition can treat
    single vertices uniformly.
    """
    if p == 1:
        return build_C(1, depth, seed)
    if p == 2:
        return build_tildeC2(depth, 'log', seed)
    if p == 3:
        return build_tildeC3(depth, 'gen', seed)
    _check_depth(depth, seed)
    terms = {e: ns_kappa(e) for e in exponent_vectors(p, depth)}
    return _specialize(MultiSeries(default_variables(p), depth, terms), seed)


def _check_shape(blocks: Blocks, hyperedges: Hyperedges, p: int):
    SetPartition.from_blocks(p, blocks)
    if len(blocks) == 1:
        if hyperedges:
            raise InvalidTreeError(f"a single block carries no black vertices, got {hyperedges}")
        return
    if any(len(h) < 2 for h in hyperedges):
        raise InvalidTreeError(f"black vertices of a correction tree join at least two blocks: {hyperedges}")
    LabeledTree(len(blocks), hyperedges)


@lru_cache(maxsize=None)
def build_barC(blocks: Blocks, hyperedges: Hyperedges, p: int, depth: int, route: str = 'auto',
               seed: Optional[int] = None) -> MultiSeries:
    """
    Correction for the partition ``blocks`` of the ``p`` vertices and the tree
    ``hyperedges`` on its blocks.

    Routes:
      - ``'closed'``: blocks of at most two vertices;
        ``prod_{i in pairs} theta_i [prod_K C-hat_{pi_K} prod_G (d_G-1)!/(1 - C-hat_G)^d_G]``
      - ``'generating'``: the product of the D_K operators of the tree applied
        to the tensor product of the one-block corrections; symbolic only
      - ``'coefficients'``: :func:`bar_kappa` for every monomial
      - ``'auto'``: closed when possible, else generating, else coefficients
    A single block gives the one-block correction.  A single-vertex block
    with more than one black neighbour gives zero.
    :param blocks: partition of 0..p-1, blocks as sorted tuples
    :param hyperedges: tree on the block indices
    :param p: number of vertices
    :param depth: truncation
    :param route: one of :data:`BAR_ROUTES`
    :param seed: specialisation seed
    :return: MultiSeries in Y1..Yp
    :raises InvalidTreeError: when ``hyperedges`` is not a tree on the blocks
    """
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    hyperedges = tuple(tuple(sorted(h)) for h in hyperedges)
    _check_shape(blocks, hyperedges, p)
    _check_depth(depth, seed)
    if route not in BAR_ROUTES:
        _unknown_route(route, BAR_ROUTES)
    variables = default_variables(p)
    degree = [sum(1 for h in hyperedges if g in h) for g in range(len(blocks))]
    if any(len(b) == 1 and d > 1 for b, d in zip(blocks, degree)):
        return MultiSeries.zero(variables, depth)
    if route == 'auto':
        if len(blocks) == 1 or all(len(b) <= 2 for b in blocks):
            route = 'closed'
        else:
            route = 'generating' if seed is None else 'coefficients'
    logger.debug("C-bar for %s with tree %s by the %s route", blocks, hyperedges, route)
    if route == 'coefficients':
        terms = {e: bar_kappa(e, blocks, hyperedges) for e in exponent_vectors(p, depth)}
        return _specialize(MultiSeries(variables, depth, terms), seed)
    if len(blocks) == 1:
        return build_tildeC(p, depth, seed)
    if route == 'generating':
        if seed is not None:
            raise ValueError("the generating route needs symbolic first-order cumulants")
        state = TensorState.of([embed(build_tildeC(len(b), depth), p, b) for b in blocks])
        for h in hyperedges:
            state = state.apply_D(h)
        return state.product()
    if any(len(b) > 2 for b in blocks):
        raise ValueError(f"the closed route needs blocks of at most two vertices, got {blocks}")
    inner = MultiSeries.constant(variables, depth, 1)
    for h in hyperedges:
        inner = inner * build_hatC_pi(tuple(blocks[g] for g in h), p, depth, 'closed', seed)
    paired: List[int] = []
    for b, d in zip(blocks, degree):
        if len(b) == 2:
            inner = inner * _inverse_one_minus(b, p, depth, seed) ** d * math.factorial(d - 1)
            paired.extend(b)
    return theta_all(inner, paired)


def pair_block_shape(p: int, a: int, b: int) -> Tuple[Blocks, Hyperedges]:
    """The pair ``{a, b}``, singletons elsewhere, and one black vertex joining every block."""
    pi = SetPartition.from_blocks(p, [(a, b)] + [(i,) for i in range(p) if i not in (a, b)])
    return pi.blocks, (tuple(range(len(pi.blocks))),)


def shape_kind(blocks: Blocks, hyperedges: Hyperedges) -> str:
    """Isomorphism-type label of a correction, e.g. ``'bar[2+1+1|2,2]'``."""
    if len(blocks) == 1:
        return 'tilde'
    sizes = '+'.join(str(k) for k in sorted((len(b) for b in blocks), reverse=True))
    edges = ','.join(str(k) for k in sorted((len(h) for h in hyperedges), reverse=True))
    return f"bar[{sizes}|{edges}]"


class HSummand(NamedTuple):
    kind: str
    blocks: Blocks
    hyperedges: Hyperedges
    series: MultiSeries


def h_summands(p: int, depth: int, seed: Optional[int] = None, route: str = 'auto') -> List[HSummand]:
    """
    The terms of H_p: C_p first, then one correction per partition other than
    the finest and tree on its blocks, skipping those that vanish identically.
    :param p: number of vertices, at most :data:`MAX_H_P`
    :param depth: truncation
    :param seed: specialisation seed
    :param route: route for the tree corrections
    :return: list of HSummand
    """
    check_size('p', p, MAX_H_P)
    finest = SetPartition.finest(p).blocks
    out = [HSummand('C', finest, (), build_C(p, depth, seed))]
    for blocks, tree in correction_shapes(p):
        out.append(HSummand(shape_kind(blocks, tree), blocks, tree,
                            build_barC(blocks, tree, p, depth, route, seed)))
    logger.debug("H_%d has %d summands", p, len(out))
    return out


@lru_cache(maxsize=None)
def build_H(p: int, depth: int, seed: Optional[int] = None, route: str = 'auto') -> MultiSeries:
    """``H_p = C_p + sum of the corrections``; H_1 = C_1."""
    total = None
    for summand in h_summands(p, depth, seed, route):
        total = summand.series if total is None else total + summand.series
    return total


def double_pole_kernel(depth: int, variables: Sequence[str] = None) -> DifferenceFraction:
    """``Y1 Y2 / (Y1 - Y2)^2``."""
    return DifferenceFraction.double_pole(variables or default_variables(2), depth, 0, 1)


def c2_ring(depth: int, seed: Optional[int] = None) -> DifferenceFraction:
    """``C-tilde_2 - Y1 Y2/(Y1 - Y2)^2``, which keeps a double pole."""
    return DifferenceFraction.from_series(build_tildeC2(depth, 'log', seed)) - double_pole_kernel(depth)
