"""
Exhaustive enumeration of the map classes used by the moment formulas:
planar connected maps with prescribed vertex degrees, non-crossing
permutations and non-separable hypermaps.
"""
import logging
import math
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ..combinatorics import IntegerPartition, Permutation, conjugacy_class, gamma_cycles, gamma_of
from ..combinatorics.permutations import all_permutations
from ..exceptions import check_size
from .bipartite import BipartiteMap, count_components, count_cycles

logger = logging.getLogger(__name__)

MAX_MAPS_N = 9
MAX_NC_N = 10
MAX_NS_N = 8


def _planar_and_connected(white: Sequence[int], black: Sequence[int]) -> bool:
    n = len(white)
    product = [black[j] for j in white]
    euler = count_cycles(black) + count_cycles(white) + count_cycles(product) - n
    return euler == 2 and count_components(white, black) == 1


def count_maps_M(white: Iterable[int], black: Iterable[int], limit: int = MAX_MAPS_N) -> int:
    """
    Planar connected maps with white vertices ``gamma_white`` and black cycle type ``black``.
    :param white: white vertex degrees, in the order of the consecutive cycles
    :param black: black vertex degrees (a partition of the same n)
    :param limit: size guard on n
    :return: number of tau of cycle type ``black`` with g(gamma, tau) = 0 and connected
    """
    white = list(white)
    black = IntegerPartition.of(black)
    n = sum(white)
    if black.n != n:
        raise ValueError(f"white degrees {white} and black degrees {black} differ in size")
    check_size('n', n, limit)
    return _count_maps(tuple(white), black.parts)


@lru_cache(maxsize=None)
def _count_maps(white: Tuple[int, ...], black: Tuple[int, ...]) -> int:
    gamma = gamma_of(white).image
    total = sum(1 for tau in conjugacy_class(black) if _planar_and_connected(gamma, tau.image))
    logger.debug("M(%s; %s) = %d", white, black, total)
    return total


def unicellular_count_closed(n: int, k: Mapping[int, int]) -> int:
    """
    Planar maps with one white vertex of degree n and k[a] black vertices of degree a.
    :param n: number of edges
    :param k: multiplicities, with sum a * k[a] == n
    :return: n! / ((n + 1 - sum k)! prod k[a]!)
    """
    if sum(a * c for a, c in k.items()) != n:
        raise ValueError(f"multiplicities {dict(k)} do not add up to {n}")
    total = sum(k.values())
    if n + 1 - total < 0:
        return 0
    value = math.factorial(n) // math.factorial(n + 1 - total)
    for c in k.values():
        value //= math.factorial(c)
    return value


def _noncrossing(points: Tuple[int, ...]) -> List[List[Tuple[int, ...]]]:
    if not points:
        return [[]]
    head, rest = points[0], points[1:]
    out = []
    # the block of ``head`` picks increasing points; the gaps between them are filled independently
    for mask in range(1 << len(rest)):
        chosen = [rest[k] for k in range(len(rest)) if mask >> k & 1]
        block = (head,) + tuple(chosen)
        bounds = list(block) + [None]
        gaps = []
        for a, b in zip(bounds, bounds[1:]):
            gaps.append(tuple(x for x in rest if x > a and (b is None or x < b)))
        fillings = [[]]
        for gap in gaps:
            fillings = [f + g for f in fillings for g in _noncrossing(gap)]
        out.extend([block] + f for f in fillings)
    return out


def enumerate_nc(parts: Iterable[int], limit: int = MAX_NC_N) -> Tuple[Permutation, ...]:
    """
    Factorised non-crossing permutations tau_1 x ... x tau_p on the cycles of gamma.
    :param parts: the profile lambda (cycle lengths in order)
    :param limit: size guard on n
    :return: every tau with each (tau_i, gamma_i^-1) planar; blocks are increasing cycles
    """
    parts = tuple(parts)
    n = sum(parts)
    check_size('n', n, limit)
    return _enumerate_nc(parts)


@lru_cache(maxsize=None)
def _enumerate_nc(parts: Tuple[int, ...]) -> Tuple[Permutation, ...]:
    n = sum(parts)
    per_cycle = [_noncrossing(points) for points in gamma_cycles(parts)]
    out = [[]]
    for options in per_cycle:
        out = [prefix + blocks for prefix in out for blocks in options]
    return tuple(Permutation.from_cycles(n, blocks) for blocks in out)


def enumerate_ns_of(white: Permutation, limit: int = MAX_NS_N) -> Tuple[Permutation, ...]:
    """
    Non-separable hypermaps on the white vertices ``white``: all black
    permutations nu with g(nu, white) = 0, connected, and no white cut-vertex.
    :param white: permutation whose cycles are the white vertices
    :param limit: size guard on n
    :return: tuple of black permutations
    """
    check_size('n', white.n, limit)
    return _enumerate_ns(white)


@lru_cache(maxsize=None)
def _enumerate_ns(white: Permutation) -> Tuple[Permutation, ...]:
    if white.num_cycles == 1:
        return (white.inverse(),)
    out = []
    scanned = 0
    for nu in all_permutations(white.n, MAX_NS_N):
        scanned += 1
        if not _planar_and_connected(white.image, nu.image):
            continue
        if BipartiteMap(nu, white).has_white_cut_vertex():
            continue
        out.append(nu)
    logger.debug("NS(%s): %d of %d permutations", white, len(out), scanned)
    return tuple(out)


def enumerate_ns(mu: Iterable[int], limit: int = MAX_NS_N) -> Tuple[Permutation, ...]:
    """
    :param mu: white vertex degrees, consecutive cycles of gamma_mu
    :param limit: size guard on n
    :return: NS(mu) as a tuple of black permutations
    """
    mu = tuple(mu)
    check_size('n', sum(mu), limit)
    return _enumerate_ns(gamma_of(mu))


def label_black_vertices(nu: Permutation, white: Permutation) -> List[Tuple[int, ...]]:
    """
    Order the black cycles of ``nu``: walk the white vertices in order and,
    around each, take the unlabelled black vertices by their smallest shared edge.
    """
    order: List[Tuple[int, ...]] = []
    placed = set()
    black_of = {}
    for cycle in nu.cycles:
        for a in cycle:
            black_of[a] = cycle
    for w in white.cycles:
        touching = sorted((min(a for a in w if black_of[a] == black_of[e]), black_of[e]) for e in w)
        for _, cycle in touching:
            if cycle not in placed:
                placed.add(cycle)
                order.append(cycle)
    return order


def adjacency_matrix(nu: Permutation, white: Permutation) -> Tuple[Tuple[int, ...], ...]:
    """Rows are white vertices, columns black vertices in labelling order; entries count shared edges."""
    blacks = label_black_vertices(nu, white)
    return tuple(tuple(len(set(w) & set(b)) for b in blacks) for w in white.cycles)


def ns_adjacency_census(mu: Iterable[int], r: int = None,
                        limit: int = MAX_NS_N) -> Dict[Tuple[Tuple[int, ...], ...], int]:
    """
    Count non-separable hypermaps by adjacency matrix.
    :param mu: white vertex degrees
    :param r: keep only maps with exactly ``r`` black vertices (all when None)
    :param limit: size guard
    :return: mapping adjacency matrix -> number of maps
    """
    mu = tuple(mu)
    white = gamma_of(mu)
    census: Counter = Counter()
    for nu in enumerate_ns(mu, limit):
        if r is None or nu.num_cycles == r:
            census[adjacency_matrix(nu, white)] += 1
    return dict(census)


def ns_census(mu: Iterable[int], limit: int = MAX_NS_N) -> Dict[str, object]:
    """Total count of NS(mu) and the split by number of black vertices."""
    mu = tuple(mu)
    maps = enumerate_ns(mu, limit)
    by_black = Counter(nu.num_cycles for nu in maps)
    return {
        'profile': list(mu),
        'total': len(maps),
        'by_black_count': {str(r): by_black[r] for r in sorted(by_black)},
    }
