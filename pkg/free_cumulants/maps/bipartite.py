"""
Bipartite maps encoded by a pair of permutations of the edges.

``sigma1`` turns around the black vertices, ``sigma2`` around the white
ones; faces are the cycles of ``sigma1 * sigma2``.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..combinatorics import Permutation, SetPartition
from ..exceptions import NotCoCyclicError, SizeMismatchError

logger = logging.getLogger(__name__)

# the decomposition of a map into non-separable components, as a partition of its edges
EdgePartition = SetPartition


def count_cycles(image: Sequence[int]) -> int:
    seen = [False] * len(image)
    count = 0
    for start in range(len(image)):
        if not seen[start]:
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = image[j]
    return count


def count_components(*images: Sequence[int]) -> int:
    """Number of orbits of the group generated by the given one-line permutations."""
    n = len(images[0])
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for image in images:
        for a in range(n):
            ra, rb = find(a), find(image[a])
            if ra != rb:
                parent[ra] = rb
    return sum(1 for a in range(n) if find(a) == a)


def genus(sigma1: Permutation, sigma2: Permutation) -> int:
    """
    Genus from the Euler relation
    ``#s1 + #s2 + #(s1 s2) - n = 2 #components - 2 g``.
    :param sigma1: black vertices
    :param sigma2: white vertices
    :return: nonnegative integer
    """
    if sigma1.n != sigma2.n:
        raise SizeMismatchError(f"maps need permutations of equal size, got {sigma1.n} and {sigma2.n}")
    a, b = sigma1.image, sigma2.image
    product = [a[j] for j in b]
    euler = count_cycles(a) + count_cycles(b) + count_cycles(product) - len(a)
    twice = 2 * count_components(a, b) - euler
    return twice // 2


def is_planar(sigma1: Permutation, sigma2: Permutation) -> bool:
    return genus(sigma1, sigma2) == 0


@dataclass(frozen=True)
class BipartiteMap:
    """
    Map with ``n`` edges, black vertices ``sigma1`` and white vertices ``sigma2``.
    """
    sigma1: Permutation
    sigma2: Permutation

    def __post_init__(self):
        if self.sigma1.n != self.sigma2.n:
            raise SizeMismatchError(f"sigma1 has {self.sigma1.n} edges, sigma2 has {self.sigma2.n}")

    @property
    def n(self) -> int:
        return self.sigma1.n

    def genus(self) -> int:
        return genus(self.sigma1, self.sigma2)

    def faces(self) -> SetPartition:
        return (self.sigma1 * self.sigma2).orbit_partition()

    def components(self) -> SetPartition:
        return self.sigma1.orbit_partition().join(self.sigma2.orbit_partition())

    def num_components(self) -> int:
        return count_components(self.sigma1.image, self.sigma2.image)

    def is_connected(self) -> bool:
        return self.num_components() <= 1

    def split_white_vertex(self, d: int, b: int) -> 'BipartiteMap':
        """
        Split the white vertex holding edges ``d`` and ``b`` by composing
        ``sigma2`` on the left with the transposition ``(d b)``.
        :param d: 0-based edge
        :param b: 0-based edge of the same white cycle, ``b != d``
        :return: new BipartiteMap
        """
        if d == b or b not in self.sigma2.cycle_of(d):
            raise NotCoCyclicError(f"edges {d + 1} and {b + 1} are not distinct corners of one white vertex")
        swap = Permutation.transposition(self.n, d, b)
        return BipartiteMap(self.sigma1, swap * self.sigma2)

    def _disconnecting_splits(self, cycle: Tuple[int, ...]) -> List[Tuple[int, int]]:
        before = self.num_components()
        out = []
        for d in cycle:
            for b in cycle:
                if d != b and self.split_white_vertex(d, b).num_components() > before:
                    out.append((d, b))
        return out

    def is_white_cut_vertex(self, cycle: Sequence[int]) -> bool:
        """
        True when some split of the white vertex ``cycle`` raises the number of components.
        :param cycle: the white cycle, or any edge-sequence containing one of its edges
        """
        cycle = self.sigma2.cycle_of(cycle[0])
        if len(cycle) < 2:
            return False
        before = self.num_components()
        return any(self.split_white_vertex(d, b).num_components() > before
                   for d in cycle for b in cycle if d != b)

    def white_cut_vertices(self) -> List[Tuple[int, ...]]:
        return [c for c in self.sigma2.cycles if self.is_white_cut_vertex(c)]

    def has_white_cut_vertex(self) -> bool:
        return any(self.is_white_cut_vertex(c) for c in self.sigma2.cycles)

    def decompose(self, rng: Optional[np.random.Generator] = None) -> EdgePartition:
        """
        Split white vertices while some split disconnects, then return the
        connected components of the terminal map.
        :param rng: when given, the order in which splits are tried is shuffled
        :return: partition of the edges into non-separable hypermap components
        """
        current = self
        steps = 0
        while True:
            candidates = []
            for cycle in current.sigma2.cycles:
                if len(cycle) > 1:
                    candidates.extend(current._disconnecting_splits(cycle))
            if not candidates:
                break
            pick = candidates[int(rng.integers(len(candidates)))] if rng is not None else candidates[0]
            current = current.split_white_vertex(*pick)
            steps += 1
        logger.debug("decomposed map with %d edges after %d splits", self.n, steps)
        return current.components()

    def __str__(self) -> str:
        return f"({self.sigma1}, {self.sigma2})"


def decompose_hypermap(m: BipartiteMap, rng: Optional[np.random.Generator] = None) -> EdgePartition:
    """See :meth:`BipartiteMap.decompose`."""
    return m.decompose(rng)


def random_map(n: int, rng: np.random.Generator) -> BipartiteMap:
    """Uniformly random pair of permutations on ``n`` edges."""
    return BipartiteMap(Permutation(tuple(int(i) for i in rng.permutation(n))),
                        Permutation(tuple(int(i) for i in rng.permutation(n))))
