"""
The lattice of set partitions of {0, ..., n-1}.

Blocks are kept sorted, and ordered by their minimum, so equality is
structural.  Text form is 1-based: ``{1,3|2,5,6|4}``.
"""
import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from ..exceptions import RefinementError, SizeMismatchError, check_size

MAX_SET_PARTITION_N = 12


def _canonical(blocks: Iterable[Iterable[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


@dataclass(frozen=True)
class SetPartition:
    """
    Partition of {0, ..., n-1} into nonempty blocks.
    """
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> 'SetPartition':
        """
        :param n: ground-set size
        :param blocks: disjoint 0-based blocks covering {0..n-1}
        :return: SetPartition in canonical form
        """
        blocks = _canonical(blocks)
        points = sorted(a for b in blocks for a in b)
        if points != list(range(n)):
            raise ValueError(f"blocks {blocks} do not partition {n} points")
        return cls(n, blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> 'SetPartition':
        groups: Dict[int, List[int]] = {}
        for a, label in enumerate(labels):
            groups.setdefault(label, []).append(a)
        return cls(len(labels), _canonical(groups.values()))

    @classmethod
    def finest(cls, n: int) -> 'SetPartition':
        """0_n, every point alone."""
        return cls(n, tuple((a,) for a in range(n)))

    @classmethod
    def coarsest(cls, n: int) -> 'SetPartition':
        """1_n, a single block."""
        return cls(n, (tuple(range(n)),) if n else ())

    @classmethod
    def parse(cls, text: str, n: int = None) -> 'SetPartition':
        """
        Read ``"{1,3|2,5,6|4}"`` (also accepts ``"{1,3}{2,5,6}{4}"``).
        :param text: partition text, 1-based
        :param n: ground-set size, defaults to the largest point
        :return: SetPartition
        """
        body = text.strip()
        chunks = re.split(r"\}\s*\{|\|", body.strip('{}'))
        blocks = []
        for chunk in chunks:
            points = [int(t) - 1 for t in re.split(r"[\s,]+", chunk.strip()) if t]
            if points:
                blocks.append(points)
        if n is None:
            n = max((max(b) + 1 for b in blocks), default=0)
        return cls.from_blocks(n, blocks)

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        """Block index of every point."""
        out = [0] * self.n
        for k, block in enumerate(self.blocks):
            for a in block:
                out[a] = k
        return tuple(out)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, a: int) -> Tuple[int, ...]:
        return self.blocks[self.labels[a]]

    def is_finest(self) -> bool:
        return len(self.blocks) == self.n

    def is_coarsest(self) -> bool:
        return len(self.blocks) <= 1

    def _check(self, other: 'SetPartition'):
        if self.n != other.n:
            raise SizeMismatchError(f"partitions of {self.n} and {other.n} points")

    def join(self, other: 'SetPartition') -> 'SetPartition':
        """Finest partition coarser than both (union-find over shared points)."""
        self._check(other)
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for partition in (self, other):
            for block in partition.blocks:
                root = find(block[0])
                for a in block[1:]:
                    parent[find(a)] = root
        return SetPartition.from_labels([find(a) for a in range(self.n)])

    def __or__(self, other: 'SetPartition') -> 'SetPartition':
        return self.join(other)

    def meet(self, other: 'SetPartition') -> 'SetPartition':
        self._check(other)
        return SetPartition.from_labels(list(zip(self.labels, other.labels)))

    def __le__(self, other: 'SetPartition') -> bool:
        """True when every block of ``self`` lies inside a block of ``other``."""
        self._check(other)
        return all(len({other.labels[a] for a in block}) == 1 for block in self.blocks)

    def __ge__(self, other: 'SetPartition') -> bool:
        return other <= self

    def restrict_to(self, subset: Iterable[int]) -> 'SetPartition':
        """Trace on ``subset``, relabelled increasingly."""
        points = sorted(set(subset))
        return SetPartition.from_labels([self.labels[a] for a in points])

    def __str__(self) -> str:
        return '{' + '|'.join(','.join(str(a + 1) for a in b) for b in self.blocks) + '}'

    def __repr__(self) -> str:
        return f"SetPartition({self})"


def mobius(low: SetPartition, high: SetPartition) -> int:
    """
    Möbius function of the partition lattice.
    :param low: partition with ``low <= high``
    :param high: partition
    :return: prod over blocks B of ``high`` of (-1)^(k_B-1) (k_B-1)!, k_B = number of blocks of ``low`` in B
    """
    if not low <= high:
        raise RefinementError(f"{low} is not finer than {high}")
    value = 1
    for block in high.blocks:
        k = len({low.labels[a] for a in block})
        value *= (-1) ** (k - 1) * math.factorial(k - 1)
    return value


def excess_L(tilde: SetPartition, bar: SetPartition, base: SetPartition) -> int:
    """
    Tree excess ``#base - #tilde - #bar + #(tilde v bar)``; zero means the
    blocks of ``tilde`` and ``bar`` connect the blocks of ``base`` like a forest.
    :param tilde: partition coarser than ``base``
    :param bar: partition coarser than ``base``
    :param base: common lower bound
    :return: nonnegative integer
    """
    if not (base <= tilde and base <= bar):
        raise RefinementError(f"{tilde} and {bar} must both be coarser than {base}")
    return len(base) - len(tilde) - len(bar) + len(tilde.join(bar))


@lru_cache(maxsize=None)
def _set_partitions_of_range(k: int) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    if k == 0:
        return ((),)
    return tuple(_canonical(p) for p in multiset_partitions(list(range(k))))


@lru_cache(maxsize=4096)
def _coarsenings(floor: SetPartition) -> Tuple[SetPartition, ...]:
    out = []
    for grouping in _set_partitions_of_range(len(floor.blocks)):
        blocks = [[a for k in group for a in floor.blocks[k]] for group in grouping]
        out.append(SetPartition.from_blocks(floor.n, blocks))
    return tuple(out)


def enumerate_set_partitions(n: int, floor: SetPartition = None,
                             limit: int = MAX_SET_PARTITION_N) -> Tuple[SetPartition, ...]:
    """
    All set partitions of n points, or those coarser than ``floor``.
    :param n: ground-set size
    :param floor: optional lower bound
    :param limit: size guard on the number of free blocks
    :return: tuple of SetPartition, each exactly once
    """
    if floor is None:
        floor = SetPartition.finest(n)
    elif floor.n != n:
        raise SizeMismatchError(f"floor has {floor.n} points, expected {n}")
    check_size('blocks', len(floor.blocks), limit)
    return _coarsenings(floor)

