"""
Permutations of a finite ground set and integer partitions.

Permutations are stored 0-based in one-line form; printed and parsed in
1-based cycle notation, e.g. ``(1 3)(2 5 6)(4)``.  The product is
``(sigma * tau)(i) == sigma(tau(i))``.
"""
import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

from ..exceptions import NotCoCyclicError, SizeMismatchError, check_size
from .partitions import SetPartition

MAX_SYMMETRIC_GROUP_N = 9

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class IntegerPartition:
    """
    Weakly decreasing tuple of positive integers.
    """
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"integer partition parts must be positive: {self.parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> 'IntegerPartition':
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> 'IntegerPartition':
        """
        Read ``"3+2+2"`` or ``"3,2,2"``.
        :param text: the partition as text
        :return: IntegerPartition
        """
        pieces = [t for t in re.split(r"[+,\s]+", text.strip()) if t]
        if not pieces:
            raise ValueError(f"empty integer partition: {text!r}")
        return cls(tuple(int(t) for t in pieces))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def multiplicities(self) -> Dict[int, int]:
        mult: Dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def __str__(self) -> str:
        return '+'.join(str(p) for p in self.parts)


def integer_partitions(n: int) -> List[IntegerPartition]:
    """
    All partitions of ``n``, largest parts first.
    :param n: positive integer
    :return: list of IntegerPartition
    """
    out = []
    # sympy reuses the yielded dict
    for mult in _sympy_partitions(n):
        parts = []
        for size, count in mult.items():
            parts.extend([size] * count)
        out.append(IntegerPartition(tuple(parts)))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class Permutation:
    """
    Bijection of {0, ..., n-1} in one-line form.

    ``image[i]`` is the image of ``i``.  Composition follows
    ``(sigma * tau)(i) == sigma(tau(i))``.
    """
    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(i) for i in self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {self.image}")
        object.__setattr__(self, 'image', image)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        """
        Build a permutation from 0-based cycles; missing points are fixed.
        :param n: ground-set size
        :param cycles: iterable of 0-based cycles
        :return: Permutation
        """
        image = list(range(n))
        seen = set()
        for cycle in cycles:
            for k, a in enumerate(cycle):
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"invalid cycle {cycle} on {n} points")
                seen.add(a)
                image[a] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(image))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> 'Permutation':
        return cls.from_cycles(n, [(a, b)])

    @classmethod
    def parse(cls, text: str, n: int = None) -> 'Permutation':
        """
        Read 1-based cycle notation such as ``"(1 3)(2 5 6)(4)"``.
        :param text: cycle notation; ``"()"`` or ``""`` is the identity
        :param n: ground-set size, defaults to the largest point written
        :return: Permutation
        """
        cycles = []
        for body in _CYCLE.findall(text):
            points = [int(t) - 1 for t in re.split(r"[\s,]+", body.strip()) if t]
            if points:
                cycles.append(points)
        largest = max((max(c) + 1 for c in cycles), default=0)
        if n is None:
            n = largest
        elif n < largest:
            raise SizeMismatchError(f"cycle notation {text!r} mentions points beyond n={n}")
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if self.n != other.n:
            raise SizeMismatchError(f"cannot compose permutations of {self.n} and {other.n} points")
        return Permutation(tuple(self.image[j] for j in other.image))

    def inverse(self) -> 'Permutation':
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    @cached_property
    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """Cycles starting at their minimum, ordered by minimum, fixed points included."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.image[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.image[j]
            out.append(tuple(cycle))
        return tuple(out)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    @property
    def length(self) -> int:
        """Minimal number of transpositions, ``n - #cycles``."""
        return self.n - self.num_cycles

    @property
    def cycle_type(self) -> IntegerPartition:
        return IntegerPartition(tuple(len(c) for c in self.cycles))

    def orbit_partition(self) -> SetPartition:
        return SetPartition.from_blocks(self.n, self.cycles)

    def cycle_of(self, i: int) -> Tuple[int, ...]:
        for cycle in self.cycles:
            if i in cycle:
                return cycle
        raise IndexError(i)

    def restrict(self, subset: Iterable[int]) -> 'Permutation':
        """
        Restriction to a union of cycles, relabelled increasingly to 0..|G|-1.
        :param subset: 0-based points forming a union of cycles
        :return: Permutation on len(subset) points
        """
        points = sorted(set(subset))
        position = {a: k for k, a in enumerate(points)}
        image = []
        for a in points:
            b = self.image[a]
            if b not in position:
                raise NotCoCyclicError(f"{sorted(points)} splits a cycle of {self}")
            image.append(position[b])
        return Permutation(tuple(image))

    def __str__(self) -> str:
        return ''.join('(' + ' '.join(str(a + 1) for a in c) + ')' for c in self.cycles)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def gamma_of(parts: Iterable[int]) -> Permutation:
    """
    Consecutive-cycle permutation ``(1..l1)(l1+1..l1+l2)...``, cycles in the given order.
    :param parts: cycle lengths (an IntegerPartition or any sequence of positive integers)
    :return: Permutation
    """
    parts = list(parts)
    if not parts or any(p <= 0 for p in parts):
        raise ValueError(f"gamma_of needs positive parts, got {parts}")
    cycles, start = [], 0
    for p in parts:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return Permutation.from_cycles(start, cycles)


def gamma_cycles(parts: Sequence[int]) -> List[Tuple[int, ...]]:
    """0-based point sets of the consecutive cycles of :func:`gamma_of`."""
    out, start = [], 0
    for p in parts:
        out.append(tuple(range(start, start + p)))
        start += p
    return out


def all_permutations(n: int, limit: int = MAX_SYMMETRIC_GROUP_N) -> Iterator[Permutation]:
    """
    Every element of S_n, in lexicographic one-line order.
    :param n: ground-set size
    :param limit: size guard
    """
    check_size('n', n, limit)
    for image in itertools.permutations(range(n)):
        yield Permutation(image)


def _cyclic_arrangements(block: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    head, rest = block[0], block[1:]
    for order in itertools.permutations(rest):
        yield (head,) + order


@lru_cache(maxsize=None)
def _conjugacy_class(n: int, shape: Tuple[int, ...]) -> Tuple[Permutation, ...]:
    out = []
    for blocks in _set_partitions_with_shape(tuple(range(n)), tuple(sorted(shape, reverse=True))):
        for cycles in itertools.product(*(_cyclic_arrangements(b) for b in blocks)):
            out.append(Permutation.from_cycles(n, cycles))
    return tuple(out)


def _set_partitions_with_shape(points: Tuple[int, ...], shape: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    # blocks are produced in order of their smallest element
    if not points:
        if not shape:
            yield []
        return
    head, rest = points[0], points[1:]
    for k, size in enumerate(shape):
        if k and shape[k - 1] == size:
            continue
        remaining = shape[:k] + shape[k + 1:]
        for others in itertools.combinations(rest, size - 1):
            block = (head,) + others
            left = tuple(a for a in rest if a not in others)
            for tail in _set_partitions_with_shape(left, remaining):
                yield [block] + tail


def conjugacy_class(shape: Iterable[int], limit: int = MAX_SYMMETRIC_GROUP_N) -> Tuple[Permutation, ...]:
    """
    All permutations with the given cycle type.
    :param shape: cycle type (any order)
    :param limit: size guard on n
    :return: tuple of Permutation
    """
    shape = tuple(sorted(shape, reverse=True))
    n = sum(shape)
    check_size('n', n, limit)
    return _conjugacy_class(n, shape)
