"""
Labelled bipartite trees: white vertices 0..p-1, black vertices given by
the subsets of white vertices they touch (hyperedges), and black leaves
stored as a count per white vertex.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from ..exceptions import InvalidTreeError, check_size

MAX_TREE_P = 6


@dataclass(frozen=True)
class LabeledTree:
    """
    Bipartite tree on ``p`` labelled white vertices.
    """
    p: int
    hyperedges: Tuple[Tuple[int, ...], ...]
    leaves: Tuple[int, ...] = None

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(h)) for h in self.hyperedges))
        leaves = tuple(self.leaves) if self.leaves is not None else (0,) * self.p
        object.__setattr__(self, 'hyperedges', edges)
        object.__setattr__(self, 'leaves', leaves)
        if len(leaves) != self.p:
            raise InvalidTreeError(f"expected {self.p} leaf counts, got {leaves}")
        if not self.is_tree():
            raise InvalidTreeError(f"{edges} is not a tree on {self.p} white vertices")

    def is_tree(self) -> bool:
        """Connectivity plus zero excess, sum(|I| - 1) == p - 1."""
        if sum(len(h) - 1 for h in self.hyperedges) != self.p - 1:
            return False
        parent = list(range(self.p))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for h in self.hyperedges:
            for a in h[1:]:
                parent[find(a)] = find(h[0])
        return len({find(a) for a in range(self.p)}) == 1

    def incident(self, i: int) -> Tuple[Tuple[int, ...], ...]:
        """Hyperedges containing white vertex ``i``."""
        return tuple(h for h in self.hyperedges if i in h)

    def edge_degree(self, i: int) -> int:
        return sum(1 for h in self.hyperedges if i in h)

    def degree(self, i: int) -> int:
        """Number of black neighbours of ``i``, leaves included."""
        return self.edge_degree(i) + self.leaves[i]

    def is_reduced(self) -> bool:
        """True for trees without black leaves and with all |I| >= 2."""
        return not any(self.leaves) and all(len(h) >= 2 for h in self.hyperedges)

    def automorphisms(self) -> int:
        """White vertices are labelled, so only the identity fixes the tree."""
        return 1

    def __str__(self) -> str:
        edges = ' '.join('{' + ','.join(str(a + 1) for a in h) + '}' for h in self.hyperedges)
        if any(self.leaves):
            edges += ' leaves=' + ','.join(str(k) for k in self.leaves)
        return edges or '.'


@lru_cache(maxsize=None)
def _reduced_trees(p: int) -> Tuple[LabeledTree, ...]:
    if p == 1:
        return (LabeledTree(1, ()),)
    candidates = [h for size in range(2, p + 1) for h in itertools.combinations(range(p), size)]
    out = []

    def grow(start, chosen, parent, budget):
        if budget == 0:
            out.append(LabeledTree(p, tuple(chosen)))
            return
        for k in range(start, len(candidates)):
            h = candidates[k]
            if len(h) - 1 > budget:
                continue
            roots = [_find(parent, a) for a in h]
            if len(set(roots)) != len(roots):
                continue
            merged = list(parent)
            for r in roots[1:]:
                merged[r] = roots[0]
            grow(k + 1, chosen + [h], merged, budget - (len(h) - 1))

    grow(0, [], list(range(p)), p - 1)
    return tuple(out)


def _find(parent, a):
    while parent[a] != a:
        a = parent[a]
    return a


def enumerate_trees(p: int, kind: str = 'G', limit: int = MAX_TREE_P) -> Tuple[LabeledTree, ...]:
    """
    Labelled bipartite trees on ``p`` white vertices.
    :param p: number of white vertices
    :param kind: ``'G'`` for trees whose black vertices all have valency >= 2
        (the one-vertex tree for p = 1), ``'T'`` for trees where each white
        vertex may also carry one black leaf
    :param limit: size guard on p
    :return: tuple of LabeledTree, each exactly once
    """
    check_size('p', p, limit)
    if p < 1:
        raise ValueError("trees need at least one white vertex")
    reduced = _reduced_trees(p)
    if kind == 'G':
        return reduced
    if kind != 'T':
        raise ValueError(f"unknown tree kind {kind!r}")
    out = []
    for tree in reduced:
        for leaves in itertools.product((0, 1), repeat=p):
            if not tree.hyperedges and not any(leaves):
                continue
            out.append(LabeledTree(p, tree.hyperedges, leaves))
    return tuple(out)


def trees_on(labels: Sequence, limit: int = MAX_TREE_P) -> Iterator[Tuple[Tuple, ...]]:
    """
    Reduced trees whose white vertices are the given labels; each black vertex
    is returned as a tuple of labels.
    :param labels: distinct white-vertex labels (blocks of a partition, say)
    :param limit: size guard
    """
    labels = list(labels)
    for tree in enumerate_trees(len(labels), 'G', limit):
        yield tuple(tuple(labels[a] for a in h) for h in tree.hyperedges)
