from .partitions import SetPartition, mobius, excess_L, enumerate_set_partitions
from .permutations import (IntegerPartition, Permutation, gamma_of, gamma_cycles, integer_partitions,
                           all_permutations, conjugacy_class)
from .trees import LabeledTree, enumerate_trees, trees_on

__all__ = [
    'SetPartition',
    'mobius',
    'excess_L',
    'enumerate_set_partitions',
    'IntegerPartition',
    'Permutation',
    'gamma_of',
    'gamma_cycles',
    'integer_partitions',
    'all_permutations',
    'conjugacy_class',
    'LabeledTree',
    'enumerate_trees',
    'trees_on',
]
