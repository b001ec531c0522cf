from .bipartite import BipartiteMap, EdgePartition, genus, is_planar, decompose_hypermap, random_map
from .enumeration import (count_maps_M, unicellular_count_closed, enumerate_nc, enumerate_ns, enumerate_ns_of,
                          ns_adjacency_census, ns_census, adjacency_matrix)

__all__ = [
    'BipartiteMap',
    'EdgePartition',
    'genus',
    'is_planar',
    'decompose_hypermap',
    'random_map',
    'count_maps_M',
    'unicellular_count_closed',
    'enumerate_nc',
    'enumerate_ns',
    'enumerate_ns_of',
    'ns_adjacency_census',
    'ns_census',
    'adjacency_matrix',
]
