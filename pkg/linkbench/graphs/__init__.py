from .core import Graph, canonical_pair
from .loaders import (
    FORMATS,
    PAIRS,
    TRIPLES,
    load_attributes,
    load_edge_list,
    read_edge_list,
    read_pairs,
    write_edge_list,
    write_pairs,
)
from .stats import (
    GraphStats,
    clustering_coefficient,
    connected_components,
    neighbors,
    stats,
    triangles_through,
)

__all__ = [
    'FORMATS',
    'PAIRS',
    'TRIPLES',
    'Graph',
    'GraphStats',
    'canonical_pair',
    'clustering_coefficient',
    'connected_components',
    'load_attributes',
    'load_edge_list',
    'neighbors',
    'read_edge_list',
    'read_pairs',
    'stats',
    'triangles_through',
    'write_edge_list',
    'write_pairs',
]
