import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse import csgraph

logger = logging.getLogger(__name__)

ALL_PAIRS_LIMIT = 5000
SAMPLED_SOURCES = 1000
SOURCE_CHUNK = 256
LARGE_GRAPH_NODES = 10000


@dataclass(frozen=True)
class GraphStats:
    nodes: int
    links: int
    avg_degree: float
    triangles: int
    avg_clustering: float
    apl: Optional[float] = None
    diameter: Optional[int] = None

    @property
    def size_class(self):
        return 'large' if self.nodes > LARGE_GRAPH_NODES else 'small/medium'


def neighbors(g, v):
    return g.neighbors(v)


def triangles_through(g, z):
    g.check_node(z)
    return int(g.triangle_counts[z])


def clustering_coefficient(g, z):
    """CC_z = 2 t_z / (|Γz| (|Γz| - 1)); 0 when the degree is below 2."""
    g.check_node(z)
    return float(g.clustering_coefficients[z])


def connected_components(g):
    return g.components


def path_lengths(g, seed=0):
    """
    Average shortest path length and diameter of the largest component.

    Every node is a BFS source when the component has at most
    ALL_PAIRS_LIMIT nodes, otherwise SAMPLED_SOURCES seeded sources are used.
    """
    count, membership = g.components
    if g.node_count == 0:
        return None, None
    largest = np.argmax(np.bincount(membership, minlength=count))
    members = np.flatnonzero(membership == largest)
    if len(members) < 2:
        return 0.0, 0

    adjacency = g.adjacency_matrix()[members][:, members]
    if len(members) <= ALL_PAIRS_LIMIT:
        sources = np.arange(len(members))
    else:
        rng = np.random.default_rng(seed)
        sources = np.sort(rng.choice(len(members), SAMPLED_SOURCES, replace=False))
        logger.info('Sampling %d of %d BFS sources for path statistics.', len(sources), len(members))

    total = 0.0
    pairs = 0
    diameter = 0
    for start in range(0, len(sources), SOURCE_CHUNK):
        chunk = sources[start:start + SOURCE_CHUNK]
        distances = csgraph.shortest_path(adjacency, directed=False, unweighted=True, indices=chunk)
        # Same component, so every distance is finite; drop the zero self-distances.
        total += distances.sum()
        pairs += distances.size - len(chunk)
        diameter = max(diameter, int(distances.max()))
    return total / pairs, diameter


def stats(g, with_paths=False, seed=0):
    triangles = int(g.triangle_counts.sum()) // 3
    avg_degree = 2.0 * g.edge_count / g.node_count if g.node_count else 0.0
    avg_clustering = float(g.clustering_coefficients.mean()) if g.node_count else 0.0
    apl = diameter = None
    if with_paths:
        apl, diameter = path_lengths(g, seed=seed)
    return GraphStats(
        nodes=g.node_count,
        links=g.edge_count,
        avg_degree=avg_degree,
        triangles=triangles,
        avg_clustering=avg_clustering,
        apl=apl,
        diameter=diameter,
    )
