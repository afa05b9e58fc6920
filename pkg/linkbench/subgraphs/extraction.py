from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from ..exceptions import InvalidNodeError


@dataclass(frozen=True)
class EnclosingSubgraph:
    """
    Induced subgraph around a candidate pair.

    `nodes[0]` and `nodes[1]` are the target pair. `adjacency` never contains
    the target link itself, whether or not the link exists in the source
    graph. `dist_u`/`dist_v` are hop distances inside the subgraph (inf when
    unreachable) and `hop_of` is the ring each node was added in.
    `padded_size` is the node count encodings are padded to.
    """
    nodes: tuple
    adjacency: np.ndarray
    hop_of: tuple
    dist_u: np.ndarray
    dist_v: np.ndarray
    padded_size: int

    @property
    def size(self):
        return len(self.nodes)

    @property
    def target(self):
        return (0, 1)


def _check_pair(g, u, v):
    g.check_node(u)
    g.check_node(v)
    if u == v:
        raise InvalidNodeError('A candidate pair needs two distinct nodes, got ({0}, {0}).'.format(u))


def _rings(g, u, v, max_hops=None, enough=None):
    """
    Breadth-first rings around {u, v}: [[u, v], ring 1, ring 2, ...].

    Expansion stops after `max_hops` rings, once `enough` nodes are gathered,
    or when nothing new is reachable.
    """
    rings = [[u, v]]
    seen = {u, v}
    frontier = [u, v]
    while frontier:
        if max_hops is not None and len(rings) > max_hops:
            break
        if enough is not None and len(seen) >= enough:
            break
        ring = set()
        for w in frontier:
            ring.update(x for x in g.neighbor_set(w) if x not in seen)
        if not ring:
            break
        ring = sorted(ring)
        seen.update(ring)
        rings.append(ring)
        frontier = ring
    return rings


def _local_adjacency(g, nodes):
    position = {node: i for i, node in enumerate(nodes)}
    matrix = np.zeros((len(nodes), len(nodes)), dtype=bool)
    for i, node in enumerate(nodes):
        for neighbour in g.neighbor_set(node):
            j = position.get(neighbour)
            if j is not None:
                matrix[i, j] = True
    # The candidate link is temporarily removed.
    matrix[0, 1] = matrix[1, 0] = False
    return matrix


def target_distances(adjacency):
    """Hop distances from local nodes 0 and 1, as two float arrays."""
    distances = csgraph.shortest_path(
        sparse.csr_matrix(adjacency.astype(np.int8)),
        directed=False,
        unweighted=True,
        indices=[0, 1],
    )
    return distances[0], distances[1]


def _build(g, rings, padded_size):
    nodes = tuple(node for ring in rings for node in ring)
    hop_of = tuple(hop for hop, ring in enumerate(rings) for _ in ring)
    adjacency = _local_adjacency(g, nodes)
    dist_u, dist_v = target_distances(adjacency)
    return EnclosingSubgraph(
        nodes=nodes,
        adjacency=adjacency,
        hop_of=hop_of,
        dist_u=dist_u,
        dist_v=dist_v,
        padded_size=padded_size,
    )


def extract_k_subgraph(g, u, v, k):
    """
    Enclosing subgraph of exactly `k` nodes (fewer when less are reachable;
    encodings then pad the missing rows as isolated nodes).

    Rings are added until at least `k` nodes are gathered; surplus nodes are
    dropped from the last ring only, keeping smaller dist_u + dist_v first and
    then smaller node ids.
    """
    if k < 2:
        raise ValueError('k must be at least 2, got {}.'.format(k))
    _check_pair(g, u, v)
    rings = _rings(g, u, v, enough=k)
    gathered = sum(len(ring) for ring in rings)
    if gathered > k:
        nodes = [node for ring in rings for node in ring]
        dist_u, dist_v = target_distances(_local_adjacency(g, nodes))
        offset = gathered - len(rings[-1])
        last = sorted(
            range(len(rings[-1])),
            key=lambda i: (dist_u[offset + i] + dist_v[offset + i], rings[-1][i]),
        )
        keep = k - offset
        rings[-1] = sorted(rings[-1][i] for i in last[:keep])
    return _build(g, rings, padded_size=k)


def extract_h_subgraph(g, u, v, h):
    """Union of the h-hop neighbourhoods of u and v, untruncated."""
    if h < 1:
        raise ValueError('h must be at least 1, got {}.'.format(h))
    _check_pair(g, u, v)
    rings = _rings(g, u, v, max_hops=h)
    size = sum(len(ring) for ring in rings)
    return _build(g, rings, padded_size=size)
