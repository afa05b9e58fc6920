import hashlib

import numpy as np
from django.utils.functional import cached_property
from scipy import sparse
from scipy.sparse import csgraph

from ..exceptions import InvalidNodeError


def canonical_pair(u, v):
    return (u, v) if u < v else (v, u)


class Graph(object):
    """
    Immutable undirected simple graph over dense node ids 0..node_count-1.

    `labels` maps node ids back to the labels they were interned from and
    `attributes` optionally holds one categorical value (or None) per node.
    Self-loops and repeated links are dropped on construction; loaders count
    them before building the graph.
    """
    def __init__(self, edges, node_count=None, labels=None, attributes=None):
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if node_count is None:
                node_count = len(labels)
        edge_set = set()
        highest = -1
        for u, v in edges:
            u, v = int(u), int(v)
            if u < 0 or v < 0:
                raise InvalidNodeError('Node ids must be non-negative.')
            highest = max(highest, u, v)
            if u != v:
                edge_set.add(canonical_pair(u, v))
        if node_count is None:
            node_count = highest + 1
        if highest >= node_count:
            raise InvalidNodeError(
                'Node id {} out of range for {} nodes.'.format(highest, node_count))
        if labels is None:
            labels = tuple(str(i) for i in range(node_count))
        if len(labels) != node_count:
            raise InvalidNodeError('Expected {} labels, got {}.'.format(node_count, len(labels)))
        if attributes is not None:
            attributes = tuple(attributes)
            if len(attributes) != node_count:
                raise InvalidNodeError(
                    'Expected {} attributes, got {}.'.format(node_count, len(attributes)))

        neighbours = [[] for _ in range(node_count)]
        for u, v in edge_set:
            neighbours[u].append(v)
            neighbours[v].append(u)

        self._node_count = node_count
        self._labels = labels
        self._attributes = attributes
        self._edge_set = frozenset(edge_set)
        self._adjacency = tuple(tuple(sorted(n)) for n in neighbours)
        self._neighbour_sets = tuple(frozenset(n) for n in neighbours)

    def __repr__(self):
        return '<Graph nodes={} links={}>'.format(self.node_count, self.edge_count)

    def __len__(self):
        return self._node_count

    @property
    def node_count(self):
        return self._node_count

    @property
    def edge_count(self):
        return len(self._edge_set)

    @property
    def labels(self):
        return self._labels

    @property
    def attributes(self):
        return self._attributes

    @property
    def edge_set(self):
        return self._edge_set

    @property
    def adjacency(self):
        return self._adjacency

    @cached_property
    def index(self):
        return {label: i for i, label in enumerate(self._labels)}

    def check_node(self, v):
        if not 0 <= v < self._node_count:
            raise InvalidNodeError(
                'Node {} out of range for a graph of {} nodes.'.format(v, self._node_count))

    def label_of(self, v):
        self.check_node(v)
        return self._labels[v]

    def node_of(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise InvalidNodeError('Unknown node label {!r}.'.format(label))

    def neighbors(self, v):
        self.check_node(v)
        return self._adjacency[v]

    def neighbor_set(self, v):
        self.check_node(v)
        return self._neighbour_sets[v]

    def degree(self, v):
        self.check_node(v)
        return len(self._adjacency[v])

    def has_edge(self, u, v):
        return canonical_pair(u, v) in self._edge_set

    def edges(self):
        return sorted(self._edge_set)

    def degrees(self):
        return np.fromiter((len(n) for n in self._adjacency), dtype=np.int64, count=self._node_count)

    def adjacency_matrix(self, dtype=np.float64):
        """Symmetric scipy CSR adjacency matrix."""
        return self._csr.astype(dtype)

    @cached_property
    def _csr(self):
        pairs = np.array(self.edges(), dtype=np.int64).reshape(-1, 2)
        rows = np.concatenate([pairs[:, 0], pairs[:, 1]])
        cols = np.concatenate([pairs[:, 1], pairs[:, 0]])
        data = np.ones(len(rows), dtype=np.int8)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self._node_count, self._node_count))

    @cached_property
    def triangle_counts(self):
        """Number of triangles through each node, as an int64 array."""
        adjacency = self._csr.astype(np.int64)
        closed = adjacency.dot(adjacency).multiply(adjacency)
        return np.asarray(closed.sum(axis=1)).ravel() // 2

    @cached_property
    def clustering_coefficients(self):
        degrees = self.degrees().astype(np.float64)
        possible = degrees * (degrees - 1)
        coefficients = np.zeros(self._node_count)
        mask = degrees >= 2
        coefficients[mask] = 2.0 * self.triangle_counts[mask] / possible[mask]
        return coefficients

    @cached_property
    def components(self):
        """(component count, per-node component label)."""
        return csgraph.connected_components(self._csr, directed=False)

    def without_edges(self, pairs):
        removed = {canonical_pair(u, v) for u, v in pairs}
        return Graph(
            (e for e in self.edges() if e not in removed),
            node_count=self._node_count,
            labels=self._labels,
            attributes=self._attributes,
        )

    def with_edges(self, pairs):
        return Graph(
            list(self.edges()) + [canonical_pair(u, v) for u, v in pairs],
            node_count=self._node_count,
            labels=self._labels,
            attributes=self._attributes,
        )

    def checksum(self):
        """SHA-256 over the labelled edge list; stable across reloads."""
        digest = hashlib.sha256()
        digest.update('{}\n'.format(self._node_count).encode('utf-8'))
        for label in self._labels:
            digest.update(label.encode('utf-8'))
            digest.update(b'\0')
        for u, v in self.edges():
            digest.update('{} {}\n'.format(u, v).encode('utf-8'))
        return digest.hexdigest()
