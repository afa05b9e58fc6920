import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import ShapeError

logger = logging.getLogger(__name__)

DEFAULT_ITERS = 50


@dataclass(frozen=True)
class LatentTable:
    vectors: np.ndarray

    @property
    def width(self):
        return self.vectors.shape[1]

    def __getitem__(self, node):
        return self.vectors[node]


def _fix_signs(basis):
    # Largest-magnitude entry of each column made positive.
    pivots = np.argmax(np.abs(basis), axis=0)
    signs = np.sign(basis[pivots, np.arange(basis.shape[1])])
    signs[signs == 0] = 1.0
    return basis * signs


def _factorize_block(adjacency, width, iters, seed):
    """
    Rank-`width` symmetric factorisation of one component's adjacency:
    subspace iteration followed by a Rayleigh-Ritz rotation, scaled by
    sqrt(|eigenvalue|).
    """
    n = adjacency.shape[0]
    rank = min(width, n)
    if n <= width:
        eigenvalues, basis = np.linalg.eigh(adjacency.toarray())
    else:
        basis, _ = np.linalg.qr(np.random.default_rng(seed).standard_normal((n, rank)))
        for _ in range(iters):
            basis, _ = np.linalg.qr(adjacency.dot(basis))
        projected = basis.T.dot(adjacency.dot(basis))
        eigenvalues, rotation = np.linalg.eigh((projected + projected.T) / 2.0)
        basis = basis.dot(rotation)
    strongest = np.argsort(-np.abs(eigenvalues), kind='stable')[:rank]
    basis = _fix_signs(basis[:, strongest])
    factors = np.zeros((n, width))
    factors[:, :rank] = basis * np.sqrt(np.abs(eigenvalues[strongest]))
    return factors


def latent_features(train, d_lat, iters=DEFAULT_ITERS, seed=0):
    """
    Per-node latent vectors from a factorisation of the train adjacency.

    Each connected component is factorised on its own, so isomorphic
    components receive matching rows. Every component starts from the same
    seeded basis. Rows are L2-normalised; all-zero rows
    (isolated nodes) stay zero.
    """
    if d_lat < 1:
        raise ValueError('d_lat must be at least 1, got {}.'.format(d_lat))
    if d_lat > train.node_count:
        raise ShapeError(
            'd_lat={} exceeds the {} nodes of the train graph.'.format(d_lat, train.node_count))

    adjacency = train.adjacency_matrix().tocsr()
    count, membership = train.components
    vectors = np.zeros((train.node_count, d_lat))
    for component in range(count):
        members = np.flatnonzero(membership == component)
        block = adjacency[members][:, members]
        vectors[members] = _factorize_block(block, d_lat, iters, seed)

    norms = np.linalg.norm(vectors, axis=1)
    nonzero = norms > 0
    vectors[nonzero] /= norms[nonzero, None]
    logger.debug('Latent table: %d components, width %d.', count, d_lat)
    return LatentTable(vectors=vectors)
