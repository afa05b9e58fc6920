import itertools
import logging

import numpy as np

from ..exceptions import SamplingError
from ..graphs import canonical_pair
from .pairs import PairSet, Polarity

logger = logging.getLogger(__name__)

# Below this share of free pairs, enumerate the candidates instead of rejecting.
ENUMERATE_BELOW = 0.25


def sample_negatives(g, n, exclude=(), seed=0):
    """
    Draw `n` distinct non-edges of `g`, uniformly over unordered pairs,
    avoiding every pair in the `exclude` pair sets.
    """
    excluded = set()
    for pair_set in exclude:
        excluded.update(canonical_pair(u, v) for u, v in pair_set)
    excluded_non_edges = sum(1 for pair in excluded if pair not in g.edge_set)

    total_pairs = g.node_count * (g.node_count - 1) // 2
    available = total_pairs - g.edge_count - excluded_non_edges
    if n < 0 or n > available:
        raise SamplingError(
            'Cannot sample {} negative pairs: only {} non-edges are available.'.format(n, available))

    rng = np.random.default_rng(seed)
    if n == 0:
        return PairSet((), Polarity.NEGATIVE)

    if available < ENUMERATE_BELOW * total_pairs:
        candidates = [
            pair for pair in itertools.combinations(range(g.node_count), 2)
            if pair not in g.edge_set and pair not in excluded
        ]
        chosen = rng.choice(len(candidates), size=n, replace=False)
        return PairSet((candidates[i] for i in chosen), Polarity.NEGATIVE)

    drawn = []
    taken = set()
    rejected = 0
    while len(drawn) < n:
        u, v = (int(x) for x in rng.integers(0, g.node_count, size=2))
        pair = canonical_pair(u, v)
        if u == v or pair in g.edge_set or pair in excluded or pair in taken:
            rejected += 1
            continue
        taken.add(pair)
        drawn.append(pair)
    logger.debug('Sampled %d negatives with %d rejections.', n, rejected)
    return PairSet(drawn, Polarity.NEGATIVE)
