import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from ..exceptions import SplitError
from ..graphs import Graph
from .pairs import PairSet, Polarity
from .sampling import sample_negatives

logger = logging.getLogger(__name__)

DEFAULT_FOLDS = 5
DEFAULT_TEST_FRACTION = 0.1


@dataclass(frozen=True)
class SplitBundle:
    fold_index: int
    seed: int
    train_graph: Graph
    train_pos: PairSet
    train_neg: PairSet
    test_pos: PairSet
    test_neg: PairSet
    test_fraction: float = DEFAULT_TEST_FRACTION

    def observed_graph(self):
        """Train links plus test positives: the full graph the fold came from."""
        return self.train_graph.with_edges(self.test_pos)


def holdout_size(edge_count, test_fraction):
    return int(math.floor(test_fraction * edge_count + 0.5))


def fold_rng(seed, fold_index):
    return np.random.default_rng([int(seed), int(fold_index)])


def spanning_forest(g, rng):
    """
    Edges of a random spanning forest of `g`: a minimum spanning forest under
    i.i.d. uniform link weights drawn from `rng`.
    """
    edges = g.edges()
    if not edges:
        return set()
    pairs = np.array(edges, dtype=np.int64)
    # Weights in [1, 2): csgraph treats explicit zeros as missing links.
    weights = 1.0 + rng.random(len(edges))
    matrix = sparse.csr_matrix((weights, (pairs[:, 0], pairs[:, 1])), shape=(g.node_count, g.node_count))
    forest = csgraph.minimum_spanning_tree(matrix).tocoo()
    return {(min(u, v), max(u, v)) for u, v in zip(forest.row.tolist(), forest.col.tolist())}


def make_fold(g, fold_index, test_fraction=DEFAULT_TEST_FRACTION, seed=0, with_negatives=True):
    if not 0 < test_fraction < 1:
        raise SplitError('test_fraction must lie strictly between 0 and 1, got {}.'.format(test_fraction))
    quota = holdout_size(g.edge_count, test_fraction)
    if quota < 1:
        raise SplitError('A test fraction of {} leaves no test links in {} links.'.format(
            test_fraction, g.edge_count))

    rng = fold_rng(seed, fold_index)
    forest = spanning_forest(g, rng)
    co_tree = [edge for edge in g.edges() if edge not in forest]
    if quota > len(co_tree):
        raise SplitError(
            'Need {} removable links for the test set but only {} links lie outside '
            'the spanning forest (short by {}).'.format(quota, len(co_tree), quota - len(co_tree)))

    chosen = np.sort(rng.choice(len(co_tree), size=quota, replace=False))
    test_pos = PairSet((co_tree[i] for i in chosen), Polarity.POSITIVE)
    train_graph = g.without_edges(test_pos)
    train_pos = PairSet(train_graph.edges(), Polarity.POSITIVE)

    if with_negatives:
        train_seed, test_seed = (int(s) for s in rng.integers(0, 2 ** 63 - 1, size=2))
        train_neg = sample_negatives(g, len(train_pos), seed=train_seed)
        test_neg = sample_negatives(g, len(test_pos), exclude=[train_neg], seed=test_seed)
    else:
        train_neg = test_neg = PairSet((), Polarity.NEGATIVE)

    logger.info(
        'Fold %d: %d train links, %d test links, %d/%d negatives.',
        fold_index, len(train_pos), len(test_pos), len(train_neg), len(test_neg),
    )
    return SplitBundle(
        fold_index=fold_index,
        seed=seed,
        train_graph=train_graph,
        train_pos=train_pos,
        train_neg=train_neg,
        test_pos=test_pos,
        test_neg=test_neg,
        test_fraction=test_fraction,
    )


def make_splits(g, folds=DEFAULT_FOLDS, test_fraction=DEFAULT_TEST_FRACTION, seed=0, with_negatives=True):
    """
    Random sub-sampling folds over `g`.

    Test positives are drawn only from links outside a seeded spanning forest,
    so every train graph keeps the component structure of `g`. Each fold
    draws from its own (seed, fold_index) stream.
    """
    return [
        make_fold(g, i, test_fraction=test_fraction, seed=seed, with_negatives=with_negatives)
        for i in range(folds)
    ]
