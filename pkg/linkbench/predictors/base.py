import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import ConfigError, ModelStateError, TrainingError
from ..graphs import canonical_pair
from .serializers import ModelManifestSerializer

logger = logging.getLogger(__name__)

TRAIN_GRAPH = 'train'
OBSERVED_GRAPH = 'observed'
GNN_GRAPHS = (TRAIN_GRAPH, OBSERVED_GRAPH)


@dataclass(frozen=True)
class LinkScore:
    u: int
    v: int
    prob: float


def extraction_graph(fold, protocol=TRAIN_GRAPH):
    """
    Graph the GNN approaches extract subgraphs from. Candidate links are
    masked during extraction, so the observed graph never leaks the label.
    """
    if protocol == TRAIN_GRAPH:
        return fold.train_graph
    if protocol == OBSERVED_GRAPH:
        return fold.observed_graph()
    raise ConfigError('Unknown GNN graph {!r}; choose from {}.'.format(protocol, GNN_GRAPHS))


def training_set(fold):
    """Train positives (class 1) then train negatives (class 0), balanced 1:1."""
    if len(fold.train_pos) != len(fold.train_neg):
        raise TrainingError('Training needs as many negatives as positives, got {} and {}.'.format(
            len(fold.train_pos), len(fold.train_neg)))
    if not len(fold.train_pos):
        raise TrainingError('The fold has no training links.')
    pairs = list(fold.train_pos) + list(fold.train_neg)
    labels = np.array([1] * len(fold.train_pos) + [0] * len(fold.train_neg), dtype=np.int64)
    return pairs, labels


class LinkPredictor(object):
    """
    Shared behaviour of the learned predictors.

    Subclasses set `kind` (through `nn.persistence.register`) and `approach`,
    build `self.network` in `fit` and implement `sample(g, u, v)`, the
    network input for one canonical pair.
    """
    approach = None
    network = None

    @property
    def is_trained(self):
        return self.network is not None

    def _require_trained(self):
        if not self.is_trained:
            raise ModelStateError('{} model has not been trained.'.format(self.approach))

    def parameters(self):
        self._require_trained()
        return self.network.parameters()

    def buffers(self):
        return []

    def batch_inputs(self, samples):
        return np.array(samples, dtype=np.float64)

    def probabilities(self, g, pairs):
        self._require_trained()
        samples = [self.sample(g, *canonical_pair(u, v)) for u, v in pairs]
        if not samples:
            return np.zeros(0)
        return self.network.predict_proba(self.batch_inputs(samples))

    def score(self, g, u, v):
        prob = self.probabilities(g, [(u, v)])[0]
        return LinkScore(u, v, float(prob))

    def score_pairs(self, g, pairs):
        pairs = list(pairs)
        probs = self.probabilities(g, pairs)
        return [LinkScore(u, v, float(p)) for (u, v), p in zip(pairs, probs)]

    def manifest(self, fold, graph, config_hash=''):
        serializer = ModelManifestSerializer(data={
            'approach': self.approach,
            'graph_checksum': graph.checksum(),
            'fold_index': fold.fold_index,
            'seed': fold.seed,
            'config_hash': config_hash,
        })
        serializer.is_valid(raise_exception=True)
        return dict(serializer.validated_data)
