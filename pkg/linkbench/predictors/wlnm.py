import logging

import numpy as np

from ..exceptions import ShapeError
from ..nn import Mlp, TrainConfig, train
from ..nn.persistence import register
from ..subgraphs import extract_k_subgraph, wl_label
from .base import TRAIN_GRAPH, LinkPredictor, extraction_graph, training_set

logger = logging.getLogger(__name__)

DEFAULT_K = 10
DEFAULT_HIDDEN = (32, 32, 16)


def encoding_width(k):
    return k * (k - 1) // 2 - 1


@register('wlnm')
class WlnmModel(LinkPredictor):
    """
    Weisfeiler-Lehman neural machine: the WL-ordered adjacency of the
    k-node enclosing subgraph, fed to an MLP.
    """
    approach = 'WLNM'

    def __init__(self, k=DEFAULT_K, hidden=DEFAULT_HIDDEN, cfg=None, network=None):
        if encoding_width(k) < 1:
            raise ShapeError('WLNM needs k >= 3 for a non-empty encoding, got k={}.'.format(k))
        self.k = k
        self.hidden = tuple(hidden)
        self.cfg = cfg or TrainConfig()
        self.network = network
        self.loss_trace = []

    @property
    def input_width(self):
        return encoding_width(self.k)

    def sample(self, g, u, v):
        return wl_label(extract_k_subgraph(g, u, v, self.k)).vector

    def fit(self, fold, graph=TRAIN_GRAPH):
        g = extraction_graph(fold, graph)
        pairs, labels = training_set(fold)
        inputs = self.batch_inputs([self.sample(g, u, v) for u, v in pairs])
        rng = np.random.default_rng(self.cfg.seed)
        sizes = [self.input_width] + list(self.hidden) + [2]
        self.network = Mlp.initialise(sizes, rng, activation=self.cfg.activation)
        self.loss_trace = train(self.network, inputs, labels, self.cfg)
        logger.info('WLNM trained on %d pairs, final loss %.4f.', len(labels), self.loss_trace[-1])
        return self

    def state(self):
        return {
            'k': self.k,
            'hidden': list(self.hidden),
            'cfg': self.cfg.as_dict(),
            'network': self.network.state(),
        }

    @classmethod
    def from_state(cls, state, parameters, buffers=()):
        return cls(
            k=state['k'],
            hidden=state['hidden'],
            cfg=TrainConfig(**state['cfg']),
            network=Mlp.from_state(state['network'], parameters),
        )


def wlnm_train(fold, k=DEFAULT_K, cfg=None, hidden=DEFAULT_HIDDEN, graph=TRAIN_GRAPH):
    return WlnmModel(k=k, hidden=hidden, cfg=cfg).fit(fold, graph=graph)


def wlnm_score(m, g, u, v):
    return m.score(g, u, v)
