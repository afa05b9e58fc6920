import logging

import numpy as np

from ..nn import SortPoolClassifier, TrainConfig, train
from ..nn.persistence import register
from ..subgraphs import FeatureLayout, LatentTable, build_feature_matrix, drnl, extract_h_subgraph, latent_features
from ..subgraphs.features import DEFAULT_LABEL_CAP
from ..subgraphs.latent import DEFAULT_ITERS
from .base import TRAIN_GRAPH, LinkPredictor, extraction_graph, training_set

logger = logging.getLogger(__name__)


@register('seal')
class SealModel(LinkPredictor):
    """
    SEAL-lite: DRNL-labelled h-hop subgraphs with latent and attribute
    features, read by stacked GNN layers, sort pooling and an MLP head.
    """
    approach = 'SEAL-lite'

    def __init__(self, h=1, layers=3, hidden=32, k_sp=30, head_hidden=32, d_lat=16,
                 label_cap=DEFAULT_LABEL_CAP, latent_iters=DEFAULT_ITERS, cfg=None,
                 network=None, layout=None, latent=None):
        if h < 1:
            raise ValueError('h must be at least 1, got {}.'.format(h))
        self.h = h
        self.layers = layers
        self.hidden = hidden
        self.k_sp = k_sp
        self.head_hidden = head_hidden
        self.d_lat = d_lat
        self.label_cap = label_cap
        self.latent_iters = latent_iters
        self.cfg = cfg or TrainConfig()
        self.network = network
        self.layout = layout
        self.latent = latent
        self.loss_trace = []

    def sample(self, g, u, v):
        sg = extract_h_subgraph(g, u, v, self.h)
        features = build_feature_matrix(sg, drnl(sg), self.layout, self.latent, g.attributes)
        return sg.adjacency, features.rows

    def batch_inputs(self, samples):
        return samples

    def fit(self, fold, graph=TRAIN_GRAPH):
        g = extraction_graph(fold, graph)
        pairs, labels = training_set(fold)
        # Latents come from train links only, whatever graph subgraphs use.
        self.latent = latent_features(fold.train_graph, self.d_lat, iters=self.latent_iters, seed=self.cfg.seed)
        self.layout = FeatureLayout.for_graph(g, label_cap=self.label_cap, latent_width=self.d_lat)
        samples = [self.sample(g, u, v) for u, v in pairs]

        rng = np.random.default_rng(self.cfg.seed)
        self.network = SortPoolClassifier.initialise(
            self.layout.width, rng,
            hidden=self.hidden, layers=self.layers, k_sp=self.k_sp,
            head_hidden=self.head_hidden, activation=self.cfg.activation,
        )
        self.loss_trace = train(self.network, samples, labels, self.cfg)
        logger.info(
            'SEAL-lite trained on %d pairs (feature width %d), final loss %.4f.',
            len(labels), self.layout.width, self.loss_trace[-1],
        )
        return self

    def buffers(self):
        self._require_trained()
        return [self.latent.vectors]

    def state(self):
        return {
            'h': self.h,
            'layers': self.layers,
            'hidden': self.hidden,
            'k_sp': self.k_sp,
            'head_hidden': self.head_hidden,
            'd_lat': self.d_lat,
            'label_cap': self.label_cap,
            'latent_iters': self.latent_iters,
            'attribute_values': list(self.layout.attribute_values),
            'cfg': self.cfg.as_dict(),
            'network': self.network.state(),
        }

    @classmethod
    def from_state(cls, state, parameters, buffers=()):
        layout = FeatureLayout(
            label_cap=state['label_cap'],
            latent_width=state['d_lat'],
            attribute_values=tuple(state['attribute_values']),
        )
        return cls(
            h=state['h'],
            layers=state['layers'],
            hidden=state['hidden'],
            k_sp=state['k_sp'],
            head_hidden=state['head_hidden'],
            d_lat=state['d_lat'],
            label_cap=state['label_cap'],
            latent_iters=state['latent_iters'],
            cfg=TrainConfig(**state['cfg']),
            network=SortPoolClassifier.from_state(state['network'], parameters),
            layout=layout,
            latent=LatentTable(vectors=buffers[0]),
        )


def seal_train(fold, params=None, cfg=None, graph=TRAIN_GRAPH):
    """Train SEAL-lite; `params` holds SealModel keyword overrides."""
    return SealModel(cfg=cfg, **(params or {})).fit(fold, graph=graph)


def seal_score(m, g, u, v):
    return m.score(g, u, v)
