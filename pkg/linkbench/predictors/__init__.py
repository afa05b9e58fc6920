from ..nn.persistence import load_model, save_model
from .base import GNN_GRAPHS, OBSERVED_GRAPH, TRAIN_GRAPH, LinkScore, extraction_graph, training_set
from .seal import SealModel, seal_score, seal_train
from .wlnm import WlnmModel, encoding_width, wlnm_score, wlnm_train

__all__ = [
    'GNN_GRAPHS',
    'OBSERVED_GRAPH',
    'TRAIN_GRAPH',
    'LinkScore',
    'SealModel',
    'WlnmModel',
    'encoding_width',
    'extraction_graph',
    'load_model',
    'save_model',
    'seal_score',
    'seal_train',
    'training_set',
    'wlnm_score',
    'wlnm_train',
]
