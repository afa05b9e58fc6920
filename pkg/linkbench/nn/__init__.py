from .gradcheck import check_gradients
from .graph_layers import GnnLayerParams, SortPoolClassifier, gnn_layer, sort_pool
from .layers import ACTIVATIONS, DenseParams, Mlp, cross_entropy, forward_mlp, loss_and_grad, softmax
from .optim import Adam, Sgd
from .persistence import FORMAT_VERSION, load_model, save_model
from .training import TrainConfig, train

__all__ = [
    'ACTIVATIONS',
    'Adam',
    'DenseParams',
    'FORMAT_VERSION',
    'GnnLayerParams',
    'Mlp',
    'Sgd',
    'SortPoolClassifier',
    'TrainConfig',
    'check_gradients',
    'cross_entropy',
    'forward_mlp',
    'gnn_layer',
    'load_model',
    'loss_and_grad',
    'save_model',
    'softmax',
    'sort_pool',
    'train',
]
