from dataclasses import dataclass

import numpy as np

from ..exceptions import ShapeError
from .layers import Mlp, cross_entropy, softmax


@dataclass
class GnnLayerParams:
    """
    One message-passing layer: messages are W_msg h_j, aggregation is the
    neighbour mean, and the update is relu(W_self h_i + M_i + bias).
    """
    w_self: np.ndarray
    w_msg: np.ndarray
    bias: np.ndarray

    def __post_init__(self):
        self.w_self = np.asarray(self.w_self, dtype=np.float64)
        self.w_msg = np.asarray(self.w_msg, dtype=np.float64)
        self.bias = np.asarray(self.bias, dtype=np.float64)
        if self.w_self.shape != self.w_msg.shape or self.bias.shape != (self.w_self.shape[0],):
            raise ShapeError('GNN layer shapes {}, {}, {} are inconsistent.'.format(
                self.w_self.shape, self.w_msg.shape, self.bias.shape))

    @property
    def fan_in(self):
        return self.w_self.shape[1]

    @property
    def fan_out(self):
        return self.w_self.shape[0]

    @classmethod
    def initialise(cls, fan_in, fan_out, rng):
        bound = 1.0 / np.sqrt(fan_in)
        return cls(
            w_self=rng.uniform(-bound, bound, size=(fan_out, fan_in)),
            w_msg=rng.uniform(-bound, bound, size=(fan_out, fan_in)),
            bias=rng.uniform(-bound, bound, size=fan_out),
        )


def mean_operator(adjacency):
    """Row-normalised adjacency; rows of isolated nodes stay zero."""
    adjacency = np.asarray(adjacency, dtype=np.float64)
    degrees = adjacency.sum(axis=1)
    scale = np.zeros_like(degrees)
    np.divide(1.0, degrees, out=scale, where=degrees > 0)
    return adjacency * scale[:, None]


def _check_layer_input(adjacency, features, params):
    n = features.shape[0]
    if adjacency.shape != (n, n):
        raise ShapeError('Adjacency {} does not match {} node rows.'.format(adjacency.shape, n))
    if features.shape[1] != params.fan_in:
        raise ShapeError('Layer expects width {}, got {}.'.format(params.fan_in, features.shape[1]))


def gnn_layer_cached(mean, features, params):
    messages = features.dot(params.w_msg.T)
    z = features.dot(params.w_self.T) + mean.dot(messages) + params.bias
    return np.maximum(z, 0.0), (features, mean, z)


def gnn_layer(adj, H, params):
    H = np.atleast_2d(np.asarray(H, dtype=np.float64))
    adj = np.asarray(adj, dtype=np.float64)
    _check_layer_input(adj, H, params)
    out, _ = gnn_layer_cached(mean_operator(adj), H, params)
    return out


def gnn_layer_backward(cache, params, d_out):
    """Returns ((d_w_self, d_w_msg, d_bias), d_features)."""
    features, mean, z = cache
    dz = d_out * (z > 0)
    d_messages = mean.T.dot(dz)
    grads = (dz.T.dot(features), d_messages.T.dot(features), dz.sum(axis=0))
    d_features = dz.dot(params.w_self) + d_messages.dot(params.w_msg)
    return grads, d_features


def sort_order(H):
    """Rows by last channel descending, ties by earlier channels, then index."""
    keys = (np.arange(H.shape[0]),) + tuple(-H[:, c] for c in range(H.shape[1]))
    return np.lexsort(keys)


def sort_pool_cached(H, k_sp):
    if k_sp < 1:
        raise ValueError('k_sp must be at least 1, got {}.'.format(k_sp))
    H = np.atleast_2d(np.asarray(H, dtype=np.float64))
    kept = sort_order(H)[:k_sp]
    pooled = np.zeros((k_sp, H.shape[1]))
    pooled[:len(kept)] = H[kept]
    return pooled.ravel(), (kept, H.shape)


def sort_pool(H, k_sp):
    pooled, _ = sort_pool_cached(H, k_sp)
    return pooled


def sort_pool_backward(cache, d_pooled):
    kept, shape = cache
    d_rows = d_pooled.reshape(-1, shape[1])
    d_features = np.zeros(shape)
    d_features[kept] = d_rows[:len(kept)]
    return d_features


class SortPoolClassifier(object):
    """
    Stacked GNN layers, a sort-pooling readout and an MLP head.

    A sample is an (adjacency, features) pair for one enclosing subgraph.
    """
    def __init__(self, gnn_layers, head, k_sp):
        self.gnn_layers = list(gnn_layers)
        self.head = head
        self.k_sp = k_sp
        pooled_width = k_sp * self.gnn_layers[-1].fan_out
        if head.input_width != pooled_width:
            raise ShapeError('Head expects {} inputs, sort pooling gives {}.'.format(
                head.input_width, pooled_width))

    @classmethod
    def initialise(cls, feature_width, rng, hidden=32, layers=3, k_sp=30, head_hidden=32, activation='relu'):
        widths = [feature_width] + [hidden] * layers
        gnn_layers = [GnnLayerParams.initialise(a, b, rng) for a, b in zip(widths, widths[1:])]
        head = Mlp.initialise([k_sp * hidden, head_hidden, 2], rng, activation=activation)
        return cls(gnn_layers, head, k_sp)

    @property
    def feature_width(self):
        return self.gnn_layers[0].fan_in

    def parameters(self):
        arrays = []
        for layer in self.gnn_layers:
            arrays.extend((layer.w_self, layer.w_msg, layer.bias))
        return arrays + self.head.parameters()

    def state(self):
        widths = [self.feature_width] + [layer.fan_out for layer in self.gnn_layers]
        return {'widths': widths, 'k_sp': self.k_sp, 'head': self.head.state()}

    @classmethod
    def from_state(cls, state, parameters):
        count = 3 * (len(state['widths']) - 1)
        gnn_layers = [GnnLayerParams(*parameters[i:i + 3]) for i in range(0, count, 3)]
        head = Mlp.from_state(state['head'], parameters[count:])
        return cls(gnn_layers, head, state['k_sp'])

    def _forward_sample(self, adjacency, features):
        features = np.atleast_2d(np.asarray(features, dtype=np.float64))
        adjacency = np.asarray(adjacency, dtype=np.float64)
        _check_layer_input(adjacency, features, self.gnn_layers[0])
        mean = mean_operator(adjacency)
        caches = []
        h = features
        for layer in self.gnn_layers:
            h, cache = gnn_layer_cached(mean, h, layer)
            caches.append(cache)
        pooled, pool_cache = sort_pool_cached(h, self.k_sp)
        return pooled, (caches, pool_cache)

    def forward(self, samples):
        pooled = np.array([self._forward_sample(a, x)[0] for a, x in samples])
        return self.head.forward(pooled)

    def predict_proba(self, samples):
        return softmax(self.forward(samples))[:, 1]

    def loss_and_grad(self, samples, labels):
        forwards = [self._forward_sample(a, x) for a, x in samples]
        pooled = np.array([f[0] for f in forwards])
        logits, head_cache = self.head.forward_cached(pooled)
        loss, d_logits = cross_entropy(logits, labels)
        head_grads, d_pooled = self.head.backward(head_cache, d_logits)

        gnn_grads = [[np.zeros_like(p) for p in (l.w_self, l.w_msg, l.bias)] for l in self.gnn_layers]
        for (_, (caches, pool_cache)), d_row in zip(forwards, d_pooled):
            d_h = sort_pool_backward(pool_cache, d_row)
            for index in reversed(range(len(self.gnn_layers))):
                grads, d_h = gnn_layer_backward(caches[index], self.gnn_layers[index], d_h)
                for total, grad in zip(gnn_grads[index], grads):
                    total += grad
        flat = [array for layer_grads in gnn_grads for array in layer_grads]
        return loss, flat + head_grads
