from dataclasses import dataclass

import numpy as np

from ..exceptions import ShapeError


@dataclass
class DenseParams:
    weights: np.ndarray
    bias: np.ndarray

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=np.float64)
        self.bias = np.asarray(self.bias, dtype=np.float64)
        if self.weights.ndim != 2 or self.bias.shape != (self.weights.shape[0],):
            raise ShapeError('Dense layer with weights {} and bias {} is inconsistent.'.format(
                self.weights.shape, self.bias.shape))
        if not (np.all(np.isfinite(self.weights)) and np.all(np.isfinite(self.bias))):
            raise ShapeError('Dense layer parameters must be finite.')

    @property
    def fan_in(self):
        return self.weights.shape[1]

    @property
    def fan_out(self):
        return self.weights.shape[0]

    @classmethod
    def initialise(cls, fan_in, fan_out, rng):
        """Uniform in ±1/sqrt(fan_in)."""
        bound = 1.0 / np.sqrt(fan_in) if fan_in else 0.0
        return cls(
            weights=rng.uniform(-bound, bound, size=(fan_out, fan_in)),
            bias=rng.uniform(-bound, bound, size=fan_out),
        )


def _relu(z):
    return np.maximum(z, 0.0)


def _relu_grad(z):
    return (z > 0).astype(np.float64)


def _sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def _sigmoid_grad(z):
    s = _sigmoid(z)
    return s * (1.0 - s)


def _tanh_grad(z):
    return 1.0 - np.tanh(z) ** 2


ACTIVATIONS = {
    'relu': (_relu, _relu_grad),
    'sigmoid': (_sigmoid, _sigmoid_grad),
    'tanh': (np.tanh, _tanh_grad),
}


def activation_pair(name):
    try:
        return ACTIVATIONS[name]
    except KeyError:
        raise ValueError('Unknown activation {!r}; choose from {}.'.format(name, sorted(ACTIVATIONS)))


def softmax(logits):
    logits = np.atleast_2d(logits)
    shifted = logits - logits.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def cross_entropy(logits, labels):
    """Mean softmax cross-entropy and its gradient with respect to the logits."""
    logits = np.atleast_2d(logits)
    labels = np.asarray(labels, dtype=np.int64)
    shifted = logits - logits.max(axis=1, keepdims=True)
    log_probs = shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))
    rows = np.arange(len(labels))
    loss = -log_probs[rows, labels].mean()
    grad = np.exp(log_probs)
    grad[rows, labels] -= 1.0
    return float(loss), grad / len(labels)


class Mlp(object):
    """
    Fully connected network. Hidden layers use `activation`; the last layer
    is linear and produces class logits.
    """
    def __init__(self, layers, activation='relu'):
        self.layers = list(layers)
        self.activation = activation
        self._act, self._act_grad = activation_pair(activation)
        for previous, layer in zip(self.layers, self.layers[1:]):
            if layer.fan_in != previous.fan_out:
                raise ShapeError('Layer expects {} inputs but the previous layer has {} outputs.'.format(
                    layer.fan_in, previous.fan_out))

    @classmethod
    def initialise(cls, sizes, rng, activation='relu'):
        layers = [DenseParams.initialise(a, b, rng) for a, b in zip(sizes, sizes[1:])]
        return cls(layers, activation=activation)

    @property
    def input_width(self):
        return self.layers[0].fan_in

    def parameters(self):
        return [array for layer in self.layers for array in (layer.weights, layer.bias)]

    def state(self):
        sizes = [self.layers[0].fan_in] + [layer.fan_out for layer in self.layers]
        return {'sizes': sizes, 'activation': self.activation}

    @classmethod
    def from_state(cls, state, parameters):
        """Rebuild from `state()` and arrays in `parameters()` order."""
        sizes = state['sizes']
        if len(parameters) != 2 * (len(sizes) - 1):
            raise ShapeError('Expected {} arrays for sizes {}, got {}.'.format(
                2 * (len(sizes) - 1), sizes, len(parameters)))
        layers = [DenseParams(parameters[i], parameters[i + 1]) for i in range(0, len(parameters), 2)]
        mlp = cls(layers, activation=state['activation'])
        if mlp.input_width != sizes[0] or [l.fan_out for l in layers] != list(sizes[1:]):
            raise ShapeError('Arrays do not match sizes {}.'.format(sizes))
        return mlp

    def _check_input(self, inputs):
        inputs = np.atleast_2d(np.asarray(inputs, dtype=np.float64))
        if inputs.shape[1] != self.input_width:
            raise ShapeError('Expected inputs of width {}, got {}.'.format(self.input_width, inputs.shape[1]))
        return inputs

    def forward_cached(self, inputs):
        activations = [self._check_input(inputs)]
        pre_activations = []
        for i, layer in enumerate(self.layers):
            z = activations[-1].dot(layer.weights.T) + layer.bias
            pre_activations.append(z)
            activations.append(z if i == len(self.layers) - 1 else self._act(z))
        return activations[-1], (activations, pre_activations)

    def forward(self, inputs):
        logits, _ = self.forward_cached(inputs)
        return logits

    def backward(self, cache, d_logits):
        """Gradients aligned with `parameters()`, plus the input gradient."""
        activations, pre_activations = cache
        grads = []
        delta = d_logits
        for i in reversed(range(len(self.layers))):
            layer = self.layers[i]
            if i != len(self.layers) - 1:
                delta = delta * self._act_grad(pre_activations[i])
            grads.append((delta.T.dot(activations[i]), delta.sum(axis=0)))
            delta = delta.dot(layer.weights)
        flat = [array for pair in reversed(grads) for array in pair]
        return flat, delta

    def loss_and_grad(self, inputs, labels):
        logits, cache = self.forward_cached(inputs)
        loss, d_logits = cross_entropy(logits, labels)
        grads, _ = self.backward(cache, d_logits)
        return loss, grads

    def predict_proba(self, inputs):
        """Probability of class 1 for each input row."""
        return softmax(self.forward(inputs))[:, 1]


def forward_mlp(params, inputs, activation='relu'):
    logits = Mlp(params, activation=activation).forward(inputs)
    return logits[0] if np.ndim(inputs) == 1 else logits


def loss_and_grad(params, batch, activation='relu'):
    """Mean cross-entropy over `batch` [(vector, class), ...] and per-layer gradients."""
    if not batch:
        raise ValueError('loss_and_grad needs a non-empty batch.')
    inputs = np.array([vector for vector, _ in batch], dtype=np.float64)
    labels = np.array([label for _, label in batch], dtype=np.int64)
    loss, flat = Mlp(params, activation=activation).loss_and_grad(inputs, labels)
    return loss, [DenseParams(flat[i], flat[i + 1]) for i in range(0, len(flat), 2)]
