import logging
from dataclasses import asdict, dataclass

import numpy as np

from ..exceptions import ConfigError, TrainingError
from .layers import ACTIVATIONS
from .optim import ADAM, OPTIMIZERS, build_optimizer

logger = logging.getLogger(__name__)

CROSS_ENTROPY = 'cross_entropy'


@dataclass(frozen=True)
class TrainConfig:
    optimizer: str = ADAM
    learning_rate: float = 1e-3
    epochs: int = 50
    batch_size: int = 32
    seed: int = 0
    loss: str = CROSS_ENTROPY
    activation: str = 'relu'

    def __post_init__(self):
        if self.optimizer not in OPTIMIZERS:
            raise ConfigError('Unknown optimizer {!r}.'.format(self.optimizer))
        if not self.learning_rate > 0:
            raise ConfigError('learning_rate must be positive, got {}.'.format(self.learning_rate))
        if self.epochs < 1:
            raise ConfigError('epochs must be at least 1, got {}.'.format(self.epochs))
        if self.batch_size < 1:
            raise ConfigError('batch_size must be at least 1, got {}.'.format(self.batch_size))
        if self.loss != CROSS_ENTROPY:
            raise ConfigError('Only the {} loss is supported.'.format(CROSS_ENTROPY))
        if self.activation not in ACTIVATIONS:
            raise ConfigError('Unknown activation {!r}.'.format(self.activation))

    def as_dict(self):
        return asdict(self)


def _take(inputs, indices):
    if isinstance(inputs, np.ndarray):
        return inputs[indices]
    return [inputs[i] for i in indices]


def train(model, inputs, labels, cfg):
    """
    Minibatch training of `model` in place.

    `model` exposes `parameters()` and `loss_and_grad(inputs, labels)`; the
    optimizer updates the returned arrays directly. Returns the mean loss of
    every epoch.
    """
    labels = np.asarray(labels, dtype=np.int64)
    if len(labels) == 0 or len(inputs) != len(labels):
        raise TrainingError('Training needs a non-empty set with one label per input.')
    rng = np.random.default_rng(cfg.seed)
    optimizer = build_optimizer(cfg.optimizer, cfg.learning_rate)
    parameters = model.parameters()

    trace = []
    for epoch in range(1, cfg.epochs + 1):
        order = rng.permutation(len(labels))
        weighted = 0.0
        for start in range(0, len(order), cfg.batch_size):
            batch = order[start:start + cfg.batch_size]
            loss, grads = model.loss_and_grad(_take(inputs, batch), labels[batch])
            if not np.isfinite(loss):
                raise TrainingError('Training diverged in epoch {} (loss {}).'.format(epoch, loss), epoch=epoch)
            optimizer.step(parameters, grads)
            weighted += loss * len(batch)
        mean_loss = weighted / len(order)
        trace.append(mean_loss)
        logger.debug('Epoch %d/%d: loss %.6f', epoch, cfg.epochs, mean_loss)
    return trace


def smoothed(trace, window=5):
    """Trailing moving average of a loss trace."""
    trace = np.asarray(trace, dtype=np.float64)
    if len(trace) < window:
        return trace
    kernel = np.ones(window) / window
    return np.convolve(trace, kernel, mode='valid')
