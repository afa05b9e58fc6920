import numpy as np
from django.test import SimpleTestCase

from ...exceptions import ConfigError, TrainingError
from ..layers import Mlp
from ..optim import Adam, Sgd, build_optimizer
from ..training import TrainConfig, smoothed, train


def blobs(seed=0, count=40):
    rng = np.random.default_rng(seed)
    inputs = np.vstack([
        rng.normal(2.0, 0.5, size=(count, 2)),
        rng.normal(-2.0, 0.5, size=(count, 2)),
    ])
    labels = np.array([1] * count + [0] * count)
    return inputs, labels


class DivergingModel(object):
    def __init__(self):
        self.weight = np.zeros(1)

    def parameters(self):
        return [self.weight]

    def loss_and_grad(self, inputs, labels):
        return float('nan'), [np.zeros(1)]


class TestTrainConfig(SimpleTestCase):
    def test_defaults(self):
        cfg = TrainConfig()
        self.assertEqual(cfg.as_dict(), {
            'optimizer': 'adam',
            'learning_rate': 1e-3,
            'epochs': 50,
            'batch_size': 32,
            'seed': 0,
            'loss': 'cross_entropy',
            'activation': 'relu',
        })

    def test_invalid_values(self):
        for kwargs in (
            {'epochs': 0},
            {'learning_rate': 0.0},
            {'batch_size': 0},
            {'optimizer': 'rmsprop'},
            {'loss': 'hinge'},
            {'activation': 'swish'},
        ):
            with self.assertRaises(ConfigError):
                TrainConfig(**kwargs)


class TestTrain(SimpleTestCase):
    def test_separable_blobs(self):
        inputs, labels = blobs()
        model = Mlp.initialise([2, 8, 2], np.random.default_rng(0))
        trace = train(model, inputs, labels, TrainConfig(epochs=200, learning_rate=0.01, batch_size=16))
        predictions = (model.predict_proba(inputs) > 0.5).astype(int)
        self.assertEqual((predictions == labels).mean(), 1.0)
        self.assertEqual(len(trace), 200)
        self.assertLess(trace[-1], trace[0])

    def test_deterministic(self):
        inputs, labels = blobs(seed=1, count=10)
        cfg = TrainConfig(epochs=5, seed=3)
        first = Mlp.initialise([2, 4, 2], np.random.default_rng(3))
        second = Mlp.initialise([2, 4, 2], np.random.default_rng(3))
        self.assertEqual(train(first, inputs, labels, cfg), train(second, inputs, labels, cfg))
        for a, b in zip(first.parameters(), second.parameters()):
            self.assertEqual(a.tobytes(), b.tobytes())

    def test_list_inputs(self):
        inputs, labels = blobs(count=3)
        model = Mlp.initialise([2, 2], np.random.default_rng(0))
        trace = train(model, inputs.tolist(), labels, TrainConfig(epochs=2, batch_size=4))
        self.assertEqual(len(trace), 2)

    def test_empty_set(self):
        model = Mlp.initialise([2, 2], np.random.default_rng(0))
        with self.assertRaises(TrainingError):
            train(model, np.zeros((0, 2)), [], TrainConfig())

    def test_divergence(self):
        with self.assertRaises(TrainingError) as context:
            train(DivergingModel(), [[0.0]], [1], TrainConfig(epochs=3))
        self.assertEqual(context.exception.epoch, 1)


class TestOptimizers(SimpleTestCase):
    def test_sgd_step(self):
        param = np.array([1.0])
        Sgd(0.1).step([param], [np.array([2.0])])
        np.testing.assert_allclose(param, [0.8])

    def test_adam_first_step(self):
        # Bias correction makes the first step close to the learning rate.
        param = np.array([1.0, 1.0])
        Adam(learning_rate=0.1).step([param], [np.array([2.0, -0.5])])
        np.testing.assert_allclose(param, [0.9, 1.1], atol=1e-6)

    def test_build(self):
        self.assertIsInstance(build_optimizer('sgd', 0.1), Sgd)
        self.assertIsInstance(build_optimizer('adam', 0.1), Adam)
        with self.assertRaises(ValueError):
            build_optimizer('lbfgs', 0.1)


class TestSmoothed(SimpleTestCase):
    def test_moving_average(self):
        np.testing.assert_allclose(smoothed([1, 2, 3, 4], window=2), [1.5, 2.5, 3.5])

    def test_short_trace(self):
        np.testing.assert_array_equal(smoothed([1.0, 2.0]), [1.0, 2.0])
