import numpy as np

SGD = 'sgd'
ADAM = 'adam'
OPTIMIZERS = (SGD, ADAM)


class Sgd(object):
    def __init__(self, learning_rate):
        self.learning_rate = learning_rate

    def step(self, parameters, grads):
        for param, grad in zip(parameters, grads):
            param -= self.learning_rate * grad


class Adam(object):
    """Adam with bias-corrected moment estimates; updates arrays in place."""
    def __init__(self, learning_rate=1e-3, beta1=0.9, beta2=0.999, epsilon=1e-8):
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.steps = 0
        self._first = None
        self._second = None

    def step(self, parameters, grads):
        if self._first is None:
            self._first = [np.zeros_like(p) for p in parameters]
            self._second = [np.zeros_like(p) for p in parameters]
        self.steps += 1
        first_correction = 1.0 - self.beta1 ** self.steps
        second_correction = 1.0 - self.beta2 ** self.steps
        for param, grad, m, v in zip(parameters, grads, self._first, self._second):
            m *= self.beta1
            m += (1.0 - self.beta1) * grad
            v *= self.beta2
            v += (1.0 - self.beta2) * grad * grad
            m_hat = m / first_correction
            v_hat = v / second_correction
            param -= self.learning_rate * m_hat / (np.sqrt(v_hat) + self.epsilon)


def build_optimizer(name, learning_rate):
    if name == SGD:
        return Sgd(learning_rate)
    if name == ADAM:
        return Adam(learning_rate)
    raise ValueError('Unknown optimizer {!r}; choose from {}.'.format(name, OPTIMIZERS))
