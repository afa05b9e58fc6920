import numpy as np

DEFAULT_STEP = 1e-5
ABSOLUTE_FLOOR = 1e-3


def numerical_gradients(model, inputs, labels, step=DEFAULT_STEP):
    """Central finite differences of the model loss for every parameter entry."""
    numeric = []
    for param in model.parameters():
        grad = np.zeros_like(param)
        flat_param = param.reshape(-1)
        flat_grad = grad.reshape(-1)
        for i in range(flat_param.size):
            original = flat_param[i]
            flat_param[i] = original + step
            plus, _ = model.loss_and_grad(inputs, labels)
            flat_param[i] = original - step
            minus, _ = model.loss_and_grad(inputs, labels)
            flat_param[i] = original
            flat_grad[i] = (plus - minus) / (2 * step)
        numeric.append(grad)
    return numeric


def gradient_errors(analytic, numeric):
    """
    Per-entry error: relative where the gradient magnitude reaches
    ABSOLUTE_FLOOR, absolute below it.
    """
    errors = []
    for a, n in zip(analytic, numeric):
        scale = np.maximum(np.abs(a), np.abs(n))
        diff = np.abs(a - n)
        errors.append(np.where(scale >= ABSOLUTE_FLOOR, diff / np.maximum(scale, ABSOLUTE_FLOOR), diff))
    return errors


def check_gradients(model, inputs, labels, step=DEFAULT_STEP):
    """Worst gradient error over every parameter of `model`."""
    _, analytic = model.loss_and_grad(inputs, labels)
    numeric = numerical_gradients(model, inputs, labels, step=step)
    return max(float(e.max()) if e.size else 0.0 for e in gradient_errors(analytic, numeric))
