"""Feedforward ReLU networks as batch-decomposed training objectives.

The decision variable is the flat concatenation of every layer's weight
matrix and bias vector.  Hidden activations are ``max(0, W z + b)``, the
output layer is affine with a single unit, and the per-batch loss is the
mean absolute or squared error over that batch's samples.  Value and
subgradient are computed by a hand-rolled vectorized forward/backward
pass; at an exactly-zero pre-activation the backward mask is 0, matching
the toolkit-wide kink tie rule.
"""

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractViolationError
from .objective import BatchObjective, Objective

LOSS_KINDS = ("absolute", "squared")


@dataclass(frozen=True)
class ReluNetSpec:
    """Architecture plus training data for one ReLU-network objective.

    layer_widths : [input, hidden..., output]; output width must be 1.
    inputs       : (n_samples, input_width) array
    targets      : (n_samples,) array
    loss         : "absolute" or "squared"
    n_batches    : contiguous split of the samples into this many batches
    """

    layer_widths: tuple
    inputs: np.ndarray
    targets: np.ndarray
    loss: str = "absolute"
    n_batches: int = 1

    def __post_init__(self):
        widths = tuple(int(w) for w in self.layer_widths)
        if len(widths) < 2 or any(w <= 0 for w in widths):
            raise ContractViolationError(f"bad layer widths {widths!r}")
        if widths[-1] != 1:
            raise ContractViolationError("output layer width must be 1")
        X = np.atleast_2d(np.asarray(self.inputs, dtype=np.float64))
        t = np.atleast_1d(np.asarray(self.targets, dtype=np.float64))
        if X.shape[1] != widths[0]:
            raise ContractViolationError(
                f"inputs have width {X.shape[1]}, expected {widths[0]}"
            )
        if X.shape[0] != t.shape[0]:
            raise ContractViolationError("number of inputs must equal number of targets")
        if self.loss not in LOSS_KINDS:
            raise ContractViolationError(f"loss must be one of {LOSS_KINDS}")
        if not 1 <= self.n_batches <= X.shape[0]:
            raise ContractViolationError("n_batches must be in [1, n_samples]")
        object.__setattr__(self, "layer_widths", widths)
        object.__setattr__(self, "inputs", X)
        object.__setattr__(self, "targets", t)

    @property
    def param_dim(self):
        widths = self.layer_widths
        return sum((a + 1) * b for a, b in zip(widths[:-1], widths[1:]))

    def batch_slices(self):
        """Contiguous, nearly equal sample index ranges, one per batch."""
        bounds = np.linspace(0, self.inputs.shape[0], self.n_batches + 1).astype(int)
        return [slice(lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:])]


def _unpack(params, widths):
    layers = []
    pos = 0
    for fan_in, fan_out in zip(widths[:-1], widths[1:]):
        W = params[pos : pos + fan_in * fan_out].reshape(fan_out, fan_in)
        pos += fan_in * fan_out
        b = params[pos : pos + fan_out]
        pos += fan_out
        layers.append((W, b))
    return layers


def _pack(grads, dim):
    flat = np.empty(dim)
    pos = 0
    for dW, db in grads:
        flat[pos : pos + dW.size] = dW.ravel()
        pos += dW.size
        flat[pos : pos + db.size] = db
        pos += db.size
    return flat


def _forward(layers, X):
    """Returns per-sample outputs and the caches backprop needs."""
    Z = X
    caches = []
    for W, b in layers[:-1]:
        A = Z @ W.T + b
        caches.append((Z, A))
        Z = np.maximum(A, 0.0)
    W, b = layers[-1]
    caches.append((Z, None))
    return (Z @ W.T + b)[:, 0], caches


def _backward(layers, caches, dloss_dy, dim):
    G = dloss_dy[:, None]
    grads = [None] * len(layers)
    for k in range(len(layers) - 1, -1, -1):
        Z_in, A_in = caches[k]
        grads[k] = (G.T @ Z_in, G.sum(axis=0))
        if k > 0:
            G = G @ layers[k][0]
            # strict mask: zero pre-activations contribute nothing
            G = G * (caches[k - 1][1] > 0.0)
    return _pack(grads, dim)


def net_output(spec, params, X=None):
    """Per-sample network outputs at ``params`` (defaults to all samples)."""
    X = spec.inputs if X is None else np.atleast_2d(np.asarray(X, dtype=np.float64))
    y, _ = _forward(_unpack(params, spec.layer_widths), X)
    return y


def build_relu_net(spec):
    """Assemble the batch objective for a :class:`ReluNetSpec`."""
    widths = spec.layer_widths
    dim = spec.param_dim
    squared = spec.loss == "squared"

    def make_component(X, t, label):
        m = X.shape[0]

        def value_fn(params):
            y, _ = _forward(_unpack(params, widths), X)
            r = y - t
            return float(np.mean(r * r) if squared else np.mean(np.abs(r)))

        def subgrad_fn(params):
            layers = _unpack(params, widths)
            y, caches = _forward(layers, X)
            r = y - t
            dloss = (2.0 * r / m) if squared else (np.sign(r) / m)
            return _backward(layers, caches, dloss, dim)

        return Objective(dim, value_fn, subgrad_fn, name=label)

    components = [
        make_component(spec.inputs[sl], spec.targets[sl], f"batch{i}")
        for i, sl in enumerate(spec.batch_slices())
    ]
    return BatchObjective(components, name=f"relunet{list(widths)!r}")


def he_init(spec, rng):
    """Gaussian starting point with per-layer fan-in scaling, zero biases."""
    widths = spec.layer_widths
    parts = []
    for fan_in, fan_out in zip(widths[:-1], widths[1:]):
        scale = np.sqrt(2.0 / fan_in)
        parts.append(scale * rng.standard_normal(fan_in * fan_out))
        parts.append(np.zeros(fan_out))
    return np.concatenate(parts)


def synthetic_spec(widths, n_batches, samples_per_batch, loss, seed, noise=0.1):
    """Deterministic synthetic training set planted on a noisy ReLU teacher.

    Inputs are seeded standard normals; targets are the outputs of a
    freshly drawn teacher network with the same architecture plus Gaussian
    noise.  Everything is a pure function of the arguments.
    """
    widths = tuple(int(w) for w in widths)
    rng = np.random.default_rng(seed)
    n_samples = n_batches * samples_per_batch
    X = rng.standard_normal((n_samples, widths[0]))

    teacher_parts = []
    for fan_in, fan_out in zip(widths[:-1], widths[1:]):
        teacher_parts.append(np.sqrt(2.0 / fan_in) * rng.standard_normal(fan_in * fan_out))
        teacher_parts.append(0.1 * rng.standard_normal(fan_out))
    teacher = np.concatenate(teacher_parts)

    y_clean, _ = _forward(_unpack(teacher, widths), X)
    targets = y_clean + noise * rng.standard_normal(n_samples)
    return ReluNetSpec(widths, X, targets, loss=loss, n_batches=n_batches)
