"""Input validation helpers.

All array-accepting entry points funnel through these checks so error
messages are uniform and every internal routine can assume float64
ndarrays of the right shape.
"""

import numpy as np

from .errors import ContractViolationError


def check_vector(x, dim=None, name="x"):
    """Coerce to a finite 1-D float64 array, optionally of fixed dimension."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ContractViolationError(f"{name} must be a vector, got shape {arr.shape}")
    if arr.size == 0:
        raise ContractViolationError(f"{name} must have dimension > 0")
    if not np.all(np.isfinite(arr)):
        raise ContractViolationError(f"{name} contains non-finite entries")
    if dim is not None and arr.size != dim:
        raise ContractViolationError(
            f"{name} has dimension {arr.size}, expected {dim}"
        )
    return arr


def check_positive(value, name="value"):
    if not value > 0:
        raise ContractViolationError(f"{name} must be positive, got {value!r}")
    return value


def check_nonnegative(value, name="value"):
    if value < 0:
        raise ContractViolationError(f"{name} must be nonnegative, got {value!r}")
    return value


def check_simplex_weights(weights, atol=1e-10):
    """Validate convex-combination multipliers: nonnegative, summing to one."""
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise ContractViolationError("weights must be a nonempty vector")
    if np.any(w < -atol):
        raise ContractViolationError(f"weights must be nonnegative, got min {w.min()}")
    if abs(w.sum() - 1.0) > atol:
        raise ContractViolationError(f"weights must sum to 1, got {w.sum()!r}")
    return w


def check_unit_direction(d, name="direction"):
    """Validate a nonzero direction and return it normalized to unit norm."""
    d = check_vector(d, name=name)
    norm = float(np.linalg.norm(d))
    if norm == 0.0:
        raise ContractViolationError(f"{name} must be nonzero")
    return d / norm
