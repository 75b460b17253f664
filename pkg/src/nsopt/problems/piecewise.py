"""Piecewise-affine functions given explicitly by their pieces.

Keeping the pieces around (instead of only a value/subgradient oracle)
lets stationarity checks compute one-sided directional derivatives
exactly by enumerating the active pieces.
"""

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractViolationError
from ..validation import check_vector
from .objective import Objective

# Pieces within this relative distance of the combined value count as active.
ACTIVE_TOL = 1e-12


@dataclass(frozen=True)
class PiecewisePieces:
    """max or min of affine pieces ``a_i . x + b_i``.

    coefficients : (k, n) array, one row per piece
    offsets      : (k,) array
    combiner     : "max" or "min"
    """

    coefficients: np.ndarray
    offsets: np.ndarray
    combiner: str = "max"

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.coefficients, dtype=np.float64))
        b = np.atleast_1d(np.asarray(self.offsets, dtype=np.float64))
        if A.shape[0] == 0:
            raise ContractViolationError("need at least one piece")
        if A.shape[0] != b.shape[0]:
            raise ContractViolationError("coefficients and offsets disagree in count")
        if self.combiner not in ("max", "min"):
            raise ContractViolationError(f"combiner must be max or min, got {self.combiner!r}")
        object.__setattr__(self, "coefficients", A)
        object.__setattr__(self, "offsets", b)

    @property
    def dim(self):
        return self.coefficients.shape[1]

    def piece_values(self, x):
        x = check_vector(x, self.dim)
        return self.coefficients @ x + self.offsets

    def value(self, x):
        vals = self.piece_values(x)
        return float(vals.max() if self.combiner == "max" else vals.min())

    def active_pieces(self, x):
        """Indices of pieces attaining the combined value at ``x``."""
        vals = self.piece_values(x)
        best = vals.max() if self.combiner == "max" else vals.min()
        tol = ACTIVE_TOL * max(1.0, abs(best))
        return np.flatnonzero(np.abs(vals - best) <= tol)

    def subgrad(self, x):
        # Deterministic tie rule: first active piece in declaration order.
        idx = self.active_pieces(x)[0]
        return self.coefficients[idx].copy()

    def directional_derivative(self, x, d):
        """Exact one-sided derivative along ``d``: extremum of ``a_i . d`` over active pieces."""
        d = check_vector(d, self.dim)
        slopes = self.coefficients[self.active_pieces(x)] @ d
        return float(slopes.max() if self.combiner == "max" else slopes.min())

    def to_objective(self, name=None, convex=None):
        """View as a plain value/subgradient oracle.

        A max of affine pieces is convex and a min is concave; the default
        convexity flag reflects that.
        """
        if convex is None:
            convex = self.combiner == "max"
        return Objective(self.dim, self.value, self.subgrad, name=name, convex=convex)


def relu_unit(a, b=0.0):
    """The single activation term ``max(0, a . x + b)`` as explicit pieces.

    The zero piece is listed first so the shared tie rule (contribution 0
    when the argument is exactly 0) falls out of first-active selection.
    """
    a = check_vector(a)
    A = np.vstack([np.zeros_like(a), a])
    return PiecewisePieces(A, np.array([0.0, float(b)]), "max")
