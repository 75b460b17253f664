"""Small classical nonsmooth test functions."""

import numpy as np

from ..validation import check_positive
from .objective import Objective


def maxq(n):
    """``f(x) = max_i x_i^2`` in dimension ``n``; convex, minimum 0 at the origin.

    The subgradient takes the first maximizing coordinate, so the oracle
    is deterministic at ties.
    """
    check_positive(n, "n")

    def subgrad_fn(x):
        g = np.zeros(n)
        j = int(np.argmax(x * x))
        g[j] = 2.0 * x[j]
        return g

    return Objective(n, lambda x: float(np.max(x * x)), subgrad_fn,
                     name=f"maxq-{n}", convex=True)


def maxq_start(n):
    """Standard starting point for :func:`maxq`: ``x_i = i`` (1-based)."""
    return np.arange(1, n + 1, dtype=np.float64)


def absolute_value():
    """``f(x) = |x|`` on the line, with ``sign(0) = 0`` at the kink."""
    return Objective(1, lambda x: float(abs(x[0])), lambda x: np.sign(x),
                     name="abs", convex=True)


def crossing_pl():
    """``f(x) = 2|x1 + x2| - |x1 - x2|``: coordinate-wise stationary at the
    origin along both axes, yet descent exists along ``(1, -1)``.

    Not convex (difference of polyhedral terms) and unbounded below; meant
    for stationarity demonstrations, not for minimization runs.
    """

    def value_fn(x):
        return 2.0 * abs(x[0] + x[1]) - abs(x[0] - x[1])

    def subgrad_fn(x):
        su = np.sign(x[0] + x[1])
        sv = np.sign(x[0] - x[1])
        return np.array([2.0 * su - sv, 2.0 * su + sv])

    return Objective(2, value_fn, subgrad_fn, name="cb-pl", convex=False)
