"""Stationarity measures distinguishing coordinate-wise from full stationarity.

A point can admit no first-order descent along any single coordinate while
a mixed direction still decreases the function.  The report below captures
both views: the coordinate-wise measure is the largest per-axis one-sided
descent rate (0 means coordinate-wise stationary), and the directional
measure is the smallest one-sided directional derivative over a supplied
direction set (negative means descent exists).
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ContractViolationError
from ..validation import check_unit_direction, check_vector
from .piecewise import PiecewisePieces

# Forward-difference step for objectives without declared piece structure.
FD_STEP = 1e-7


@dataclass(frozen=True)
class StationarityReport:
    coordinatewise: float    # >= 0; 0 iff no single-coordinate descent
    directional: float       # min sampled one-sided directional derivative
    witness: np.ndarray      # unit direction attaining the directional measure


def _one_sided(f, x, d):
    if isinstance(f, PiecewisePieces):
        return f.directional_derivative(x, d)
    return (f.value(x + FD_STEP * d) - f.value(x)) / FD_STEP


def stationarity_report(f, x, directions):
    """Measure first-order descent at ``x`` along axes and given directions.

    ``f`` may be a :class:`PiecewisePieces` (derivatives by active-piece
    enumeration, exact) or any objective (forward differences).
    """
    x = check_vector(x, f.dim)
    directions = list(directions)
    if not directions:
        raise ContractViolationError("directions must be nonempty")

    coord = 0.0
    for i in range(f.dim):
        e = np.zeros(f.dim)
        e[i] = 1.0
        slope = min(_one_sided(f, x, e), _one_sided(f, x, -e))
        coord = max(coord, max(0.0, -slope))

    best = np.inf
    witness = None
    for d in directions:
        d = check_unit_direction(d)
        slope = _one_sided(f, x, d)
        if slope < best:
            best = slope
            witness = d
    return StationarityReport(coordinatewise=coord, directional=float(best),
                              witness=witness)
