"""Objective functions, batch decompositions, and subgradient oracles.

An :class:`Objective` bundles a value map and a subgradient map over points
in R^n.  The subgradient map returns one element of the Clarke
subdifferential; at differentiable points that element is the gradient, and
at kinks a fixed tie rule applies (``max(0, t)`` and ``|t|`` both contribute
0 at ``t = 0``) so the oracle is deterministic.

A :class:`BatchObjective` is a list of component objectives whose mean is
the full objective, which is the decomposition every batch method in this
package consumes.
"""

import numpy as np

from ..errors import ContractViolationError, NumericalError
from ..validation import check_nonnegative, check_vector


class Objective:
    """A deterministic value/subgradient oracle over R^n.

    Parameters
    ----------
    dim : int
        Dimension of the domain.
    value_fn : callable
        Maps a float64 vector of length ``dim`` to a float.
    subgrad_fn : callable
        Maps a float64 vector of length ``dim`` to a vector of length
        ``dim`` that lies in the Clarke subdifferential at that point.
    name : str, optional
        Display name used by the problem catalog and the harness.
    convex : bool
        Declared convexity.  Solvers use it to pick the distance-measure
        weight for locality terms (0 for convex problems).
    """

    def __init__(self, dim, value_fn, subgrad_fn, name=None, convex=False):
        if dim <= 0:
            raise ContractViolationError(f"dim must be positive, got {dim}")
        self.dim = int(dim)
        self._value_fn = value_fn
        self._subgrad_fn = subgrad_fn
        self.name = name
        self.convex = bool(convex)

    def value(self, x):
        x = check_vector(x, self.dim)
        f = float(self._value_fn(x))
        if not np.isfinite(f):
            raise NumericalError(f"objective value at {x!r} is not finite: {f}")
        return f

    def subgrad(self, x):
        x = check_vector(x, self.dim)
        g = np.asarray(self._subgrad_fn(x), dtype=np.float64)
        if g.shape != (self.dim,):
            raise ContractViolationError(
                f"subgradient has shape {g.shape}, expected ({self.dim},)"
            )
        if not np.all(np.isfinite(g)):
            raise NumericalError("subgradient contains non-finite entries")
        return g

    def __repr__(self):
        label = self.name or "objective"
        return f"Objective({label}, dim={self.dim})"


class BatchObjective:
    """N component objectives of equal dimension whose mean is the full objective."""

    def __init__(self, components, name=None):
        components = tuple(components)
        if not components:
            raise ContractViolationError("BatchObjective needs at least one component")
        dim = components[0].dim
        for c in components:
            if c.dim != dim:
                raise ContractViolationError(
                    "all components must share one dimension"
                )
        self.components = components
        self.dim = dim
        self.name = name
        self.convex = all(c.convex for c in components)

    @property
    def n_batches(self):
        return len(self.components)

    def value(self, x):
        x = check_vector(x, self.dim)
        return float(np.mean([c.value(x) for c in self.components]))

    def mean_objective(self):
        """The full objective: mean value and averaged subgradient oracle.

        The subgradient of the returned objective is exactly
        :func:`averaged_full_gradient`, so running a solver on it is
        bitwise-identical to running the solver's batch-averaging mode.
        """
        return Objective(
            self.dim,
            value_fn=lambda x: np.mean([c.value(x) for c in self.components]),
            subgrad_fn=lambda x: averaged_full_gradient(self, x),
            name=self.name,
            convex=self.convex,
        )

    def __repr__(self):
        label = self.name or "batch-objective"
        return f"BatchObjective({label}, dim={self.dim}, N={self.n_batches})"


class OracleCounter:
    """Mutable tally of value and subgradient oracle calls for one run.

    Counts are at component granularity: one full evaluation of an
    N-component batch objective adds N, so costs compare fairly across
    batch and full-gradient methods.
    """

    def __init__(self):
        self.feval = 0
        self.geval = 0

    def __repr__(self):
        return f"OracleCounter(feval={self.feval}, geval={self.geval})"


def counted(obj, counter, cost=1):
    """Wrap an objective so each oracle call adds ``cost`` to ``counter``."""

    def value_fn(x):
        counter.feval += cost
        return obj._value_fn(x)

    def subgrad_fn(x):
        counter.geval += cost
        return obj._subgrad_fn(x)

    return Objective(obj.dim, value_fn, subgrad_fn, name=obj.name, convex=obj.convex)


def counted_batch(bobj, counter):
    """Counted view of a batch objective; each component call costs 1."""
    return BatchObjective(
        [counted(c, counter) for c in bobj.components], name=bobj.name
    )


def averaged_full_gradient(bobj, x):
    """Mean of the component subgradients at ``x``."""
    x = check_vector(x, bobj.dim)
    total = np.zeros(bobj.dim)
    for c in bobj.components:
        total += c.subgrad(x)
    return total / bobj.n_batches


def random_batch_gradient(bobj, x, rng):
    """Subgradient of one uniformly drawn component.

    Returns ``(index, subgradient)`` where ``index`` is uniform over the
    components and the vector is that component's subgradient at ``x``.
    """
    x = check_vector(x, bobj.dim)
    index = int(rng.integers(bobj.n_batches))
    return index, bobj.components[index].subgrad(x)


def add_l1(obj, weight):
    """Add ``weight * ||x||_1`` to an objective.

    The subgradient picks ``sign(x)`` entrywise with ``sign(0) = 0``, the
    same tie rule the rest of the toolkit uses at kinks.
    """
    check_nonnegative(weight, "weight")
    weight = float(weight)

    def value_fn(x):
        return obj._value_fn(x) + weight * np.sum(np.abs(x))

    def subgrad_fn(x):
        return np.asarray(obj._subgrad_fn(x), dtype=np.float64) + weight * np.sign(x)

    name = f"{obj.name}+l1" if obj.name else None
    return Objective(obj.dim, value_fn, subgrad_fn, name=name, convex=obj.convex)
