"""Fixed-step classical Runge-Kutta (RK4) integration of autonomous systems.

The field is any callable mapping a state array to its derivative. States may
carry a trailing batch axis, so one call can advance many independent
trajectories that share the step count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import NumericOverflowError

__all__ = ["StepPlan", "rk4_step", "integrate"]

Field = Callable[[np.ndarray], np.ndarray]
Observer = Callable[[int, float, np.ndarray], None]


@dataclass(frozen=True)
class StepPlan:
    """Integrate over arc length ``s_total`` in ``n`` equal steps."""

    s_total: float
    n: int

    def __post_init__(self):
        if not np.isfinite(self.s_total) or self.s_total < 0:
            raise ValueError(f"s_total must be finite and >= 0, got {self.s_total!r}")
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def ds(self) -> float:
        return self.s_total / self.n


def _finite(k, step):
    if not np.all(np.isfinite(k)):
        raise NumericOverflowError(step)
    return k


def rk4_step(field: Field, y, ds: float, step: int = 0) -> np.ndarray:
    """Advance ``y`` by one classical RK4 step of size ``ds``.

    Raises
    ------
    NumericOverflowError
        If any stage evaluates to a non-finite value; ``step`` is reported.
    """
    y = np.asarray(y, dtype=float)
    return y + _increment(field, y, ds, step)


def _increment(field, y, ds, step):
    half = 0.5 * ds
    k1 = _finite(field(y), step)
    k2 = _finite(field(y + half * k1), step)
    k3 = _finite(field(y + half * k2), step)
    k4 = _finite(field(y + ds * k3), step)
    return (ds / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate(
    field: Field,
    y0,
    plan: StepPlan,
    observer: Optional[Observer] = None,
    compensated: bool = False,
) -> np.ndarray:
    """Apply ``plan.n`` RK4 steps to ``y0`` and return the final state.

    Parameters
    ----------
    field : callable
        Derivative map ``y -> dy/ds``.
    y0 : array_like
        Initial state, shape (d,) or (d, k) for k trajectories at once.
    plan : StepPlan
        Arc length and step count.
    observer : callable, optional
        ``observer(i, s, y)`` is called with the initial state (i = 0) and
        after every step; ``s`` is recomputed as ``i * ds``.
    compensated : bool
        Accumulate the state with Kahan summation. The RK4 increments are
        unchanged; only the rounding of ``y + increment`` is carried over to
        the next step, which stops round-off from growing with ``n``.

    Returns
    -------
    numpy.ndarray
        The state after the last step.
    """
    y = np.asarray(y0, dtype=float)
    if not np.all(np.isfinite(y)):
        raise NumericOverflowError(0, "non-finite initial state")
    ds = plan.ds
    comp = np.zeros_like(y)
    if observer is not None:
        observer(0, 0.0, y)
    for i in range(1, plan.n + 1):
        if compensated:
            inc = _increment(field, y, ds, i) - comp
            tmp = y + inc
            comp = (tmp - y) - inc
            y = tmp
        else:
            y = rk4_step(field, y, ds, step=i)
        if not np.all(np.isfinite(y)):
            raise NumericOverflowError(i)
        if observer is not None:
            observer(i, i * ds, y)
    return y
