"""Brute-force grid verification of the closed-form optimizers.

Exhaustive evaluation over power grids, used by the tests and by the CLI
``--verify`` flag as an independent cross-check.  The sum-rate oracle
filters the grid through the allowable-power-set constraints (the set the
sum-rate optimizer works over); the jamming oracle searches the plain box
(the set the jamming solvers work over).  Ties are broken toward the
lexicographically smallest power vector so repeated runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import StandardChannel
from .errors import ValidationError
from .jamming import TwoUserChannel
from .region import FEASIBILITY_TOL

#: Hard cap on the number of grid points an oracle call may evaluate.
MAX_GRID_POINTS = 10_000_000


@dataclass(frozen=True)
class GridSpec:
    """Grid resolution for the brute-force oracles.

    ``steps_per_axis`` points are placed uniformly on ``[0, p_max]`` per
    axis; ``include_corners`` additionally injects the exact endpoints
    (they are grid points of the uniform spacing already, so this guards
    against any float drift in the spacing).
    """

    steps_per_axis: int = 11
    include_corners: bool = True

    def __post_init__(self):
        if self.steps_per_axis < 2:
            raise ValidationError(
                f"steps_per_axis: must be >= 2 (got {self.steps_per_axis})")


def _axis(p_max, spec: GridSpec) -> np.ndarray:
    values = np.linspace(0.0, p_max, spec.steps_per_axis)
    if spec.include_corners:
        values = np.concatenate([values, [0.0, p_max]])
    return np.unique(values)


def _capacity(snr: np.ndarray, unit: str) -> np.ndarray:
    nats = 0.5 * np.log1p(snr)
    return nats / math.log(2) if unit == "bits" else nats


def grid_max_sum_rate(ch: StandardChannel, spec: GridSpec):
    """Exhaustive sum-rate maximization over the feasible grid points.

    Returns
    -------
    (powers, rate) : (tuple of float, float)
        The maximizing grid point (lexicographically smallest on ties)
        and its sum secrecy rate.
    """
    k = ch.num_users
    axes = [_axis(p, spec) for p in ch.p_max]
    total = math.prod(len(a) for a in axes)
    if total > MAX_GRID_POINTS:
        raise ValidationError(
            f"steps_per_axis: grid would have {total} points "
            f"(cap {MAX_GRID_POINTS})")

    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=1)  # lexicographic rows
    weighted = points * np.asarray(ch.h)
    total_p = points.sum(axis=1)
    total_hp = weighted.sum(axis=1)

    feasible = np.ones(len(points), dtype=bool)
    for mask in range(1, 1 << k):
        idx = [i for i in range(k) if mask >> i & 1]
        s_p = points[:, idx].sum(axis=1)
        s_hp = weighted[:, idx].sum(axis=1)
        slack = s_p - s_hp / (1.0 + total_hp - s_hp)
        feasible &= slack >= -FEASIBILITY_TOL

    rate = _capacity(total_p, ch.rate_unit) - _capacity(total_hp, ch.rate_unit)
    rate[~feasible] = -np.inf  # zero power is always feasible, so a max exists
    best = int(np.argmax(rate))  # first max = lexicographically smallest
    return tuple(float(x) for x in points[best]), float(rate[best])


def grid_max_jamming(ch: TwoUserChannel, spec: GridSpec, unit: str = "bits"):
    """Exhaustive maximization of the jamming objective over the box.

    The jamming power axis carries ``steps_per_axis`` points; the
    transmitter axis only needs the endpoints {0, p1_max}, because at
    fixed ``p2`` the objective is ``capacity(a*p1) - capacity(b*p1)`` with
    constants ``a``, ``b``, which is monotone in ``p1`` (its derivative
    has the constant sign of ``a - b``), so the maximum over ``p1`` is at
    an endpoint.  The reported rate is clamped at 0 (transmitting nothing
    always achieves 0).

    Returns
    -------
    (p1, p2, rate) : (float, float, float)
    """
    p2_axis = _axis(ch.p2_max, spec)
    p1_axis = np.unique([0.0, ch.p1_max])
    if len(p1_axis) * len(p2_axis) > MAX_GRID_POINTS:
        raise ValidationError(
            f"steps_per_axis: grid would have "
            f"{len(p1_axis) * len(p2_axis)} points (cap {MAX_GRID_POINTS})")

    best = (-np.inf, 0.0, 0.0)
    for p1 in p1_axis:
        values = (_capacity(p1 / (1.0 + p2_axis), unit)
                  - _capacity(ch.h1 * p1 / (1.0 + ch.h2 * p2_axis), unit))
        values = np.maximum(values, 0.0)
        i = int(np.argmax(values))  # first max = smallest p2 on ties
        if values[i] > best[0]:
            best = (float(values[i]), float(p1), float(p2_axis[i]))
    return best[1], best[2], best[0]
