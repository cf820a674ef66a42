"""Rate quantities, the allowable power set, and fixed-power rate regions.

For a set ``S`` of users transmitting at powers ``P`` over a standard-form
channel, four Gaussian-codebook rate quantities matter: the receiver-side
and eavesdropper-side capacities of ``S`` with the complement's signals
removed (``main``/``tap``) or treated as additional noise (``main_intf``/
``tap_intf``).  Perfect secrecy with Gaussian codebooks is achievable for
all rate vectors with ``sum(R_k, k in S) <= main(S) - tap_intf(S)`` for
every nonempty ``S``, provided the powers lie in the allowable set: inside
the box ``0 <= P_k <= p_max_k`` and with nonnegative secrecy slack for
every subset, which is exactly the condition ``main(S) >= tap_intf(S)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import StandardChannel
from .errors import ValidationError

#: Slack allowed on the subset power constraints; absorbs rounding for
#: optimizers that return points on the boundary.
FEASIBILITY_TOL = 1e-12

#: Slack allowed when testing membership of a rate vector in a region.
CONTAINS_TOL = 1e-12

_VERTEX_TOL = 1e-12


def awgn_capacity(snr: float, unit: str = "bits") -> float:
    """Capacity ``0.5 * log(1 + snr)`` of a unit-noise Gaussian channel.

    Strictly increasing in ``snr`` with value 0 at 0.  ``unit`` selects
    log base 2 ("bits") or natural log ("nats").
    """
    if snr < 0:
        raise ValidationError(f"snr: must be >= 0 (got {snr})")
    if unit == "bits":
        return 0.5 * math.log1p(snr) / math.log(2)
    if unit == "nats":
        return 0.5 * math.log1p(snr)
    raise ValidationError(f"rate_unit: must be one of ['bits', 'nats'] (got {unit!r})")


def _checked_powers(powers, ch: StandardChannel) -> tuple[float, ...]:
    p = tuple(float(x) for x in powers)
    if len(p) != ch.num_users:
        raise ValidationError(
            f"powers: length {len(p)} does not match the channel's "
            f"{ch.num_users} users")
    for i, v in enumerate(p):
        if v < 0:
            raise ValidationError(f"powers[{i}]: must be >= 0 (got {v})")
    return p


def _subset_indices(subset, num_users) -> tuple[int, ...]:
    idx = sorted(set(int(k) for k in subset))
    if not idx:
        raise ValidationError("subset: must be nonempty")
    if idx[0] < 0 or idx[-1] >= num_users:
        raise ValidationError(
            f"subset: user indices must lie in [0, {num_users - 1}] (got {idx})")
    return tuple(idx)


def _mask_indices(mask) -> tuple[int, ...]:
    return tuple(k for k in range(mask.bit_length()) if mask >> k & 1)


def _all_subset_sums(values) -> list[float]:
    # sums[m] = sum of values[k] over the bits k set in m, for every mask
    k = len(values)
    sums = [0.0] * (1 << k)
    for m in range(1, 1 << k):
        low = m & -m
        sums[m] = sums[m ^ low] + values[low.bit_length() - 1]
    return sums


@dataclass(frozen=True)
class SubsetRates:
    """Receiver- and eavesdropper-side capacities of one user subset.

    ``main``/``tap`` assume the complement's signals have been removed;
    ``main_intf``/``tap_intf`` treat them as additional noise.  For the
    full user set the two pairs coincide.
    """

    main: float
    tap: float
    main_intf: float
    tap_intf: float


def subset_rates(subset, powers, ch: StandardChannel) -> SubsetRates:
    """The four capacity quantities of ``subset`` at powers ``powers``."""
    p = _checked_powers(powers, ch)
    idx = _subset_indices(subset, ch.num_users)
    inside = set(idx)
    s_p = sum(p[k] for k in idx)
    s_hp = sum(ch.h[k] * p[k] for k in idx)
    c_p = sum(p[k] for k in range(ch.num_users) if k not in inside)
    c_hp = sum(ch.h[k] * p[k] for k in range(ch.num_users) if k not in inside)
    unit = ch.rate_unit
    return SubsetRates(
        main=awgn_capacity(s_p, unit),
        tap=awgn_capacity(s_hp, unit),
        main_intf=awgn_capacity(s_p / (1.0 + c_p), unit),
        tap_intf=awgn_capacity(s_hp / (1.0 + c_hp), unit))


def secrecy_slack(subset, powers, ch: StandardChannel) -> float:
    """Feasibility margin of ``subset``:
    ``sum(P_k, S) - sum(h_k P_k, S) / (1 + sum(h_k P_k, S^c))``.

    Its sign equals the sign of ``main(S) - tap_intf(S)``, i.e. of the
    subset's secrecy rate bound.
    """
    p = _checked_powers(powers, ch)
    idx = _subset_indices(subset, ch.num_users)
    inside = set(idx)
    s_p = sum(p[k] for k in idx)
    s_hp = sum(ch.h[k] * p[k] for k in idx)
    c_hp = sum(ch.h[k] * p[k] for k in range(ch.num_users) if k not in inside)
    return s_p - s_hp / (1.0 + c_hp)


@dataclass(frozen=True)
class InfeasibilityWitness:
    """First violated constraint: a power bound or a subset constraint."""

    kind: str                # "bound" or "subset"
    users: tuple[int, ...]   # 0-based user indices


def is_feasible(powers, ch: StandardChannel):
    """Test membership in the allowable power set.

    True iff ``0 <= P_k <= p_max_k`` for every user and the secrecy slack
    of every nonempty subset is >= -FEASIBILITY_TOL.  On failure the
    second return value names the first violated constraint (bounds in
    user order first, then subsets in ascending bitmask order).

    Returns
    -------
    (bool, InfeasibilityWitness or None)
    """
    p = tuple(float(x) for x in powers)
    if len(p) != ch.num_users:
        raise ValidationError(
            f"powers: length {len(p)} does not match the channel's "
            f"{ch.num_users} users")
    for k, v in enumerate(p):
        if v < 0 or v > ch.p_max[k]:
            return False, InfeasibilityWitness(kind="bound", users=(k,))

    k = ch.num_users
    sums_p = _all_subset_sums(p)
    sums_hp = _all_subset_sums([ch.h[i] * p[i] for i in range(k)])
    total_hp = sums_hp[(1 << k) - 1]
    for mask in range(1, 1 << k):
        slack = sums_p[mask] - sums_hp[mask] / (1.0 + total_hp - sums_hp[mask])
        if slack < -FEASIBILITY_TOL:
            return False, InfeasibilityWitness(kind="subset", users=_mask_indices(mask))
    return True, None


@dataclass(frozen=True)
class RateRegion:
    """Halfspace representation of the achievable region at fixed powers.

    One halfspace ``sum(R_k, k in S) <= bound`` per nonempty subset ``S``,
    listed in ascending bitmask order (2^K - 1 entries).  ``vertices`` is
    populated for K <= 2 only.  ``feasible`` records whether the powers
    lie in the allowable set; if they do, every bound is nonnegative.
    """

    halfspaces: tuple[tuple[tuple[int, ...], float], ...]
    vertices: tuple[tuple[float, ...], ...] | None
    feasible: bool
    rate_unit: str

    @property
    def num_users(self) -> int:
        return len(self.halfspaces[-1][0])

    def bound(self, subset) -> float:
        """Bound of the halfspace for ``subset`` (0-based indices)."""
        idx = _subset_indices(subset, self.num_users)
        mask = 0
        for k in idx:
            mask |= 1 << k
        return self.halfspaces[mask - 1][1]

    def contains(self, rates) -> bool:
        """True iff the (componentwise nonnegative) rate vector satisfies
        every halfspace within CONTAINS_TOL."""
        r = tuple(float(x) for x in rates)
        if len(r) != self.num_users:
            raise ValidationError(
                f"rates: length {len(r)} does not match the region's "
                f"{self.num_users} users")
        for users, bound in self.halfspaces:
            if sum(r[k] for k in users) > bound + CONTAINS_TOL:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "rate_unit": self.rate_unit,
            "halfspaces": [
                {"subset": [k + 1 for k in users], "bound": bound}
                for users, bound in self.halfspaces
            ],
            "vertices": None if self.vertices is None
            else [list(v) for v in self.vertices],
        }


def _dedup_points(points, tol=_VERTEX_TOL):
    kept = []
    for pt in points:
        if not any(max(abs(a - b) for a, b in zip(pt, q)) <= tol for q in kept):
            kept.append(pt)
    return kept


def _vertices_1d(b1):
    if b1 < 0:
        return ()
    return tuple(_dedup_points([(0.0,), (b1,)]))


def _vertices_2d(b1, b2, b12):
    # Lines a*x + b*y = c bounding {x,y >= 0, x <= b1, y <= b2, x+y <= b12}.
    lines = [
        (1.0, 0.0, 0.0),
        (0.0, 1.0, 0.0),
        (1.0, 0.0, b1),
        (0.0, 1.0, b2),
        (1.0, 1.0, b12),
    ]
    candidates = []
    for i in range(len(lines)):
        a1, b1_, c1 = lines[i]
        for j in range(i + 1, len(lines)):
            a2, b2_, c2 = lines[j]
            det = a1 * b2_ - b1_ * a2
            if abs(det) < 1e-15:
                continue
            x = (c1 * b2_ - c2 * b1_) / det
            y = (a1 * c2 - a2 * c1) / det
            if (x >= -_VERTEX_TOL and y >= -_VERTEX_TOL
                    and x <= b1 + _VERTEX_TOL and y <= b2 + _VERTEX_TOL
                    and x + y <= b12 + _VERTEX_TOL):
                # max(0.0, ...) also normalizes -0.0 to +0.0
                candidates.append((max(0.0, x), max(0.0, y)))
    pts = _dedup_points(candidates)
    if len(pts) <= 2:
        return tuple(sorted(pts))
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    pts.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
    return tuple(pts)


def classify_two_user_shape(b1: float, b2: float, b12: float) -> str:
    """Shape of ``{R >= 0, R1 <= b1, R2 <= b2, R1 + R2 <= b12}``.

    "rectangle" when the sum bound is slack, "triangle" when only the sum
    bound is active, "quadrilateral" when exactly one individual bound is
    also active, "pentagon" when all three are.
    """
    if b12 >= b1 + b2:
        return "rectangle"
    if b12 <= min(b1, b2):
        return "triangle"
    if b12 <= max(b1, b2):
        return "quadrilateral"
    return "pentagon"


def build_region(powers, ch: StandardChannel) -> RateRegion:
    """Achievable-region halfspaces at fixed powers, one per nonempty
    subset, with exact vertex enumeration for K <= 2."""
    p = _checked_powers(powers, ch)
    k = ch.num_users
    sums_p = _all_subset_sums(p)
    sums_hp = _all_subset_sums([ch.h[i] * p[i] for i in range(k)])
    total_hp = sums_hp[(1 << k) - 1]
    unit = ch.rate_unit

    halfspaces = []
    for mask in range(1, 1 << k):
        main = awgn_capacity(sums_p[mask], unit)
        tap_intf = awgn_capacity(
            sums_hp[mask] / (1.0 + total_hp - sums_hp[mask]), unit)
        halfspaces.append((_mask_indices(mask), main - tap_intf))

    feasible, _ = is_feasible(p, ch)

    vertices = None
    if k == 1:
        vertices = _vertices_1d(halfspaces[0][1])
    elif k == 2:
        vertices = _vertices_2d(
            halfspaces[0][1], halfspaces[1][1], halfspaces[2][1])

    return RateRegion(
        halfspaces=tuple(halfspaces),
        vertices=vertices,
        feasible=feasible,
        rate_unit=unit)


def _grid_axis(p_max, steps):
    values = [p_max * i / (steps - 1) for i in range(steps)]
    return list(dict.fromkeys(values))


def union_sweep(ch: StandardChannel, grid_steps: int):
    """Regions at every feasible point of a two-user power grid.

    The grid per axis is ``{0, step, ..., p_max_k}`` with
    ``step = p_max_k / (grid_steps - 1)``; infeasible points are skipped.
    Results are emitted in ascending ``(P1, P2)`` order so a consumer can
    plot the union envelope of all the regions.

    Returns
    -------
    list of ((P1, P2), RateRegion)
    """
    if ch.num_users != 2:
        raise ValidationError(
            f"users: region sweep requires exactly 2 users (got {ch.num_users})")
    if grid_steps < 2:
        raise ValidationError(f"grid_steps: must be >= 2 (got {grid_steps})")
    out = []
    for p1 in _grid_axis(ch.p_max[0], grid_steps):
        for p2 in _grid_axis(ch.p_max[1], grid_steps):
            powers = (p1, p2)
            ok, _ = is_feasible(powers, ch)
            if ok:
                out.append((powers, build_region(powers, ch)))
    return out
