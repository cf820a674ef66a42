"""Two-user cooperative jamming in closed form.

A user whose standardized eavesdropper gain is >= 1 cannot achieve a
positive secrecy rate and stays silent under the sum-rate-optimal
allocation.  It can still help: transmitting white noise degrades the
eavesdropper more than the intended receiver whenever its gain exceeds 1,
so the other user's secrecy rate

    capacity(P1 / (1 + P2)) - capacity(h1 * P1 / (1 + h2 * P2))

can increase with the jamming power ``P2``.  Users are labeled so that
``h1 <= h2`` and user 2 is the candidate jammer.  Two regimes have
closed-form optima over the box ``0 <= P_k <= p_k_max``:

* case "A" (``h1 < 1 <= h2``): user 1 always transmits at full power; the
  optimal jamming power is the positive stationary root ``p_hi``, clamped
  to the box (``NoJam`` / ``InteriorRoot`` / ``FullJam``).
* case "B" (``1 <= h1 < h2``): positive secrecy requires enough jamming
  power to push user 1's effective channel past the eavesdropper's,
  ``p2 > (h1 - 1) / (h2 - h1)``; below that cap everyone stays silent
  (``AllSilent``), above it the solution has the same clamped-root form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import StandardChannel
from .errors import ValidationError
from .region import awgn_capacity
from .sumrate import max_sum_rate

BRANCH_NO_JAM = "NoJam"
BRANCH_INTERIOR_ROOT = "InteriorRoot"
BRANCH_FULL_JAM = "FullJam"
BRANCH_ALL_SILENT = "AllSilent"

CASE_A = "A"
CASE_B = "B"
CASE_DEGENERATE = "Degenerate"

#: Gains equal within this are treated as the degenerate h1 == h2 case.
EQUAL_GAIN_TOL = 1e-12


@dataclass(frozen=True)
class TwoUserChannel:
    """Two users with ``h1 <= h2``; user 2 is the candidate jammer."""

    h1: float
    h2: float
    p1_max: float
    p2_max: float

    def __post_init__(self):
        for name in ("h1", "h2", "p1_max", "p2_max"):
            object.__setattr__(self, name, float(getattr(self, name)))
            if getattr(self, name) < 0:
                raise ValidationError(
                    f"{name}: must be >= 0 (got {getattr(self, name)})")
        if self.h1 > self.h2:
            raise ValidationError(
                f"h1: must be <= h2 (got h1={self.h1}, h2={self.h2}); "
                f"relabel the users so the worse one jams")

    @classmethod
    def from_standard(cls, ch: StandardChannel):
        """Relabel a two-user standard channel so ``h1 <= h2``.

        Returns the channel and the permutation ``perm`` with sorted
        position ``i`` holding original user ``perm[i]`` (0-based).
        """
        if ch.num_users != 2:
            raise ValidationError(
                f"users: jamming analysis requires exactly 2 users "
                f"(got {ch.num_users})")
        perm = (0, 1) if ch.h[0] <= ch.h[1] else (1, 0)
        return cls(
            h1=ch.h[perm[0]], h2=ch.h[perm[1]],
            p1_max=ch.p_max[perm[0]], p2_max=ch.p_max[perm[1]]), perm


@dataclass(frozen=True)
class JammingSolution:
    """Solution of the two-user jamming problem.

    ``branch`` records which piece of the closed form applied; ``case_tag``
    records the regime ("A", "B", or "Degenerate" when the jamming
    analysis does not apply: both gains below 1, or equal gains >= 1).
    Powers follow the ``h1 <= h2`` labeling of the input channel.
    """

    p1: float
    p2: float
    secrecy_rate: float
    branch: str
    case_tag: str
    rate_unit: str

    def to_json_dict(self, permutation=None) -> dict:
        doc = {
            "powers": [self.p1, self.p2],
            "secrecy_rate": self.secrecy_rate,
            "branch": self.branch,
            "case_tag": self.case_tag,
            "rate_unit": self.rate_unit,
        }
        if permutation is not None:
            doc["permutation"] = [k + 1 for k in permutation]
        return doc


def jam_objective(p1, p2, ch: TwoUserChannel, unit: str = "bits") -> float:
    """User 1's secrecy rate when user 2 transmits noise at power ``p2``.

    May be negative; the achievable rate is its positive part.
    """
    if p1 < 0 or p2 < 0:
        raise ValidationError(f"powers: must be >= 0 (got p1={p1}, p2={p2})")
    return (awgn_capacity(p1 / (1.0 + p2), unit)
            - awgn_capacity(ch.h1 * p1 / (1.0 + ch.h2 * p2), unit))


def p1_stationarity(p2, ch: TwoUserChannel) -> float:
    """Numerator ``-(1 + h2*p2) * ((1 - h1) + (h2 - h1)*p2)`` of the
    objective's partial derivative in ``p1``.

    Negative forces ``p1 = p1_max``, positive forces ``p1 = 0``, zero
    leaves ``p1`` indifferent.  Always negative when ``h1 < 1 <= h2``.
    """
    return -(1.0 + ch.h2 * p2) * ((1.0 - ch.h1) + (ch.h2 - ch.h1) * p2)


def jam_roots(p1, ch: TwoUserChannel) -> tuple[float, float, float]:
    """Discriminant and roots of the jamming stationarity parabola in
    ``p2`` at transmit power ``p1``.

    Returns ``(disc, p_lo, p_hi)`` with ``disc >= 0`` and ``p_lo <=
    p_hi``; ``p_hi`` is the candidate interior jamming power.  ``p_lo``
    is negative whenever ``h1 < 1``.  Requires ``h2 > h1`` and ``h2 >= 1``.
    """
    if p1 < 0:
        raise ValidationError(f"p1: must be >= 0 (got {p1})")
    if ch.h2 <= ch.h1:
        raise ValidationError(
            f"h2: stationarity roots need h2 > h1 (got h1={ch.h1}, h2={ch.h2})")
    if ch.h2 < 1.0:
        raise ValidationError(
            f"h2: stationarity roots need h2 >= 1 (got {ch.h2})")
    h1, h2 = ch.h1, ch.h2
    disc = h1 * h2 * ((h2 - 1.0) + (h2 - h1) * p1) * (h2 - 1.0)
    root = math.sqrt(disc)
    denom = h2 * (h2 - h1)
    p_hi = (-h2 * (1.0 - h1) + root) / denom
    p_lo = (-h2 * (1.0 - h1) - root) / denom
    return disc, p_lo, p_hi


def p2_stationarity(p1, p2, ch: TwoUserChannel) -> float:
    """Numerator ``p1*h2*(h2-h1)*(p2-p_hi)*(p2-p_lo)`` of the objective's
    partial derivative in ``p2`` (an upright parabola; the objective
    increases strictly between the roots and decreases outside)."""
    _, p_lo, p_hi = jam_roots(p1, ch)
    return p1 * ch.h2 * (ch.h2 - ch.h1) * (p2 - p_hi) * (p2 - p_lo)


def no_jam_power_threshold(ch: TwoUserChannel) -> float:
    """Largest ``p1_max`` for which jamming cannot help in case A
    (``p_hi <= 0``), i.e. ``(1 - h1*h2) / (h1 * (h2 - 1))``.

    Zero when ``h1*h2 >= 1`` (the jammer always helps) and infinite when
    ``h2 == 1`` or ``h1 == 0`` (it never does).
    """
    if not ch.h1 < 1.0 <= ch.h2:
        raise ValidationError(
            f"h: threshold applies to h1 < 1 <= h2 (got h1={ch.h1}, h2={ch.h2})")
    if ch.h1 * ch.h2 >= 1.0:
        return 0.0
    if ch.h2 == 1.0 or ch.h1 == 0.0:
        return math.inf
    return (1.0 - ch.h1 * ch.h2) / (ch.h1 * (ch.h2 - 1.0))


def silence_threshold(ch: TwoUserChannel) -> float:
    """Largest ``p2_max`` for which nobody transmits in case B:
    ``(h1 - 1) / (h2 - h1)``.  At jamming powers up to this value user 1's
    effective channel is no better than the eavesdropper's."""
    if not 1.0 <= ch.h1 < ch.h2:
        raise ValidationError(
            f"h: threshold applies to 1 <= h1 < h2 (got h1={ch.h1}, h2={ch.h2})")
    return (ch.h1 - 1.0) / (ch.h2 - ch.h1)


def solve_case_a(ch: TwoUserChannel, unit: str = "bits") -> JammingSolution:
    """Closed-form optimum for ``h1 < 1 <= h2``.

    User 1 transmits at full power (its stationarity numerator is always
    negative); user 2 jams at the positive root clamped to the box.
    """
    if not ch.h1 < 1.0 <= ch.h2:
        raise ValidationError(
            f"h: case A requires h1 < 1 <= h2 (got h1={ch.h1}, h2={ch.h2})")
    if ch.p1_max == 0.0:
        return JammingSolution(0.0, 0.0, 0.0, BRANCH_NO_JAM, CASE_A, unit)
    _, _, p_hi = jam_roots(ch.p1_max, ch)
    if p_hi <= 0.0:
        p2, branch = 0.0, BRANCH_NO_JAM
    elif p_hi <= ch.p2_max:
        p2, branch = p_hi, BRANCH_INTERIOR_ROOT
    else:
        p2, branch = ch.p2_max, BRANCH_FULL_JAM
    rate = max(0.0, jam_objective(ch.p1_max, p2, ch, unit))
    return JammingSolution(ch.p1_max, p2, rate, branch, CASE_A, unit)


def solve_case_b(ch: TwoUserChannel, unit: str = "bits") -> JammingSolution:
    """Closed-form optimum for ``1 <= h1 < h2``.

    Below the silence threshold on ``p2_max`` no positive rate exists and
    everyone stays silent; above it the solution has the case-A form.
    """
    if not 1.0 <= ch.h1 < ch.h2:
        raise ValidationError(
            f"h: case B requires 1 <= h1 < h2 (got h1={ch.h1}, h2={ch.h2})")
    if ch.p2_max <= silence_threshold(ch) or ch.p1_max == 0.0:
        return JammingSolution(0.0, 0.0, 0.0, BRANCH_ALL_SILENT, CASE_B, unit)
    _, _, p_hi = jam_roots(ch.p1_max, ch)
    if ch.p2_max <= p_hi:
        p2, branch = ch.p2_max, BRANCH_FULL_JAM
    else:
        p2, branch = p_hi, BRANCH_INTERIOR_ROOT
    rate = max(0.0, jam_objective(ch.p1_max, p2, ch, unit))
    return JammingSolution(ch.p1_max, p2, rate, branch, CASE_B, unit)


def solve_jamming(ch: TwoUserChannel, unit: str = "bits") -> JammingSolution:
    """Dispatch over the jamming regimes.

    Both gains below 1: there is no jammer; the sum-rate-optimal
    allocation is returned with branch ``NoJam``.  Equal gains >= 1:
    jamming works only through the gain ratio, which is 1 here, so
    everyone stays silent.  Otherwise case A or case B applies.
    """
    if ch.h2 < 1.0:
        std = StandardChannel(
            h=(ch.h1, ch.h2), p_max=(ch.p1_max, ch.p2_max), rate_unit=unit)
        sol = max_sum_rate(std)
        return JammingSolution(
            sol.powers[0], sol.powers[1], sol.sum_rate,
            BRANCH_NO_JAM, CASE_DEGENERATE, unit)
    if ch.h1 < 1.0:
        return solve_case_a(ch, unit)
    if ch.h2 - ch.h1 <= EQUAL_GAIN_TOL:
        return JammingSolution(0.0, 0.0, 0.0, BRANCH_ALL_SILENT, CASE_DEGENERATE, unit)
    return solve_case_b(ch, unit)
