"""Power allocation maximizing the achievable sum secrecy rate.

Maximizing ``sum_secrecy_rate`` over the allowable power set is equivalent
to minimizing the total-SNR ratio ``(1 + sum h_k P_k) / (1 + sum P_k)``
seen by the eavesdropper relative to the receiver.  The optimum has a
threshold structure: with users ordered by non-decreasing ``h``, the first
``l`` users transmit at full power and the rest stay silent, where ``l``
is the largest count for which every transmitting user's gain stays below
the resulting ratio.  Users with ``h_k >= 1`` never transmit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .channel import StandardChannel, sort_by_gain
from .errors import InternalError
from .region import _checked_powers, awgn_capacity, is_feasible

#: Gains within this of 1 count as >= 1 and are forced silent.
PRUNE_TOL = 1e-12

#: A gain matching the threshold ratio within this relative tolerance is a
#: tie; the tied user stays silent (the sum rate does not depend on its
#: power, so transmitting nothing conserves power).
TIE_TOL = 1e-12


def snr_ratio(powers, ch: StandardChannel) -> float:
    """Eavesdropper-to-receiver total-SNR ratio
    ``(1 + sum h_k P_k) / (1 + sum P_k)``.

    Minimizing it over the allowable power set maximizes the sum secrecy
    rate; it equals 1 at zero power.
    """
    p = _checked_powers(powers, ch)
    return (1.0 + sum(h * v for h, v in zip(ch.h, p))) / (1.0 + sum(p))


def prune_bad_users(powers, ch: StandardChannel) -> tuple[float, ...]:
    """Zero the power of every user with ``h_k >= 1`` (within PRUNE_TOL).

    Never increases the SNR ratio, and leaves an allocation that is
    feasible whenever the surviving users all have ``h_k < 1``.
    """
    p = _checked_powers(powers, ch)
    return tuple(
        0.0 if h >= 1.0 - PRUNE_TOL else v for h, v in zip(ch.h, p))


def sum_secrecy_rate(powers, ch: StandardChannel) -> float:
    """``capacity(sum P_k) - capacity(sum h_k P_k)`` in the channel's rate
    unit; negative when the powers lie outside the allowable set."""
    p = _checked_powers(powers, ch)
    unit = ch.rate_unit
    return (awgn_capacity(sum(p), unit)
            - awgn_capacity(sum(h * v for h, v in zip(ch.h, p)), unit))


@dataclass(frozen=True)
class SumRateSolution:
    """Sum-rate-optimal power allocation.

    Attributes
    ----------
    powers : tuple of float
        Optimal per-user powers in the original user order.
    limiting_user : int
        Number ``l`` of full-power users in gain-sorted order; 0 means no
        user transmits.
    sum_rate : float
        Achieved sum secrecy rate (in ``rate_unit``).
    snr_ratio : float
        SNR ratio at the optimum; <= 1 whenever someone transmits.
    """

    powers: tuple[float, ...]
    limiting_user: int
    sum_rate: float
    snr_ratio: float
    rate_unit: str

    def to_json_dict(self) -> dict:
        return {
            "p_star": list(self.powers),
            "limiting_user": [
                k + 1 for k, p in enumerate(self.powers) if p > 0.0
            ],
            "sum_rate": self.sum_rate,
            "rho_star": self.snr_ratio,
            "rate_unit": self.rate_unit,
        }


def max_sum_rate(ch: StandardChannel) -> SumRateSolution:
    """Sum-rate-optimal allocation via the limiting-user threshold scan.

    Users are sorted by gain (ties keep the original order) and admitted
    at full power one by one while the next gain stays below the current
    SNR ratio; each admission lowers the ratio.  A user whose gain equals
    the ratio (within TIE_TOL, relative) or is >= 1 stays silent.  The
    returned allocation is in the original user order and is feasible by
    construction.
    """
    sorted_ch, perm = sort_by_gain(ch)
    h, p_max = sorted_ch.h, sorted_ch.p_max

    num = 1.0
    den = 1.0
    limit = 0
    for j in range(len(h)):
        if h[j] >= 1.0 - PRUNE_TOL:
            break
        if h[j] >= (num / den) * (1.0 - TIE_TOL):
            break
        num += h[j] * p_max[j]
        den += p_max[j]
        limit = j + 1

    powers = [0.0] * ch.num_users
    for j in range(limit):
        powers[perm[j]] = p_max[j]
    powers = tuple(powers)

    ok, witness = is_feasible(powers, ch)
    if not ok:
        raise InternalError(
            f"optimal allocation failed the feasibility check it satisfies "
            f"by construction (witness: {witness})")

    return SumRateSolution(
        powers=powers,
        limiting_user=limit,
        sum_rate=sum_secrecy_rate(powers, ch),
        snr_ratio=num / den,
        rate_unit=ch.rate_unit)
