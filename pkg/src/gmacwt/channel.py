"""Raw and standardized descriptions of the multiple-access wiretap channel.

A raw channel lists, per user, the power gain to the intended receiver and
to the eavesdropper, plus the noise variances at the two receivers and the
per-user transmit power limits.  Scaling user ``k``'s codewords by
``sqrt(gain_receiver_k / noise_var_receiver)`` (and the eavesdropper's
signal by the corresponding noise standard deviation) produces an
equivalent channel with unit gains and unit noise at the receiver, where
the eavesdropper is characterized solely by the standardized gains

    h_k = gain_eavesdropper_k * noise_var_receiver
          / (gain_receiver_k * noise_var_eavesdropper)

and the power limits become ``p_max_k = gain_receiver_k * power_limit_k /
noise_var_receiver``.  Both per-user SNRs are preserved, so every rate
quantity computed downstream is unchanged.  ``h_k < 1`` means user ``k``'s
channel to the intended receiver is relatively better than its channel to
the eavesdropper.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .errors import ValidationError

#: Feasibility checks enumerate all 2^K - 1 user subsets.
MAX_USERS = 16

RATE_UNITS = ("bits", "nats")


def _check_rate_unit(unit):
    if unit not in RATE_UNITS:
        raise ValidationError(
            f"rate_unit: must be one of {list(RATE_UNITS)} (got {unit!r})")


def _check_user_count(n):
    if not 1 <= n <= MAX_USERS:
        raise ValidationError(
            f"users: must have between 1 and {MAX_USERS} users (got {n})")


def _as_float_tuple(name, values):
    try:
        return tuple(float(x) for x in values)
    except (TypeError, ValueError):
        raise ValidationError(f"{name}: must be a sequence of numbers") from None


@dataclass(frozen=True)
class ChannelParams:
    """Channel in raw (non-standard) form.

    Attributes
    ----------
    gains_to_receiver : tuple of float
        Linear power gains to the intended receiver, one per user, > 0.
    gains_to_eavesdropper : tuple of float
        Linear power gains to the eavesdropper, one per user, >= 0.
    noise_var_receiver, noise_var_eavesdropper : float
        Noise variances at the two receivers, > 0.
    power_limits : tuple of float
        Per-user transmit power limits, >= 0.
    """

    gains_to_receiver: tuple[float, ...]
    gains_to_eavesdropper: tuple[float, ...]
    noise_var_receiver: float
    noise_var_eavesdropper: float
    power_limits: tuple[float, ...]

    def __post_init__(self):
        for name in ("gains_to_receiver", "gains_to_eavesdropper", "power_limits"):
            object.__setattr__(self, name, _as_float_tuple(name, getattr(self, name)))
        object.__setattr__(self, "noise_var_receiver", float(self.noise_var_receiver))
        object.__setattr__(self, "noise_var_eavesdropper", float(self.noise_var_eavesdropper))

        k = len(self.gains_to_receiver)
        _check_user_count(k)
        for name in ("gains_to_eavesdropper", "power_limits"):
            if len(getattr(self, name)) != k:
                raise ValidationError(
                    f"{name}: length {len(getattr(self, name))} does not match "
                    f"the {k} users implied by gains_to_receiver")
        for i, gain in enumerate(self.gains_to_receiver):
            if gain <= 0:
                raise ValidationError(
                    f"gains_to_receiver[{i}]: must be > 0 (got {gain})")
        for i, gain in enumerate(self.gains_to_eavesdropper):
            if gain < 0:
                raise ValidationError(
                    f"gains_to_eavesdropper[{i}]: must be >= 0 (got {gain})")
        for i, p in enumerate(self.power_limits):
            if p < 0:
                raise ValidationError(f"power_limits[{i}]: must be >= 0 (got {p})")
        if self.noise_var_receiver <= 0:
            raise ValidationError(
                f"noise_var_receiver: must be > 0 (got {self.noise_var_receiver})")
        if self.noise_var_eavesdropper <= 0:
            raise ValidationError(
                f"noise_var_eavesdropper: must be > 0 (got {self.noise_var_eavesdropper})")

    @property
    def num_users(self) -> int:
        return len(self.gains_to_receiver)


@dataclass(frozen=True)
class StandardChannel:
    """Channel in standard form: unit receiver gains and unit noise.

    Attributes
    ----------
    h : tuple of float
        Standardized eavesdropper gains, one per user, >= 0.
    p_max : tuple of float
        Per-user power caps in standardized units, >= 0.
    rate_unit : str
        "bits" (log base 2) or "nats" (natural log); selects the logarithm
        base used by every downstream rate computation.
    """

    h: tuple[float, ...]
    p_max: tuple[float, ...]
    rate_unit: str = "bits"

    def __post_init__(self):
        object.__setattr__(self, "h", _as_float_tuple("h", self.h))
        object.__setattr__(self, "p_max", _as_float_tuple("p_max", self.p_max))
        _check_user_count(len(self.h))
        if len(self.p_max) != len(self.h):
            raise ValidationError(
                f"p_max: length {len(self.p_max)} does not match the "
                f"{len(self.h)} users implied by h")
        for i, gain in enumerate(self.h):
            if gain < 0:
                raise ValidationError(f"h[{i}]: must be >= 0 (got {gain})")
        for i, p in enumerate(self.p_max):
            if p < 0:
                raise ValidationError(f"p_max[{i}]: must be >= 0 (got {p})")
        _check_rate_unit(self.rate_unit)

    @property
    def num_users(self) -> int:
        return len(self.h)


def standardize(raw: ChannelParams, rate_unit: str = "bits") -> StandardChannel:
    """Convert a raw channel to the equivalent standard form.

    Both per-user SNRs are invariant:
    ``p_max_k == gains_to_receiver_k * power_limits_k / noise_var_receiver``
    (receiver side) and ``h_k * p_max_k == gains_to_eavesdropper_k *
    power_limits_k / noise_var_eavesdropper`` (eavesdropper side).
    """
    h = tuple(
        gw * raw.noise_var_receiver / (gm * raw.noise_var_eavesdropper)
        for gm, gw in zip(raw.gains_to_receiver, raw.gains_to_eavesdropper))
    p_max = tuple(
        gm * p / raw.noise_var_receiver
        for gm, p in zip(raw.gains_to_receiver, raw.power_limits))
    return StandardChannel(h=h, p_max=p_max, rate_unit=rate_unit)


def sort_by_gain(ch: StandardChannel) -> tuple[StandardChannel, tuple[int, ...]]:
    """Reorder users by non-decreasing eavesdropper gain.

    Returns the sorted channel and the permutation ``perm`` such that
    sorted position ``i`` holds original user ``perm[i]`` (0-based).
    Ties keep the original order.
    """
    perm = tuple(sorted(range(ch.num_users), key=lambda k: (ch.h[k], k)))
    ordered = replace(
        ch,
        h=tuple(ch.h[k] for k in perm),
        p_max=tuple(ch.p_max[k] for k in perm))
    return ordered, perm


def invert_permutation(perm) -> tuple[int, ...]:
    """Inverse of a 0-based permutation tuple."""
    inv = [0] * len(perm)
    for i, k in enumerate(perm):
        inv[k] = i
    return tuple(inv)


# ---------------------------------------------------------------------------
# JSON channel documents
# ---------------------------------------------------------------------------
#
# Raw form:
#   {"users": [{"gain_receiver": g, "gain_eavesdropper": g, "power_max": p},
#              ...],
#    "noise_var_receiver": v, "noise_var_eavesdropper": v,
#    "rate_unit": "bits"}
#
# Standard form ("standard": true):
#   {"standard": true,
#    "users": [{"h": h, "power_max": p}, ...],
#    "rate_unit": "bits"}


def _user_field(users, index, field):
    user = users[index]
    if not isinstance(user, dict):
        raise ValidationError(f"users[{index}]: must be an object")
    if field not in user:
        raise ValidationError(f"users[{index}].{field}: required field is missing")
    value = user[field]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError(f"users[{index}].{field}: must be a number (got {value!r})")
    return float(value)


def channel_from_json(doc: dict) -> StandardChannel:
    """Build a :class:`StandardChannel` from a channel JSON document.

    Raw documents are standardized; documents with ``"standard": true``
    supply ``h``/``power_max`` directly.
    """
    if not isinstance(doc, dict):
        raise ValidationError("channel document: must be a JSON object")
    users = doc.get("users")
    if not isinstance(users, list) or not users:
        raise ValidationError("users: must be a non-empty array")
    _check_user_count(len(users))
    rate_unit = doc.get("rate_unit", "bits")
    _check_rate_unit(rate_unit)

    if doc.get("standard", False):
        h = tuple(_user_field(users, i, "h") for i in range(len(users)))
        p_max = tuple(_user_field(users, i, "power_max") for i in range(len(users)))
        return StandardChannel(h=h, p_max=p_max, rate_unit=rate_unit)

    for field in ("noise_var_receiver", "noise_var_eavesdropper"):
        if field not in doc:
            raise ValidationError(f"{field}: required field is missing")
        if not isinstance(doc[field], (int, float)) or isinstance(doc[field], bool):
            raise ValidationError(f"{field}: must be a number (got {doc[field]!r})")
    raw = ChannelParams(
        gains_to_receiver=tuple(
            _user_field(users, i, "gain_receiver") for i in range(len(users))),
        gains_to_eavesdropper=tuple(
            _user_field(users, i, "gain_eavesdropper") for i in range(len(users))),
        noise_var_receiver=float(doc["noise_var_receiver"]),
        noise_var_eavesdropper=float(doc["noise_var_eavesdropper"]),
        power_limits=tuple(
            _user_field(users, i, "power_max") for i in range(len(users))))
    return standardize(raw, rate_unit=rate_unit)


def channel_to_json(ch: StandardChannel) -> dict:
    """Standard-form JSON document for ``ch``; feeds back into
    :func:`channel_from_json` unchanged."""
    return {
        "standard": True,
        "rate_unit": ch.rate_unit,
        "users": [
            {"h": h, "power_max": p} for h, p in zip(ch.h, ch.p_max)
        ],
    }


def load_channel(path) -> StandardChannel:
    """Read a channel JSON file and return its standard form."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"input: cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"input: {path} is not valid JSON: {exc}") from None
    return channel_from_json(doc)
