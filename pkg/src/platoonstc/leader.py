"""Leader reference profile: cruise, cosine-blended deceleration, cruise.

The longitudinal speed reference is v_init until t_dec_start, then blends to
v_final along half a cosine (continuously differentiable velocity, bounded
acceleration) and stays at v_final afterwards.  The lateral reference is the
constant lane offset.  Position is the exact integral of the speed profile.
"""

import math
from dataclasses import dataclass

from .accel import maybe_njit
from .errors import ConfigError


@dataclass(frozen=True)
class LeaderProfile:
    v_init: float  # [m/s]
    v_final: float  # [m/s]
    t_dec_start: float  # [s]
    t_dec_end: float  # [s]
    lateral_offset: float  # [m]

    def __post_init__(self):
        if not self.t_dec_end > self.t_dec_start >= 0.0:
            raise ConfigError(
                f"need 0 <= t_dec_start < t_dec_end, got "
                f"[{self.t_dec_start}, {self.t_dec_end}]"
            )


@maybe_njit
def profile_velocity(t, v_init, v_final, t0, t1):
    if t < t0:
        return v_init
    if t >= t1:
        return v_final
    return 0.5 * (v_init + v_final) + 0.5 * (v_init - v_final) * math.cos(
        math.pi * (t - t0) / (t1 - t0)
    )


@maybe_njit
def profile_acceleration(t, v_init, v_final, t0, t1):
    if t < t0 or t >= t1:
        return 0.0
    return (
        -0.5 * (v_init - v_final) * math.pi / (t1 - t0)
        * math.sin(math.pi * (t - t0) / (t1 - t0))
    )


@maybe_njit
def profile_position(t, v_init, v_final, t0, t1):
    if t < t0:
        return v_init * t
    base = v_init * t0
    if t < t1:
        tau = t - t0
        return (
            base
            + 0.5 * (v_init + v_final) * tau
            + 0.5 * (v_init - v_final) * (t1 - t0) / math.pi
            * math.sin(math.pi * tau / (t1 - t0))
        )
    return base + 0.5 * (v_init + v_final) * (t1 - t0) + v_final * (t - t1)


def leader_velocity(profile: LeaderProfile, t: float) -> float:
    return profile_velocity(t, profile.v_init, profile.v_final, profile.t_dec_start, profile.t_dec_end)


def leader_acceleration(profile: LeaderProfile, t: float) -> float:
    return profile_acceleration(t, profile.v_init, profile.v_final, profile.t_dec_start, profile.t_dec_end)


def leader_position(profile: LeaderProfile, t: float) -> float:
    """Longitudinal displacement accumulated since t = 0."""
    return profile_position(t, profile.v_init, profile.v_final, profile.t_dec_start, profile.t_dec_end)
