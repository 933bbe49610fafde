"""Self-triggered transmission scheduler.

At event instant t_k the vehicle transmits u(t_k), estimates its own control
rate from the previous transmission, and books the next event at

    t_{k+1} = t_k + min( (s_sigma ||u(t_k)|| + s_d) / max(rate, s_lambda),
                         t_max ).

Between events the command is held constant, so the hold error
||u_bar(t) - u(t_k)|| grows at most with the realized control rate and stays
below s_sigma ||u(t_k)|| + s_d whenever the realized rate does not exceed the
held estimate.  Because the numerator is at least s_d and the denominator is
finite, consecutive events are separated by at least s_d divided by the
largest rate estimate ever formed -- there is no event accumulation.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .accel import maybe_njit
from .errors import ConfigError, SchedulingError


@dataclass(frozen=True)
class TriggerParams:
    s_sigma: float  # relative threshold, dimensionless, in (0, 1)
    s_d: float  # absolute threshold [m/s^2]
    s_lambda: float  # rate floor [m/s^3]
    t_max: float  # hard cap on the inter-event time [s]

    def __post_init__(self):
        if not 0.0 < self.s_sigma < 1.0:
            raise ConfigError(f"s_sigma must lie in (0, 1), got {self.s_sigma}")
        if self.s_d <= 0.0:
            raise ConfigError(f"s_d must be positive, got {self.s_d}")
        if self.s_lambda <= 0.0:
            raise ConfigError(f"s_lambda must be positive, got {self.s_lambda}")
        if self.t_max <= 0.0:
            raise ConfigError(f"t_max must be positive, got {self.t_max}")


@dataclass
class TriggerState:
    last_event_time: float
    held_control: np.ndarray  # (2,) latest transmitted command
    held_rate: float  # rate estimate formed at the latest event
    next_event_time: float
    event_count: int = 0
    interval_log: list = field(default_factory=list)

    def __post_init__(self):
        self.held_control = np.asarray(self.held_control, dtype=float).reshape(2).copy()


@maybe_njit
def interval_seconds(u_norm, rate, s_sigma, s_d, s_lambda, t_max):
    """Scheduled hold duration for a transmitted command of magnitude u_norm."""
    denom = rate if rate > s_lambda else s_lambda
    dt_event = (s_sigma * u_norm + s_d) / denom
    return dt_event if dt_event < t_max else t_max


def next_instant(t_k: float, u_k: np.ndarray, rate_k: float, params: TriggerParams) -> float:
    """Absolute time of the next event for a transmission u_k at t_k."""
    if rate_k < 0.0:
        raise ConfigError(f"rate estimate must be non-negative, got {rate_k}")
    u_norm = float(np.linalg.norm(np.asarray(u_k, dtype=float)))
    return t_k + interval_seconds(
        u_norm, rate_k, params.s_sigma, params.s_d, params.s_lambda, params.t_max
    )


def held_output(state: TriggerState, t: float) -> np.ndarray:
    """The zero-order-held command, valid on [last_event_time, next_event_time)."""
    if t < state.last_event_time or t >= state.next_event_time:
        raise SchedulingError(
            f"held command queried at t={t}, outside "
            f"[{state.last_event_time}, {state.next_event_time})"
        )
    return state.held_control.copy()


def min_interval_bound(params: TriggerParams, rate_sup: float) -> float:
    """Guaranteed lower bound on inter-event times given a rate ceiling.

    Any event schedules at least s_d / max(rate_sup, s_lambda) ahead (capped
    by t_max), so a finite rate ceiling excludes event accumulation.
    """
    if rate_sup <= 0.0:
        raise ConfigError(f"rate ceiling must be positive, got {rate_sup}")
    denom = max(rate_sup, params.s_lambda)
    return min(params.s_d / denom, params.t_max)


def e_u_diagnostic(held: np.ndarray, ideal: np.ndarray) -> float:
    """Hold error magnitude ||u_held - u_ideal||."""
    diff = np.asarray(held, dtype=float) - np.asarray(ideal, dtype=float)
    return float(math.hypot(diff[0], diff[1]))
