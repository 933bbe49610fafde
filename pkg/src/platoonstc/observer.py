"""Sampled-data state observer driven by zero-order-held position fixes.

Position measurements arrive on a fixed grid t_k = k T, corrupted by bounded
noise, and are held between samples.  Between samples the estimate obeys

    p_hat' = v_hat + l1 (y_held - p_hat)
    v_hat' = u + delta_hat + l2 (y_held - p_hat)

where u is the applied acceleration command and delta_hat the current
estimate of the unmodelled acceleration.  With l1, l2 > 0 the error dynamics
matrix [[-l1, 1], [-l2, 0]] is Hurwitz.
"""

from dataclasses import dataclass

import numpy as np

from .accel import maybe_njit
from .errors import ConfigError, SchedulingError


@dataclass(frozen=True)
class ObserverGains:
    l1: float
    l2: float

    def __post_init__(self):
        if self.l1 <= 0.0 or self.l2 <= 0.0:
            raise ConfigError(
                f"observer gains must be positive, got l1={self.l1}, l2={self.l2}"
            )


@dataclass
class MeasurementModel:
    """Uniform-noise position sampler on a fixed time grid."""

    sample_period: float  # [s]
    noise_bound: float  # [m], per axis
    seed: int = 0

    def __post_init__(self):
        if self.sample_period <= 0.0:
            raise ConfigError("sample period must be positive")
        if self.noise_bound < 0.0:
            raise ConfigError("noise bound must be non-negative")
        self._rng = np.random.default_rng(self.seed)

    def noise(self) -> np.ndarray:
        return self._rng.uniform(-self.noise_bound, self.noise_bound, size=2)


@dataclass
class ObserverState:
    est_position: np.ndarray  # (2,)
    est_velocity: np.ndarray  # (2,)
    held_sample: np.ndarray  # (2,) latest zero-order-held measurement
    last_sample_time: float

    def __post_init__(self):
        self.est_position = np.asarray(self.est_position, dtype=float).reshape(2).copy()
        self.est_velocity = np.asarray(self.est_velocity, dtype=float).reshape(2).copy()
        self.held_sample = np.asarray(self.held_sample, dtype=float).reshape(2).copy()


def sample(model: MeasurementModel, true_position: np.ndarray, t_k: float) -> np.ndarray:
    """Noisy position fix at grid instant t_k.

    t_k must sit on the sample grid (within a 1e-6 * T tolerance); sampling
    off-grid indicates a scheduling bug in the caller.
    """
    ratio = t_k / model.sample_period
    if abs(ratio - round(ratio)) > 1e-6:
        raise SchedulingError(
            f"sample requested at t={t_k}, not on the {model.sample_period} s grid"
        )
    return np.asarray(true_position, dtype=float) + model.noise()


@maybe_njit
def observer_rk4_axis(p_hat, v_hat, held, l1, l2, drive, dt):
    """One RK4 step of one observer axis; drive = u + delta_hat held constant."""
    dp1 = v_hat + l1 * (held - p_hat)
    dv1 = drive + l2 * (held - p_hat)
    p2 = p_hat + 0.5 * dt * dp1
    v2 = v_hat + 0.5 * dt * dv1
    dp2 = v2 + l1 * (held - p2)
    dv2 = drive + l2 * (held - p2)
    p3 = p_hat + 0.5 * dt * dp2
    v3 = v_hat + 0.5 * dt * dv2
    dp3 = v3 + l1 * (held - p3)
    dv3 = drive + l2 * (held - p3)
    p4 = p_hat + dt * dp3
    v4 = v_hat + dt * dv3
    dp4 = v4 + l1 * (held - p4)
    dv4 = drive + l2 * (held - p4)
    p_new = p_hat + dt / 6.0 * (dp1 + 2.0 * dp2 + 2.0 * dp3 + dp4)
    v_new = v_hat + dt / 6.0 * (dv1 + 2.0 * dv2 + 2.0 * dv3 + dv4)
    return p_new, v_new


def observer_derivative(
    state: ObserverState,
    gains: ObserverGains,
    control: np.ndarray,
    nn_estimate: np.ndarray,
) -> tuple:
    """Right-hand side (p_hat', v_hat') under the held sample."""
    innovation = state.held_sample - state.est_position
    dp = state.est_velocity + gains.l1 * innovation
    dv = (
        np.asarray(control, dtype=float)
        + np.asarray(nn_estimate, dtype=float)
        + gains.l2 * innovation
    )
    return dp, dv


def observer_step(
    state: ObserverState,
    gains: ObserverGains,
    control: np.ndarray,
    nn_estimate: np.ndarray,
    dt: float,
) -> ObserverState:
    """Advance the estimate one RK4 step; control and nn_estimate are held."""
    if dt <= 0.0:
        raise ConfigError(f"step size must be positive, got {dt}")
    u = np.asarray(control, dtype=float)
    nn = np.asarray(nn_estimate, dtype=float)
    new_p = np.empty(2)
    new_v = np.empty(2)
    for ax in range(2):
        new_p[ax], new_v[ax] = observer_rk4_axis(
            state.est_position[ax],
            state.est_velocity[ax],
            state.held_sample[ax],
            gains.l1,
            gains.l2,
            u[ax] + nn[ax],
            dt,
        )
    return ObserverState(
        est_position=new_p,
        est_velocity=new_v,
        held_sample=state.held_sample,
        last_sample_time=state.last_sample_time,
    )
