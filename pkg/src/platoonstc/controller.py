"""Backstepping tracking controller with adaptive uncertainty compensation.

Working on observer estimates only, each vehicle regulates

    z1 = p_hat - q            (position error)
    z2 = v_hat - q' - alpha   (velocity error after the virtual control)

with alpha = -K1 z1.  The acceleration command is

    u = -z1 - K2 z2 - delta_hat - theta_hat tanh(z2 / phi) + q'' + alpha'

where delta_hat is the basis-function estimate of the unmodelled
acceleration, theta_hat an adaptive robustness gain compensating bounded
residuals (sample hold, measurement noise), and phi > 0 smooths the sign
function into tanh to avoid chattering.  theta_hat follows the leaky law

    theta_hat' = c2 (|z2| - leakage * theta_hat),   clamped at zero.

All gains act per axis; K1, K2 are diagonal.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .accel import maybe_njit
from .errors import ConfigError, SchedulingError
from .rbf import RbfModel


@dataclass(frozen=True)
class ControllerGains:
    k1: np.ndarray  # (2,) diagonal of K1
    k2: np.ndarray  # (2,) diagonal of K2
    c1: float  # basis-function adaptation gain
    c2: float  # robustness-gain adaptation rate
    robust_smoothing: float  # phi [m/s]
    robust_leakage: float  # leakage on theta_hat

    def __post_init__(self):
        k1 = np.asarray(self.k1, dtype=float).reshape(2)
        k2 = np.asarray(self.k2, dtype=float).reshape(2)
        if np.any(k1 <= 0.0) or np.any(k2 <= 0.0):
            raise ConfigError("K1 and K2 diagonal entries must be positive")
        if self.c1 <= 0.0 or self.c2 <= 0.0:
            raise ConfigError("adaptation gains c1, c2 must be positive")
        if self.robust_smoothing <= 0.0:
            raise ConfigError("robust smoothing width must be positive")
        if self.robust_leakage <= 0.0:
            raise ConfigError("robust leakage must be positive")
        object.__setattr__(self, "k1", k1)
        object.__setattr__(self, "k2", k2)


@dataclass(frozen=True)
class DesiredTrajectory:
    q: np.ndarray  # (2,) position reference
    q_dot: np.ndarray  # (2,)
    q_ddot: np.ndarray  # (2,)

    def __post_init__(self):
        for name in ("q", "q_dot", "q_ddot"):
            object.__setattr__(
                self, name, np.asarray(getattr(self, name), dtype=float).reshape(2)
            )


@dataclass
class AdaptiveState:
    """Everything the controller learns online: basis weights and theta_hat."""

    model: RbfModel
    theta_hat: np.ndarray  # (2,), non-negative

    def __post_init__(self):
        th = np.asarray(self.theta_hat, dtype=float).reshape(2).copy()
        if np.any(th < 0.0):
            raise ConfigError("theta_hat must be non-negative")
        self.theta_hat = th


@maybe_njit
def control_axis(z1, z2, nn, theta, k2, phi, q_ddot, alpha_dot):
    return -z1 - k2 * z2 - nn - theta * math.tanh(z2 / phi) + q_ddot + alpha_dot


def virtual_control(gains: ControllerGains, z1: np.ndarray) -> np.ndarray:
    """alpha = -K1 z1."""
    return -gains.k1 * np.asarray(z1, dtype=float)


def tracking_errors(
    est_position: np.ndarray,
    est_velocity: np.ndarray,
    desired: DesiredTrajectory,
    gains: ControllerGains,
) -> tuple:
    """Return (z1, z2, alpha_dot) for the current estimates and reference."""
    p = np.asarray(est_position, dtype=float)
    v = np.asarray(est_velocity, dtype=float)
    z1 = p - desired.q
    alpha = -gains.k1 * z1
    z2 = v - desired.q_dot - alpha
    alpha_dot = -gains.k1 * (v - desired.q_dot)
    return z1, z2, alpha_dot


def ideal_control(
    gains: ControllerGains,
    z1: np.ndarray,
    z2: np.ndarray,
    nn_estimate: np.ndarray,
    theta_hat: np.ndarray,
    q_ddot: np.ndarray,
    alpha_dot: np.ndarray,
) -> np.ndarray:
    """Acceleration command evaluated from current (not held) quantities."""
    u = np.empty(2)
    for ax in range(2):
        u[ax] = control_axis(
            float(z1[ax]),
            float(z2[ax]),
            float(nn_estimate[ax]),
            float(theta_hat[ax]),
            float(gains.k2[ax]),
            gains.robust_smoothing,
            float(q_ddot[ax]),
            float(alpha_dot[ax]),
        )
    return u


def adapt_robust(
    state: AdaptiveState, gains: ControllerGains, z2: np.ndarray, dt: float
) -> AdaptiveState:
    """One Euler step of the theta_hat law, clamped to stay non-negative."""
    if dt <= 0.0:
        raise ConfigError(f"step size must be positive, got {dt}")
    z = np.abs(np.asarray(z2, dtype=float))
    theta = state.theta_hat + dt * gains.c2 * (z - gains.robust_leakage * state.theta_hat)
    return replace(state, theta_hat=np.maximum(theta, 0.0))


def control_rate(u_now: np.ndarray, u_prev: np.ndarray, elapsed: float) -> float:
    """Difference-quotient magnitude ||u_now - u_prev|| / elapsed [m/s^3]."""
    if elapsed <= 0.0:
        raise SchedulingError(f"elapsed time must be positive, got {elapsed}")
    diff = np.asarray(u_now, dtype=float) - np.asarray(u_prev, dtype=float)
    return float(np.linalg.norm(diff) / elapsed)
