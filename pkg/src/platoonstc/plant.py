"""Planar double-integrator vehicle with speed-dependent resistance.

Per axis the truth model is

    p' = v
    v' = (F - f(v)) / m + d(t),      f(v) = c_d v |v| + c_r v

with commanded force F = m * u (u is the controller's acceleration command),
aerodynamic coefficient c_d [kg/m], rolling coefficient c_r [kg/s] and an
exogenous sinusoidal disturbance d(t) = A sin(w t + phi) [m/s^2].  The two
axes are dynamically decoupled; coupling enters only through the controller.

States are advanced with classical fixed-step RK4.
"""

import math
from dataclasses import dataclass

import numpy as np

from .accel import maybe_njit
from .errors import ConfigError, NumericalError


@dataclass(frozen=True)
class DisturbanceSpec:
    """Sinusoidal acceleration disturbance, one amplitude/phase per axis."""

    amplitude: np.ndarray  # (2,) [m/s^2]
    angular_frequency: float  # [rad/s]
    phase: np.ndarray  # (2,) [rad]

    def __post_init__(self):
        amp = np.asarray(self.amplitude, dtype=float).reshape(2)
        ph = np.asarray(self.phase, dtype=float).reshape(2)
        object.__setattr__(self, "amplitude", amp)
        object.__setattr__(self, "phase", ph)


@dataclass(frozen=True)
class VehicleParams:
    mass: float  # [kg]
    drag_coeff: float  # [kg/m]
    rolling_coeff: float  # [kg/s]
    disturbance: DisturbanceSpec

    def __post_init__(self):
        if self.mass <= 0.0:
            raise ConfigError(f"mass must be positive, got {self.mass}")
        if self.drag_coeff < 0.0 or self.rolling_coeff < 0.0:
            raise ConfigError("resistance coefficients must be non-negative")


@dataclass
class VehicleState:
    position: np.ndarray  # (2,) [m]
    velocity: np.ndarray  # (2,) [m/s]

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=float).reshape(2).copy()
        self.velocity = np.asarray(self.velocity, dtype=float).reshape(2).copy()


@maybe_njit
def resistance_axis(drag: float, rolling: float, v: float) -> float:
    return drag * v * abs(v) + rolling * v


@maybe_njit
def accel_axis(v, force, mass, drag, rolling, amp, omega, phase, t):
    """Acceleration of one axis: (F - f(v))/m + A sin(w t + phi)."""
    return (force - (drag * v * abs(v) + rolling * v)) / mass + amp * math.sin(
        omega * t + phase
    )


@maybe_njit
def rk4_axis(p, v, force, mass, drag, rolling, amp, omega, phase, t, dt):
    """One RK4 step of the (p, v) pair for a single axis under constant force."""
    a1 = accel_axis(v, force, mass, drag, rolling, amp, omega, phase, t)
    k1p = v
    v2 = v + 0.5 * dt * a1
    a2 = accel_axis(v2, force, mass, drag, rolling, amp, omega, phase, t + 0.5 * dt)
    k2p = v2
    v3 = v + 0.5 * dt * a2
    a3 = accel_axis(v3, force, mass, drag, rolling, amp, omega, phase, t + 0.5 * dt)
    k3p = v3
    v4 = v + dt * a3
    a4 = accel_axis(v4, force, mass, drag, rolling, amp, omega, phase, t + dt)
    k4p = v4
    p_new = p + dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
    v_new = v + dt / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
    return p_new, v_new


@maybe_njit
def lumped_uncertainty_axis(v, mass, drag, rolling, amp, omega, phase, t):
    """The model terms a controller cannot read off directly: -f(v)/m + d(t)."""
    return -(drag * v * abs(v) + rolling * v) / mass + amp * math.sin(
        omega * t + phase
    )


def resistance_force(params: VehicleParams, velocity: np.ndarray) -> np.ndarray:
    """f(v) per axis [N]."""
    v = np.asarray(velocity, dtype=float)
    return np.array(
        [
            resistance_axis(params.drag_coeff, params.rolling_coeff, v[0]),
            resistance_axis(params.drag_coeff, params.rolling_coeff, v[1]),
        ]
    )


def disturbance(params: VehicleParams, t: float) -> np.ndarray:
    """d(t) per axis [m/s^2]."""
    spec = params.disturbance
    return spec.amplitude * np.sin(spec.angular_frequency * t + spec.phase)


def lumped_uncertainty(params: VehicleParams, velocity: np.ndarray, t: float) -> np.ndarray:
    """-f(v)/m + d(t) per axis; what the adaptive estimator has to reconstruct."""
    return -resistance_force(params, velocity) / params.mass + disturbance(params, t)


def derivative(
    params: VehicleParams, state: VehicleState, force: np.ndarray, t: float
) -> tuple:
    """Right-hand side (p', v') under the given constant force [N]."""
    f = np.asarray(force, dtype=float)
    dv = (f - resistance_force(params, state.velocity)) / params.mass + disturbance(
        params, t
    )
    return state.velocity.copy(), dv


def step(
    params: VehicleParams, state: VehicleState, force: np.ndarray, t: float, dt: float
) -> VehicleState:
    """Advance the state by one RK4 step of size dt under a held force."""
    if dt <= 0.0:
        raise ConfigError(f"step size must be positive, got {dt}")
    f = np.asarray(force, dtype=float)
    spec = params.disturbance
    out_p = np.empty(2)
    out_v = np.empty(2)
    for ax in range(2):
        out_p[ax], out_v[ax] = rk4_axis(
            state.position[ax],
            state.velocity[ax],
            f[ax],
            params.mass,
            params.drag_coeff,
            params.rolling_coeff,
            spec.amplitude[ax],
            spec.angular_frequency,
            spec.phase[ax],
            t,
            dt,
        )
    if not (np.all(np.isfinite(out_p)) and np.all(np.isfinite(out_v))):
        raise NumericalError(f"vehicle state diverged at t={t}")
    return VehicleState(position=out_p, velocity=out_v)
