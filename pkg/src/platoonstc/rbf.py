"""Gaussian radial-basis-function estimator with leaky gradient adaptation.

A scalar input z (here: one velocity component) is expanded over fixed
centers mu_k with common width eta,

    psi_k(z) = exp(-(z - mu_k)^2 / eta^2),

and the estimate is the weighted sum W^T psi.  Weights follow the sigma
-modified gradient law

    W <- W + dt * gain * (psi * modulation - leakage * W)

whose leakage term keeps the weights bounded for any bounded modulation
signal.  The model carries one weight column per output axis.
"""

from dataclasses import dataclass, replace

import numpy as np

from .accel import maybe_njit
from .errors import ConfigError


@dataclass(frozen=True)
class RbfModel:
    centers: np.ndarray  # (L,)
    width: float
    weights: np.ndarray  # (L, n_out)
    gain: float
    leakage: float

    def __post_init__(self):
        c = np.asarray(self.centers, dtype=float).ravel()
        w = np.atleast_2d(np.asarray(self.weights, dtype=float))
        if self.width <= 0.0:
            raise ConfigError(f"basis width must be positive, got {self.width}")
        if self.gain <= 0.0 or self.leakage <= 0.0:
            raise ConfigError("adaptation gain and leakage must be positive")
        if w.shape[0] != c.shape[0]:
            raise ConfigError(
                f"weight rows {w.shape[0]} do not match {c.shape[0]} centers"
            )
        object.__setattr__(self, "centers", c)
        object.__setattr__(self, "weights", w)

    @property
    def n_centers(self) -> int:
        return self.centers.shape[0]


def uniform_centers(n: int, low: float, high: float) -> np.ndarray:
    """n centers evenly spread over [low, high] (endpoints included)."""
    if n < 1:
        raise ConfigError(f"need at least one center, got {n}")
    if not high > low:
        raise ConfigError(f"empty center interval [{low}, {high}]")
    if n == 1:
        return np.array([0.5 * (low + high)])
    return np.linspace(low, high, n)


@maybe_njit
def gaussian_basis(centers, inv_width2, z, out):
    for k in range(centers.shape[0]):
        d = z - centers[k]
        out[k] = np.exp(-(d * d) * inv_width2)


def basis(model: RbfModel, z: float) -> np.ndarray:
    """psi(z) for a scalar input."""
    out = np.empty(model.n_centers)
    gaussian_basis(model.centers, 1.0 / (model.width * model.width), float(z), out)
    return out


def predict(model: RbfModel, z: np.ndarray) -> np.ndarray:
    """W^T psi evaluated per output axis (z holds one scalar input per axis)."""
    zv = np.atleast_1d(np.asarray(z, dtype=float))
    if zv.shape[0] != model.weights.shape[1]:
        raise ConfigError(
            f"expected {model.weights.shape[1]} inputs, got {zv.shape[0]}"
        )
    out = np.empty(zv.shape[0])
    for ax in range(zv.shape[0]):
        out[ax] = model.weights[:, ax] @ basis(model, zv[ax])
    return out


def adapt(
    model: RbfModel, basis_values: np.ndarray, modulation: np.ndarray, dt: float
) -> RbfModel:
    """One explicit-Euler step of the leaky gradient law; returns a new model.

    ``basis_values`` is psi per axis, shape (L,) shared across axes or
    (L, n_out); ``modulation`` is the scalar drive per axis, shape (n_out,).
    """
    if dt <= 0.0:
        raise ConfigError(f"step size must be positive, got {dt}")
    mod = np.atleast_1d(np.asarray(modulation, dtype=float))
    psi = np.asarray(basis_values, dtype=float)
    if psi.ndim == 1:
        psi = np.repeat(psi[:, None], mod.shape[0], axis=1)
    if psi.shape != (model.n_centers, mod.shape[0]):
        raise ConfigError(f"basis values have shape {psi.shape}")
    drive = psi * mod[None, :]
    new_w = model.weights + dt * model.gain * (drive - model.leakage * model.weights)
    return replace(model, weights=new_w)


def weight_bound(model: RbfModel, modulation_sup: float) -> float:
    """Asymptotic per-weight magnitude bound sup|psi*mod| / leakage.

    Along the adaptation law, |W_k| can only shrink once it exceeds this
    value because |psi_k| <= 1.
    """
    if modulation_sup < 0.0:
        raise ConfigError("modulation bound must be non-negative")
    return modulation_sup / model.leakage
