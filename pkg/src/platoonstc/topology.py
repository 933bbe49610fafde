"""Directed interaction topology of the follower fleet.

Followers are numbered 0..n-1.  ``adjacency[i, j]`` is the (possibly signed)
weight with which follower i listens to follower j; ``pinning[i]`` is the
weight of the direct link from the leader to follower i.  Weights are
restricted to {-1, 0, +1}: +1 cooperative, -1 antagonistic, 0 no link.

The grounded matrix H = L + diag(|b|) decides whether leader information can
reach every follower.  With cooperative weights, every eigenvalue of H has a
positive real part exactly when each follower is reachable from the leader
along directed links.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, NumericalError

MAX_FLEET = 16


@dataclass(frozen=True)
class Topology:
    """Validated adjacency/pinning pair for the follower graph."""

    adjacency: np.ndarray
    pinning: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=float)
        b = np.asarray(self.pinning, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ConfigError(f"adjacency must be square, got shape {a.shape}")
        n = a.shape[0]
        if n == 0 or n > MAX_FLEET:
            raise ConfigError(f"follower count must be in 1..{MAX_FLEET}, got {n}")
        if b.shape != (n,):
            raise ConfigError(
                f"pinning length {b.shape} does not match adjacency size {n}"
            )
        if np.any(np.diag(a) != 0):
            raise ConfigError("adjacency diagonal must be zero (no self loops)")
        for name, arr in (("adjacency", a), ("pinning", b)):
            if not np.all(np.isin(arr, (-1.0, 0.0, 1.0))):
                raise ConfigError(f"{name} entries must be -1, 0 or +1")
        object.__setattr__(self, "adjacency", a)
        object.__setattr__(self, "pinning", b)

    @property
    def n_followers(self) -> int:
        return self.adjacency.shape[0]


@dataclass(frozen=True)
class GraphMatrices:
    """Degree, Laplacian and grounded (leader-augmented) Laplacian."""

    degree: np.ndarray
    laplacian: np.ndarray
    grounded: np.ndarray


def predecessor_chain(n_followers: int) -> Topology:
    """Chain topology: follower i listens to follower i-1, follower 0 to the leader."""
    a = np.zeros((n_followers, n_followers))
    for i in range(1, n_followers):
        a[i, i - 1] = 1.0
    b = np.zeros(n_followers)
    b[0] = 1.0
    return Topology(adjacency=a, pinning=b)


def build_matrices(topology: Topology) -> GraphMatrices:
    """Assemble D = diag(sum_j |a_ij|), L = D - A and H = L + diag(|b|)."""
    a = topology.adjacency
    d = np.diag(np.abs(a).sum(axis=1))
    lap = d - a
    grounded = lap + np.diag(np.abs(topology.pinning))
    return GraphMatrices(degree=d, laplacian=lap, grounded=grounded)


def spectral_check(matrices: GraphMatrices) -> float:
    """Smallest real part over the eigenvalues of the grounded Laplacian H.

    A strictly positive return value certifies that leader information reaches
    every follower (cooperative weights assumed).
    """
    h = matrices.grounded
    try:
        eigenvalues = np.linalg.eigvals(h)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            f"eigenvalue iteration failed for grounded Laplacian:\n{h!r}"
        ) from exc
    return float(eigenvalues.real.min())


def bipartite_error(
    outputs: np.ndarray, leader_output: np.ndarray, topology: Topology
) -> np.ndarray:
    """Signed neighbourhood disagreement of each follower.

    For follower i with output x_i,

        e_i = sum_j |a_ij| (x_i - sgn(a_ij) x_j) + |b_i| (x_i - sgn(b_i) x_0)

    so antagonistic links (-1) measure the distance to the *negated* neighbour
    output.  ``outputs`` has one row per follower; ``leader_output`` is x_0.
    """
    x = np.atleast_2d(np.asarray(outputs, dtype=float))
    x0 = np.asarray(leader_output, dtype=float)
    a = topology.adjacency
    b = topology.pinning
    n = topology.n_followers
    if x.shape[0] != n:
        raise ConfigError(f"expected {n} follower outputs, got {x.shape[0]}")
    err = np.zeros_like(x)
    for i in range(n):
        for j in range(n):
            if a[i, j] != 0.0:
                err[i] += abs(a[i, j]) * (x[i] - np.sign(a[i, j]) * x[j])
        if b[i] != 0.0:
            err[i] += abs(b[i]) * (x[i] - np.sign(b[i]) * x0)
    return err
