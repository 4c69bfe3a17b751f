"""Attitude stabilization and path tracking built from the observer step.

Both controllers reuse the predictor-corrector structure with the roles
swapped: the plant state plays the estimate and the control target plays
the measurement.  Stabilization treats a fixed attitude p as a constant
"measurement" with zero rate; path tracking feeds a moving frame f(t)
and its induced body velocity g = f^T df/dt.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .so3 import I3, antisym_project, exp_skew, hat, vee
from .observer import Gains, ObserverState, step_discrete


@dataclass
class StabilizerState:
    """Controller memory: bias-like integrator, target, last innovation.

    omega_prev is the innovation of the previous epoch; the update law
    consumes it before the current innovation exists, so it is carried
    here and starts at zero.
    """

    bhat: np.ndarray
    target: np.ndarray
    omega_prev: np.ndarray = field(default_factory=lambda: np.zeros(3))


@dataclass
class PathSpec:
    """Desired attitude path f and its induced body velocity g = f^T df/dt."""

    f: Callable[[float], np.ndarray]
    g: Callable[[float], np.ndarray] | None = None

    def velocity(self, t: float, dt_fd: float) -> np.ndarray:
        if self.g is not None:
            return np.asarray(self.g(t), dtype=float)
        return path_velocity(self.f, t, dt_fd)


def stabilizing_input(st: StabilizerState, Ry_k, g: Gains, dt: float):
    """One epoch of the stabilizing controller.

    Given the measured plant attitude Ry_k, computes in order

        bhat_k  = bhat_{k-1} + bias_sign * k_b * w_{k-1} * dt
        x_d     = exp(-hat(bhat_k) * dt)
        w_k     = vee(antisym(x_d^T Ry_k^T p))
        Omega_c = x_d [I + k_p hat(w_k) dt - k_e (x_d^T Ry_k^T Ry_k x_d - I) dt]

    and returns (Omega_c, new state).  Applying the plant update
    R_{k+1} = R_k Omega_c makes the closed loop execute exactly one
    observer epoch whose "truth" is the constant pair (p, 0), so the
    plant inherits the observer's convergence toward p.
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    Ry_k = np.asarray(Ry_k, dtype=float)
    bhat = st.bhat + g.bias_sign * g.k_b * dt * st.omega_prev
    x_d = exp_skew(-bhat * dt)
    w = vee(antisym_project(x_d.T @ Ry_k.T @ st.target))
    bracket = I3 + g.k_p * dt * hat(w)
    if g.k_e != 0.0:
        bracket = bracket - g.k_e * dt * (x_d.T @ Ry_k.T @ Ry_k @ x_d - I3)
    Omega_c = x_d @ bracket
    return Omega_c, StabilizerState(bhat=bhat, target=st.target, omega_prev=w)


def path_velocity(f, t: float, dt_fd: float) -> np.ndarray:
    """Body velocity f(t)^T df/dt with df/dt by central differences."""
    if dt_fd <= 0.0:
        raise ValueError(f"dt_fd must be positive, got {dt_fd}")
    fdot = (np.asarray(f(t + dt_fd), dtype=float)
            - np.asarray(f(t - dt_fd), dtype=float)) / (2.0 * dt_fd)
    return np.asarray(f(t), dtype=float).T @ fdot


def path_tracking_step(st: ObserverState, f_k, g_k, gains: Gains,
                       dt: float) -> ObserverState:
    """One observer epoch tracking the path sample (f_k, g_k).

    f_k acts as the attitude measurement and vee(g_k) as the rate
    measurement; g_k must be skew within tolerance (vee enforces this).
    """
    rate = vee(np.asarray(g_k, dtype=float))
    return step_discrete(st, np.asarray(f_k, dtype=float), rate, gains, dt)
