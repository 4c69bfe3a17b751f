"""Attitude observer on SO(3) with manifold-attracting correction.

The observer fuses an orientation measurement Ry with a biased rate
measurement Omega_y.  Its continuous form is

    dRhat/dt = Rhat * hat(Omega_y - bhat + k_p * w) - k_e * Rhat * (Rhat^T Rhat - I)
    dbhat/dt = -k_I * w
    w        = vee(antisym(Rhat^T Ry))

where the k_e term is the (negative) gradient of the orthogonality
potential, so plain Euclidean integration stays near the manifold.  The
discrete form alternates an exponential predictor with an additive
corrector at measurement epochs; `step_discrete` is one full epoch.

The remaining functions expose the analysis objects used to certify
convergence: the attitude/bias error system, the Lyapunov function, the
manifold potential, the 6x6 linearisation, a positive-definiteness
certificate for the gain choice, and the first-order discretisation
error bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .so3 import I3, antisym_project, exp_skew, exp_skew_taylor, hat, vee
from .integrators import FieldPair


@dataclass
class Gains:
    """Observer gains.

    k_p drives attitude correction, k_I the continuous bias update, k_b
    the discrete bias update (kept separate because the two appear
    independently; defaults tie them), and k_e the strength of the pull
    back to the manifold.  k_e = 0 disables manifold attraction.

    bias_sign multiplies the discrete bias increment k_b * w * dt.  The
    default -1 matches the continuous law and is the sign under which
    the discrete observer converges; +1 is kept selectable because the
    corrector is occasionally written with the opposite sign and the
    difference is worth demonstrating.
    """

    k_p: float = 1.0
    k_I: float = 0.3
    k_e: float = 1.0
    k_b: float = 0.3
    bias_sign: int = -1

    def __post_init__(self):
        if self.k_p <= 0.0:
            raise ValueError(f"k_p must be positive, got {self.k_p}")
        if self.k_I <= 0.0:
            raise ValueError(f"k_I must be positive, got {self.k_I}")
        if self.k_b <= 0.0:
            raise ValueError(f"k_b must be positive, got {self.k_b}")
        if self.k_e < 0.0:
            raise ValueError(f"k_e must be non-negative, got {self.k_e}")
        if self.bias_sign not in (-1, 1):
            raise ValueError(f"bias_sign must be +1 or -1, got {self.bias_sign}")


@dataclass
class ObserverState:
    """Estimate pair (Rhat, bhat) plus the held rate input.

    Rhat lives in the ambient 3x3 space, not certified on-manifold:
    drifting off and being pulled back is the point.  omega_held is the
    bias-corrected rate Omega_y - bhat carried between discrete epochs
    for the next predictor step.
    """

    Rhat: np.ndarray
    bhat: np.ndarray
    omega_held: np.ndarray


@dataclass
class ErrorState:
    """Attitude error Rtilde = Rhat^T R and bias error btilde = b - bhat."""

    Rtilde: np.ndarray
    btilde: np.ndarray


@dataclass
class StabilityCertificate:
    """Multiplier choice (alpha1, alpha2, alpha3) with its P and Q matrices.

    Positive definiteness of both (in the quadratic-form sense: symmetric
    parts have positive eigenvalues) certifies local exponential decay of
    the linearised error system for rate magnitudes up to Omega_max.
    """

    alpha1: float
    alpha2: float
    alpha3: float
    Omega_max: float
    P: np.ndarray
    Q: np.ndarray


@dataclass
class ConvergenceBound:
    """Constants of the first-order discretisation error bound.

    c bounds the local truncation residual over dt^2, L is a Lipschitz
    constant of the continuous right-hand side, t_star the horizon.
    """

    c: float
    L: float
    dt: float
    t_star: float

    def __post_init__(self):
        for name in ("c", "L", "dt", "t_star"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")


def initial_state(Rhat0, bhat0, Omega_y0) -> ObserverState:
    """Observer state before the first epoch; holds Omega_y0 - bhat0."""
    Rhat0 = np.asarray(Rhat0, dtype=float)
    bhat0 = np.asarray(bhat0, dtype=float)
    Omega_y0 = np.asarray(Omega_y0, dtype=float)
    return ObserverState(Rhat0.copy(), bhat0.copy(), Omega_y0 - bhat0)


def innovation(Rhat, Ry) -> np.ndarray:
    """Attitude error vector w = vee(antisym(Rhat^T Ry)).

    Zero exactly when Rhat^T Ry is symmetric: at perfect agreement and,
    degenerately, at half-turn errors.
    """
    return vee(antisym_project(np.asarray(Rhat).T @ Ry))


def _rhs(Rhat, bhat, Ry, Omega_y, g: Gains):
    w = vee(antisym_project(Rhat.T @ Ry))
    Rdot = Rhat @ hat(Omega_y - bhat + g.k_p * w)
    if g.k_e != 0.0:
        Rdot = Rdot - g.k_e * (Rhat @ (Rhat.T @ Rhat - I3))
    return Rdot, -g.k_I * w


def continuous_rhs(st: ObserverState, Ry, Omega_y, g: Gains):
    """Time derivative (dRhat/dt, dbhat/dt) of the continuous observer."""
    return _rhs(np.asarray(st.Rhat, dtype=float),
                np.asarray(st.bhat, dtype=float),
                np.asarray(Ry, dtype=float),
                np.asarray(Omega_y, dtype=float), g)


def pack_state(Rhat, bhat) -> np.ndarray:
    """Flatten (Rhat, bhat) into a 12-vector, Rhat row-major first."""
    return np.concatenate([np.asarray(Rhat, dtype=float).ravel(),
                           np.asarray(bhat, dtype=float)])


def unpack_state(x):
    """Inverse of pack_state."""
    x = np.asarray(x, dtype=float)
    return x[:9].reshape(3, 3), x[9:]


def integrate_continuous(st0: ObserverState, meas, g: Gains, h: float,
                         T: float, scheme: str = "rk4") -> list[ObserverState]:
    """Integrate the continuous observer against a measurement source.

    Args:
        st0: initial state.
        meas: callable t -> (Ry, Omega_y), evaluated at every substep
            time (the continuous observer is an analytical reference and
            sees exact-time measurements, no hold between epochs).
        g: gains.
        h: step size, s.
        T: horizon, s.
        scheme: "euler" or "rk4".

    Returns:
        floor(T/h) + 1 states including the initial one.
    """
    if h <= 0.0:
        raise ValueError(f"step size must be positive, got {h}")
    if T < h:
        raise ValueError(f"horizon {T} shorter than one step {h}")
    if scheme not in ("euler", "rk4"):
        raise ValueError(f"unknown scheme {scheme!r}, expected euler or rk4")

    def f(t, x):
        Ry, Oy = meas(t)
        Rdot, bdot = _rhs(x[:9].reshape(3, 3), x[9:], np.asarray(Ry),
                          np.asarray(Oy, dtype=float), g)
        return np.concatenate([Rdot.ravel(), bdot])

    n = int(np.floor(T / h + 1e-9))
    x = pack_state(st0.Rhat, st0.bhat)
    out = [st0]
    # divergence is reported through the explicit finiteness check below,
    # not through numpy warnings
    with np.errstate(all="ignore"):
        for i in range(n):
            t = i * h
            if scheme == "euler":
                x = x + h * f(t, x)
            else:
                k1 = f(t, x)
                k2 = f(t + 0.5 * h, x + 0.5 * h * k1)
                k3 = f(t + 0.5 * h, x + 0.5 * h * k2)
                k4 = f(t + h, x + h * k3)
                x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            if not np.all(np.isfinite(x)):
                raise RuntimeError(
                    f"continuous integration produced a non-finite state at "
                    f"step {i + 1} (t = {t + h:.6g} s)"
                )
            Rhat, bhat = x[:9].reshape(3, 3).copy(), x[9:].copy()
            _, Oy = meas(t + h)
            out.append(ObserverState(Rhat, bhat, np.asarray(Oy, dtype=float) - bhat))
    return out


def predict(st: ObserverState, dt: float, taylor_order: int | None = None) -> np.ndarray:
    """Open-loop propagation Rhat * exp(hat(omega_held) * dt).

    With taylor_order set, the exponential is replaced by its truncated
    series of that order (cheaper, slightly off-manifold).
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    v = st.omega_held * dt
    G = exp_skew(v) if taylor_order is None else exp_skew_taylor(v, taylor_order)
    return st.Rhat @ G


def correct(Rpred, bhat_prev, Ry_k, Omega_y_k, g: Gains, dt: float) -> ObserverState:
    """Measurement update at one epoch.

    Computes, in order: the innovation w_k against Ry_k, the corrected
    attitude (proportional term plus manifold pull), the bias update
    bhat + bias_sign * k_b * w_k * dt, and the held rate Omega_y_k - bhat.
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    Rpred = np.asarray(Rpred, dtype=float)
    w = innovation(Rpred, Ry_k)
    Rnew = Rpred + Rpred @ hat(g.k_p * dt * w)
    if g.k_e != 0.0:
        Rnew = Rnew - g.k_e * dt * (Rpred @ (Rpred.T @ Rpred - I3))
    bnew = np.asarray(bhat_prev, dtype=float) + g.bias_sign * g.k_b * dt * w
    return ObserverState(Rnew, bnew, np.asarray(Omega_y_k, dtype=float) - bnew)


def step_discrete(st: ObserverState, Ry_k, Omega_y_k, g: Gains, dt: float,
                  taylor_order: int | None = None) -> ObserverState:
    """One predictor-corrector epoch: predict over dt, correct with (Ry_k, Omega_y_k)."""
    Rpred = predict(st, dt, taylor_order)
    return correct(Rpred, st.bhat, Ry_k, Omega_y_k, g, dt)


def euler_mahony_step(st: ObserverState, Ry_k, Omega_y_k, g: Gains, dt: float,
                      with_ke: bool = False) -> ObserverState:
    """Single multiplicative Euler update of the classical filter.

    Baseline for comparison: Rhat <- Rhat (I + hat(rate + k_p w) dt), with
    the manifold term - k_e (Rhat^T Rhat - I) dt added inside the bracket
    when with_ke is set.  Bias integrates -k_I * w * dt.  No exponential,
    so nothing keeps Rhat near the manifold at large dt.
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    Rhat = np.asarray(st.Rhat, dtype=float)
    Omega_y_k = np.asarray(Omega_y_k, dtype=float)
    w = innovation(Rhat, Ry_k)
    B = hat(Omega_y_k - st.bhat + g.k_p * w) * dt
    if with_ke:
        B = B - g.k_e * dt * (Rhat.T @ Rhat - I3)
    Rnew = Rhat @ (I3 + B)
    bnew = st.bhat - g.k_I * dt * w
    return ObserverState(Rnew, bnew, Omega_y_k - bnew)


def error_state(st: ObserverState, R, b) -> ErrorState:
    """Error coordinates (Rtilde, btilde) = (Rhat^T R, b - bhat)."""
    return ErrorState(np.asarray(st.Rhat).T @ R,
                      np.asarray(b, dtype=float) - st.bhat)


def error_rhs(e: ErrorState, Omega, g: Gains):
    """Autonomous error dynamics for exact measurements at rate Omega.

    d(Rtilde)/dt = [Rtilde, hat(Omega)] - k_p hat(w) Rtilde
                   - hat(btilde) Rtilde - k_e (Rtilde Rtilde^T - I) Rtilde
    d(btilde)/dt = k_I * w,       w = vee(antisym(Rtilde))
    """
    Rt = np.asarray(e.Rtilde, dtype=float)
    bt = np.asarray(e.btilde, dtype=float)
    W = hat(Omega)
    w = vee(antisym_project(Rt))
    Rtdot = (Rt @ W - W @ Rt) - g.k_p * (hat(w) @ Rt) - hat(bt) @ Rt
    if g.k_e != 0.0:
        Rtdot = Rtdot - g.k_e * ((Rt @ Rt.T - I3) @ Rt)
    return Rtdot, g.k_I * w


def lyapunov_V(e: ErrorState, k_I: float) -> float:
    """Joint error energy 1/4 ||I - Rtilde||_F^2 + ||btilde||^2 / (2 k_I)."""
    if k_I <= 0.0:
        raise ValueError(f"k_I must be positive, got {k_I}")
    dR = I3 - np.asarray(e.Rtilde, dtype=float)
    bt = np.asarray(e.btilde, dtype=float)
    return 0.25 * float(np.sum(dR * dR)) + float(bt @ bt) / (2.0 * k_I)


def potential_V1(Rhat) -> float:
    """Squared orthogonality defect ||Rhat^T Rhat - I||_F^2."""
    Rhat = np.asarray(Rhat, dtype=float)
    S = Rhat.T @ Rhat - I3
    return float(np.sum(S * S))


def linearized_matrices(Omega, g: Gains):
    """Linearised error dynamics about (Rtilde, btilde) = (I, 0).

    Splitting Rtilde = I + s + hat(a) into symmetric s and attitude a,
    with y = -btilde, the (a, y) part is the 6x6 block matrix

        A = [[-k_p I - hat(Omega), I], [-k_I I, 0]]

    and the symmetric part decays independently through the returned map
    s -> [s, hat(Omega)] - 2 k_e s.
    """
    W = hat(Omega)
    A = np.zeros((6, 6))
    A[:3, :3] = -g.k_p * I3 - W
    A[:3, 3:] = I3
    A[3:, :3] = -g.k_I * I3

    def s_decay(s):
        s = np.asarray(s, dtype=float)
        return (s @ W - W @ s) - 2.0 * g.k_e * s

    return A, s_decay


def _min_sym_eig(M) -> float:
    return float(np.min(np.linalg.eigvalsh(0.5 * (M + M.T))))


def build_certificate(g: Gains, Omega_max: float, alpha2: float) -> StabilityCertificate:
    """Pick multipliers certifying decay of the linearised error system.

    alpha1 is set to twice its lower bound alpha2 (Omega_max^2 + k_I) / k_p
    and alpha3 to the midpoint of its admissible interval; the assembled

        P = [[a1 I, a2 I], [-a2 I, a3 I]],
        Q = [[k_p a1 - a2 k_I, a2 Omega_max], [-a2 Omega_max, a2]]

    are then checked positive definite (symmetric-part eigenvalues).

    Raises ValueError when alpha2 <= 0 or the alpha3 interval is empty,
    which happens exactly at Omega_max = 0.
    """
    if alpha2 <= 0.0:
        raise ValueError(f"alpha2 must be positive, got {alpha2}")
    if Omega_max < 0.0:
        raise ValueError(f"Omega_max must be non-negative, got {Omega_max}")
    alpha1 = 2.0 * alpha2 * (Omega_max ** 2 + g.k_I) / g.k_p
    lo = (alpha1 + g.k_p * alpha2) / g.k_I
    width = Omega_max * alpha2 / g.k_I
    if width <= 0.0:
        raise ValueError(
            "admissible alpha3 interval is empty (requires Omega_max > 0)"
        )
    alpha3 = lo + 0.5 * width

    P = np.zeros((6, 6))
    P[:3, :3] = alpha1 * I3
    P[:3, 3:] = alpha2 * I3
    P[3:, :3] = -alpha2 * I3
    P[3:, 3:] = alpha3 * I3
    Q = np.array([
        [g.k_p * alpha1 - alpha2 * g.k_I, alpha2 * Omega_max],
        [-alpha2 * Omega_max, alpha2],
    ])
    if _min_sym_eig(P) <= 0.0 or _min_sym_eig(Q) <= 0.0:
        raise ValueError("certificate matrices are not positive definite")
    return StabilityCertificate(alpha1, alpha2, alpha3, Omega_max, P, Q)


def error_bound(cb: ConvergenceBound, k: int) -> float:
    """Accumulated first-order bound (c/L) dt [(1 + L dt)^k - 1] at epoch k."""
    if k < 0:
        raise ValueError(f"epoch index must be non-negative, got {k}")
    return (cb.c / cb.L) * cb.dt * ((1.0 + cb.L * cb.dt) ** k - 1.0)


def estimate_bound_constants(states: Sequence[np.ndarray], dt: float,
                             rhs: Callable[[float, np.ndarray], np.ndarray]):
    """Empirical (c, L) for error_bound from a sampled continuous run.

    c is the largest second difference of the flat state over dt^2 (a
    curvature bound on the true solution); L the largest sampled ratio
    ||f(t, x) - f(t, y)|| / ||x - y|| over neighbouring state pairs.
    """
    xs = [np.asarray(x, dtype=float) for x in states]
    if len(xs) < 3:
        raise ValueError("need at least three samples for a second difference")
    c = 0.0
    for i in range(1, len(xs) - 1):
        c = max(c, float(np.linalg.norm(xs[i + 1] - 2.0 * xs[i] + xs[i - 1])) / dt ** 2)
    L = 0.0
    for i in range(len(xs) - 1):
        t = i * dt
        d = float(np.linalg.norm(xs[i + 1] - xs[i]))
        if d < 1e-12:
            continue
        L = max(L, float(np.linalg.norm(rhs(t, xs[i + 1]) - rhs(t, xs[i]))) / d)
    if c <= 0.0 or L <= 0.0:
        raise ValueError("trajectory is stationary, constants are degenerate")
    return c, L


def observer_field_pair(Ry, Omega_y, g: Gains) -> FieldPair:
    """Observer as a constraint-potential field pair on flat 12-vectors.

    X is the observer field without the manifold term, V the scaled
    squared defect (k_e/4) ||Rhat^T Rhat - I||_F^2, and gradV its ambient
    gradient k_e Rhat (Rhat^T Rhat - I); X - gradV reproduces the full
    right-hand side.  The measurement pair is held fixed, making the
    field autonomous.
    """
    Ry = np.asarray(Ry, dtype=float)
    Omega_y = np.asarray(Omega_y, dtype=float)

    def X(x):
        Rhat, bhat = x[:9].reshape(3, 3), x[9:]
        w = vee(antisym_project(Rhat.T @ Ry))
        Rdot = Rhat @ hat(Omega_y - bhat + g.k_p * w)
        return np.concatenate([Rdot.ravel(), -g.k_I * w])

    def gradV(x):
        Rhat = x[:9].reshape(3, 3)
        G = g.k_e * (Rhat @ (Rhat.T @ Rhat - I3))
        return np.concatenate([G.ravel(), np.zeros(3)])

    def V(x):
        Rhat = x[:9].reshape(3, 3)
        S = Rhat.T @ Rhat - I3
        return 0.25 * g.k_e * float(np.sum(S * S))

    return FieldPair(X=X, gradV=gradV, V=V)
