"""Constraint-potential vector fields and Euclidean one-step integrators.

A dynamical system restricted to a constraint set V^-1(0) can be integrated
in the ambient space by stepping the modified field X - grad V instead of X:
the potential term pulls drifting iterates back toward the constraint set
while leaving the dynamics on it untouched (grad V vanishes there and is
orthogonal to X everywhere it matters).  This module keeps that machinery
generic over flat state vectors; the observer instance is built elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

Field = Callable[[np.ndarray], np.ndarray]


@dataclass
class FieldPair:
    """Original field X, constraint potential V and its gradient.

    All three operate on flat state vectors of one fixed dimension.
    """

    X: Field
    gradV: Field
    V: Callable[[np.ndarray], float]


@dataclass
class TangencyReport:
    max_inner: float
    tol: float
    passed: bool


def modified_field(fp: FieldPair) -> Field:
    """Map x -> X(x) - gradV(x)."""

    def field(x):
        return fp.X(x) - fp.gradV(x)

    return field


def euler_step(field: Field, x: np.ndarray, h: float) -> np.ndarray:
    """Forward Euler update x + h * field(x)."""
    if h <= 0.0:
        raise ValueError(f"step size must be positive, got {h}")
    return x + h * field(x)


def rk4_step(field: Field, x: np.ndarray, h: float) -> np.ndarray:
    """Classical fourth-order update for an autonomous field."""
    if h <= 0.0:
        raise ValueError(f"step size must be positive, got {h}")
    k1 = field(x)
    k2 = field(x + 0.5 * h * k1)
    k3 = field(x + 0.5 * h * k2)
    k4 = field(x + h * k3)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def check_tangency(fp: FieldPair, samples: Sequence[np.ndarray],
                   tol: float) -> TangencyReport:
    """Largest |<gradV(x), X(x)>| over the samples, compared against tol.

    The inner product vanishing is what lets the potential term be added
    without disturbing the constrained dynamics.
    """
    if len(samples) == 0:
        raise ValueError("check_tangency needs at least one sample")
    worst = 0.0
    for x in samples:
        inner = float(fp.gradV(x) @ fp.X(x))
        worst = max(worst, abs(inner))
    return TangencyReport(max_inner=worst, tol=tol, passed=worst < tol)


def discrete_decrease_ratio(fp: FieldPair, x: np.ndarray, h: float) -> float:
    """Measured-over-predicted one-step decrease of V under the modified field.

    Returns [V(x + h (X - gradV)(x)) - V(x)] / (-h |gradV(x)|^2), which
    tends to 1 as h -> 0.  Undefined on the constraint set, where the
    predicted decrease is zero.
    """
    g = fp.gradV(x)
    gnorm2 = float(g @ g)
    if gnorm2 <= 1e-16:  # |gradV| <= 1e-8
        raise ValueError(
            "state is on the constraint set (|gradV| <= 1e-8), "
            "decrease ratio undefined"
        )
    x_next = euler_step(modified_field(fp), x, h)
    return (fp.V(x_next) - fp.V(x)) / (-h * gnorm2)
