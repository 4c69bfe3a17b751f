"""Matrix kernel for SO(3): skew maps, projections, exponentials.

Conventions: rotations act on column vectors, hat(v) @ w == cross(v, w),
and all norms are Frobenius unless said otherwise.
"""
from __future__ import annotations

import numpy as np

EPS = 1e-6  # switch to series coefficients below this angle
DEFECT_TOL = 1e-9  # on-manifold certification threshold

I3 = np.eye(3)


def hat(v):
    """Skew matrix of v, fixed so that hat(v) @ w = v x w."""
    v = np.asarray(v, dtype=float)
    return np.array([
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ])


def vee(M, tol=DEFECT_TOL):
    """Inverse of hat. Rejects matrices that are not skew within tol."""
    M = np.asarray(M, dtype=float)
    sym = 0.5 * (M + M.T)
    if np.linalg.norm(sym) > tol:
        raise ValueError(
            f"vee: symmetric part has norm {np.linalg.norm(sym):.3e}, "
            f"exceeds tolerance {tol:.1e}"
        )
    return np.array([M[2, 1], M[0, 2], M[1, 0]])


def antisym_project(M):
    """Antisymmetric part (M - M^T) / 2."""
    M = np.asarray(M, dtype=float)
    return 0.5 * (M - M.T)


def exp_skew(v):
    """Rotation exp(hat(v)) by the Rodrigues formula.

    For angles below EPS the sin(t)/t and (1-cos t)/t^2 coefficients are
    replaced by their first series terms so the formula has no 0/0.
    """
    v = np.asarray(v, dtype=float)
    K = hat(v)
    t2 = float(v @ v)
    t = np.sqrt(t2)
    if t < EPS:
        a = 1.0 - t2 / 6.0
        b = 0.5 - t2 / 24.0
    else:
        a = np.sin(t) / t
        b = (1.0 - np.cos(t)) / t2
    return I3 + a * K + b * (K @ K)


def exp_skew_taylor(v, order):
    """Truncated series sum_{j<=order} hat(v)^j / j!."""
    if not 1 <= order <= 10:
        raise ValueError(f"order must be in [1, 10], got {order}")
    K = hat(v)
    out = I3.copy()
    term = I3.copy()
    for j in range(1, order + 1):
        term = term @ K / j
        out = out + term
    return out


def orthogonality_defect(M):
    """Frobenius distance of M^T M from the identity; 0 iff M orthogonal."""
    M = np.asarray(M, dtype=float)
    return float(np.linalg.norm(M.T @ M - I3))


def project_to_so3(M):
    """Nearest rotation to M in Frobenius norm (orthogonal polar factor).

    Rejects singular input and input with non-positive determinant: the
    polar factor of those is not a rotation.  Meant for repairing
    near-rotations, never inside the observer loop.
    """
    M = np.asarray(M, dtype=float)
    U, s, Vt = np.linalg.svd(M)
    if s[-1] <= 1e-12 * max(1.0, s[0]):
        raise ValueError("project_to_so3: singular matrix has no polar factor")
    R = U @ Vt
    if np.linalg.det(R) < 0.0:
        raise ValueError(
            "project_to_so3: determinant is negative, nearest orthogonal "
            "matrix is a reflection"
        )
    return R


def check_rotation(M, tol=DEFECT_TOL):
    """Return M after verifying it sits on SO(3) within tol."""
    M = np.asarray(M, dtype=float)
    d = orthogonality_defect(M)
    if d > tol:
        raise ValueError(f"matrix is off-manifold: defect {d:.3e} > {tol:.1e}")
    if np.linalg.det(M) <= 0.0:
        raise ValueError("matrix has non-positive determinant")
    return M


def random_rotation(rng):
    """Haar-uniform rotation from a random unit quaternion."""
    q = rng.standard_normal(4)
    q = q / np.linalg.norm(q)
    w, x, y, z = q
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])
