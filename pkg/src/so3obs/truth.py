"""Ground-truth kinematics, measurement synthesis, and replay files.

Truth follows dR/dt = R hat(Omega).  Propagation multiplies exponentials
so every sample is a rotation by construction; measurements sample the
truth at uniform epochs and add a constant rate bias, optionally with a
deterministic sinusoidal disturbance on both channels.

Replay files are plain text, one epoch per row:

    time, R11, R12, R13, R21, ..., R33, wx, wy, wz

comma-separated, row-major rotation entries, '#' starts a comment.  The
harness emits fixtures in the same format.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import so3
from .so3 import exp_skew, orthogonality_defect, project_to_so3

# replay rows above this defect are corrupt beyond repair
REPAIR_LIMIT = 1e-2


@dataclass
class TruthTrajectory:
    """Uniformly sampled true attitude and body rate."""

    times: np.ndarray      # (n,)
    rotations: np.ndarray  # (n, 3, 3)
    omega: np.ndarray      # (n, 3)

    @property
    def spacing(self) -> float:
        return float(self.times[1] - self.times[0])


@dataclass
class MeasurementStream:
    """Per-epoch attitude and rate measurements at uniform spacing dt.

    bias is the generation parameter (the constant offset added to the
    rates), kept for error bookkeeping; a replay stream stores zeros.
    """

    dt: float
    rotations: np.ndarray  # (m, 3, 3)
    rates: np.ndarray      # (m, 3)
    bias: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __len__(self) -> int:
        return len(self.rates)

    @property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(len(self.rates))


@dataclass
class NoiseSpec:
    """Sinusoidal disturbance amp * sin(2 pi f t) * direction on both channels."""

    amplitude: float = 0.1
    frequency_hz: float = 159.0
    direction: np.ndarray = field(default_factory=lambda: np.ones(3))

    def __post_init__(self):
        self.direction = np.asarray(self.direction, dtype=float)
        if self.amplitude < 0.0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if self.frequency_hz <= 0.0:
            raise ValueError(f"frequency must be positive, got {self.frequency_hz}")


def propagate_truth(R0, omega, h: float, T: float) -> TruthTrajectory:
    """Propagate dR/dt = R hat(Omega) from R0 over [0, T] at spacing h.

    omega is either a constant 3-vector, integrated in closed form as
    R(t) = R0 exp(hat(t omega)), or a callable t -> Vec3, stepped with a
    Simpson-weighted exponential increment per step.  Either way each
    sample is a product of exponentials, hence on-manifold.
    """
    if h <= 0.0:
        raise ValueError(f"spacing must be positive, got {h}")
    R0 = so3.check_rotation(R0)
    n = int(np.floor(T / h + 1e-9)) + 1
    times = h * np.arange(n)
    rotations = np.empty((n, 3, 3))
    if callable(omega):
        om = np.array([np.asarray(omega(t), dtype=float) for t in times])
        rotations[0] = R0
        for k in range(n - 1):
            t = times[k]
            u = (h / 6.0) * (np.asarray(omega(t), dtype=float)
                             + 4.0 * np.asarray(omega(t + 0.5 * h), dtype=float)
                             + np.asarray(omega(t + h), dtype=float))
            rotations[k + 1] = rotations[k] @ exp_skew(u)
    else:
        w = np.asarray(omega, dtype=float)
        om = np.tile(w, (n, 1))
        for k in range(n):
            rotations[k] = R0 @ exp_skew(times[k] * w)
    return TruthTrajectory(times=times, rotations=rotations, omega=om)


def sample_measurements(traj: TruthTrajectory, b, dt: float) -> MeasurementStream:
    """Sample the truth every dt seconds; rates carry the constant bias b."""
    b = np.asarray(b, dtype=float)
    stride = dt / traj.spacing
    if abs(stride - round(stride)) > 1e-9:
        raise ValueError(
            f"dt = {dt} is not an integer multiple of the trajectory "
            f"spacing {traj.spacing}"
        )
    stride = int(round(stride))
    return MeasurementStream(
        dt=dt,
        rotations=traj.rotations[::stride].copy(),
        rates=traj.omega[::stride] + b,
        bias=b.copy(),
    )


def apply_noise(stream: MeasurementStream, spec: NoiseSpec) -> MeasurementStream:
    """Disturbed copy of the stream.

    Epoch k gets v_k = amp * sin(2 pi f k dt) * direction applied as a
    right-multiplied exp_skew(v_k) on the attitude and added to the rate.
    Sampled exactly as the formula dictates: a frequency far above the
    epoch rate aliases, which is part of what the disturbance probes.
    """
    rotations = stream.rotations.copy()
    rates = stream.rates.copy()
    if spec.amplitude > 0.0:
        w = 2.0 * np.pi * spec.frequency_hz
        for k in range(len(rates)):
            v = spec.amplitude * np.sin(w * k * stream.dt) * spec.direction
            rotations[k] = rotations[k] @ exp_skew(v)
            rates[k] = rates[k] + v
    return MeasurementStream(dt=stream.dt, rotations=rotations, rates=rates,
                             bias=stream.bias.copy())


def save_replay(stream: MeasurementStream, path) -> None:
    """Write the stream in the replay text format (full precision)."""
    with open(path, "w") as fh:
        fh.write("# time, R11..R33 row-major, wx, wy, wz\n")
        for k in range(len(stream)):
            vals = [k * stream.dt, *stream.rotations[k].ravel(), *stream.rates[k]]
            fh.write(", ".join(f"{v:.17g}" for v in vals) + "\n")


def load_replay(path) -> MeasurementStream:
    """Parse a replay file into a uniform measurement stream.

    Timestamps may jitter; epochs are rebuilt by snapping each row to the
    nearest multiple of the median time step.  Rotations with defect up
    to 1e-2 are repaired by projection; anything worse is rejected with
    its row index, as are malformed and time-reversed rows.
    """
    times, rots, rates = [], [], []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 13:
                raise ValueError(
                    f"{path}: line {lineno}: expected 13 fields, got {len(parts)}"
                )
            try:
                vals = [float(p) for p in parts]
            except ValueError as err:
                raise ValueError(f"{path}: line {lineno}: {err}") from None
            times.append(vals[0])
            rots.append(np.array(vals[1:10]).reshape(3, 3))
            rates.append(np.array(vals[10:13]))
    if len(times) < 2:
        raise ValueError(f"{path}: need at least two epochs, got {len(times)}")
    times = np.array(times)
    if np.any(np.diff(times) <= 0.0):
        bad = int(np.argmax(np.diff(times) <= 0.0)) + 1
        raise ValueError(f"{path}: timestamps not increasing at row {bad}")

    for i, R in enumerate(rots):
        d = orthogonality_defect(R)
        if d > REPAIR_LIMIT:
            raise ValueError(
                f"{path}: row {i}: rotation defect {d:.3e} exceeds repair "
                f"limit {REPAIR_LIMIT}"
            )
        if d > so3.DEFECT_TOL:
            rots[i] = project_to_so3(R)

    dt = float(np.median(np.diff(times)))
    n = int(round(times[-1] / dt)) + 1
    rotations = np.empty((n, 3, 3))
    rates_out = np.empty((n, 3))
    for k in range(n):
        i = int(np.argmin(np.abs(times - k * dt)))
        rotations[k] = rots[i]
        rates_out[k] = rates[i]
    return MeasurementStream(dt=dt, rotations=rotations, rates=rates_out)
