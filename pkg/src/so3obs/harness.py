"""Scenario runner: deterministic experiments, metrics, CSV/JSON artifacts.

Each scenario produces one or more labeled series of per-epoch rows
(truth, estimate, bias estimate, innovation, and derived metrics) that
the plotting component consumes as CSV plus a summary.json manifest.
Determinism is part of the contract: the same config and seed must
reproduce the output files byte for byte.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .observer import (Gains, ObserverState, euler_mahony_step, initial_state,
                       innovation, integrate_continuous, step_discrete)
from .control import PathSpec, StabilizerState, stabilizing_input
from .so3 import I3, exp_skew, orthogonality_defect, random_rotation, vee
from .truth import (MeasurementStream, NoiseSpec, apply_noise, load_replay,
                    propagate_truth, sample_measurements)

SCENARIOS = (
    "constant_omega",
    "gain_sweep",
    "manifold_convergence",
    "noise",
    "euler_comparison",
    "dt_sweep",
    "taylor_predictor",
    "stabilization",
    "path_tracking",
    "replay",
)

SCENARIO_NOTES = {
    "constant_omega": "single run at the default constant body rate",
    "gain_sweep": "one series per swept gain value",
    "manifold_convergence": "estimate norm with and without the manifold term",
    "noise": "sinusoidal disturbance on both measurement channels",
    "euler_comparison": "proposed observer against the multiplicative Euler baseline",
    "dt_sweep": "one series per step size",
    "taylor_predictor": "exact-exponential predictor against the truncated one",
    "stabilization": "closed-loop attitude stabilization to a constant target",
    "path_tracking": "observer tracking a moving reference attitude",
    "replay": "observer driven by a recorded measurement file",
}

# columns of one per-epoch row, in emission order
COLUMNS = (
    ["k", "t"]
    + [f"R{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
    + [f"Rhat{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
    + ["bhat1", "bhat2", "bhat3"]
    + ["omega1", "omega2", "omega3"]
    + ["frobenius_error", "defect", "bias_error"]
)

_COL_INDEX = {name: i for i, name in enumerate(COLUMNS)}

# scenario-specific defaults, applied when the config does not set the
# field explicitly; everything else falls back to the dataclass defaults
_SCENARIO_DEFAULTS: dict[str, dict] = {
    "gain_sweep": {"sweep": {"param": "k_p", "values": [0.1, 0.5, 1.0]}},
    "dt_sweep": {"sweep": {"param": "dt", "values": [0.5, 0.25, 0.1]}},
    "noise": {"noise": {"amplitude": 0.1, "frequency_hz": 159.0}},
    # the truncated predictor needs a small enough step for its extra
    # truncation error to stay comparable to the exact predictor; see
    # the step-size study in the repo notes
    "taylor_predictor": {"dt": 0.05},
    "stabilization": {"dt": 0.1, "T": 30.0, "bias": [0.0, 0.0, 0.0]},
}


@dataclass
class ScenarioConfig:
    """Full description of one experiment run."""

    scenario: str
    dt: float = 0.5
    T: float = 100.0
    gains: Gains = field(default_factory=Gains)
    bias: np.ndarray = field(default_factory=lambda: np.array([0.1, 0.1, 0.1]))
    omega: np.ndarray = field(default_factory=lambda: np.ones(3))
    R0: str | np.ndarray = "random"
    Rhat0: str | np.ndarray = "identity"
    noise: NoiseSpec | None = None
    sweep: dict | None = None
    seed: int = 0
    replay_path: str | None = None
    taylor_order: int = 2
    target: str | np.ndarray = "identity"
    euler_with_ke: bool = True

    def __post_init__(self):
        self.bias = np.asarray(self.bias, dtype=float)
        self.omega = np.asarray(self.omega, dtype=float)
        self.validate()

    def validate(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ValueError(
                f"scenario: unknown name {self.scenario!r}; expected one of "
                + ", ".join(SCENARIOS)
            )
        if not self.dt > 0.0:
            raise ValueError(f"dt: must be positive, got {self.dt}")
        if self.T < self.dt:
            raise ValueError(f"T: must be at least dt = {self.dt}, got {self.T}")
        if self.bias.shape != (3,):
            raise ValueError(f"bias: expected 3 components, got shape {self.bias.shape}")
        if self.omega.shape != (3,):
            raise ValueError(f"omega: expected 3 components, got shape {self.omega.shape}")
        if self.taylor_order < 1:
            raise ValueError(f"taylor_order: must be >= 1, got {self.taylor_order}")
        if self.scenario in ("gain_sweep", "dt_sweep"):
            if not self.sweep:
                raise ValueError(f"sweep: required for scenario {self.scenario}")
            param = self.sweep.get("param")
            values = self.sweep.get("values")
            if not values:
                raise ValueError("sweep.values: must be a nonempty list")
            if self.scenario == "dt_sweep" and param != "dt":
                raise ValueError(f"sweep.param: dt_sweep sweeps dt, got {param!r}")
            if self.scenario == "gain_sweep" and param not in ("k_p", "k_I", "k_e", "k_b"):
                raise ValueError(
                    f"sweep.param: expected one of k_p, k_I, k_e, k_b, got {param!r}"
                )
            if any(not v > 0.0 for v in values):
                raise ValueError(f"sweep.values: must all be positive, got {values}")
        if self.scenario == "replay" and not self.replay_path:
            raise ValueError("replay_path: required for scenario replay")

    def initial_rotations(self):
        """Resolve (R0, Rhat0) using the seeded generator for 'random'."""
        rng = np.random.default_rng(self.seed)
        R0 = random_rotation(rng) if isinstance(self.R0, str) else np.asarray(self.R0, dtype=float)
        Rhat0 = I3.copy() if isinstance(self.Rhat0, str) else np.asarray(self.Rhat0, dtype=float)
        return R0, Rhat0

    def target_rotation(self):
        return I3.copy() if isinstance(self.target, str) else np.asarray(self.target, dtype=float)

    def echo(self) -> dict:
        """JSON-serializable snapshot of the resolved configuration."""
        g = self.gains
        out = {
            "scenario": self.scenario,
            "dt": self.dt,
            "T": self.T,
            "gains": {"k_p": g.k_p, "k_I": g.k_I, "k_e": g.k_e, "k_b": g.k_b,
                      "bias_sign": g.bias_sign},
            "bias": list(self.bias),
            "omega": list(self.omega),
            "R0": self.R0 if isinstance(self.R0, str) else np.asarray(self.R0).ravel().tolist(),
            "Rhat0": self.Rhat0 if isinstance(self.Rhat0, str) else np.asarray(self.Rhat0).ravel().tolist(),
            "seed": self.seed,
            "taylor_order": self.taylor_order,
            "euler_with_ke": self.euler_with_ke,
        }
        if self.noise is not None:
            out["noise"] = {"amplitude": self.noise.amplitude,
                            "frequency_hz": self.noise.frequency_hz,
                            "direction": list(self.noise.direction)}
        if self.sweep is not None:
            out["sweep"] = {"param": self.sweep["param"],
                            "values": list(self.sweep["values"])}
        if self.replay_path is not None:
            out["replay_path"] = str(self.replay_path)
        if self.scenario in ("stabilization",):
            out["target"] = (self.target if isinstance(self.target, str)
                             else np.asarray(self.target).ravel().tolist())
        return out


def config_from_dict(raw: dict) -> ScenarioConfig:
    """Build a validated config from parsed JSON, applying scenario defaults."""
    if "scenario" not in raw:
        raise ValueError("scenario: required field is missing")
    known = {f for f in ScenarioConfig.__dataclass_fields__}
    for key in raw:
        if key not in known:
            raise ValueError(f"{key}: unknown config field")
    merged = dict(_SCENARIO_DEFAULTS.get(raw["scenario"], {}))
    merged.update(raw)
    if isinstance(merged.get("gains"), dict):
        try:
            merged["gains"] = Gains(**merged["gains"])
        except TypeError as err:
            raise ValueError(f"gains: {err}") from None
    if isinstance(merged.get("noise"), dict):
        merged["noise"] = NoiseSpec(**merged["noise"])
    return ScenarioConfig(**merged)


@dataclass
class TrajectoryRecord:
    """One labeled series: an (n, len(COLUMNS)) array of per-epoch rows."""

    label: str
    params: dict
    data: np.ndarray

    def column(self, name: str) -> np.ndarray:
        if name not in _COL_INDEX:
            raise KeyError(f"unknown column {name!r}")
        return self.data[:, _COL_INDEX[name]]

    def __len__(self) -> int:
        return len(self.data)


@dataclass
class EnvelopePoint:
    """A strict local maximum of the error series."""

    t: float
    peak_error: float


@dataclass
class OrderStudyRow:
    """One line of the step-size convergence table."""

    dt: float
    deviation: float
    ratio: float | None  # previous deviation / this one; None on the first row


def _row(k, t, R, st: ObserverState, omega_k, bias):
    err = np.linalg.norm(st.Rhat - R)
    return np.concatenate((
        [float(k), t], np.asarray(R, dtype=float).ravel(), st.Rhat.ravel(),
        st.bhat, omega_k,
        [err, orthogonality_defect(st.Rhat), np.linalg.norm(st.bhat - bias)],
    ))


def _run_discrete(ms: MeasurementStream, truth_rot, cfg: ScenarioConfig,
                  g: Gains, label: str, params: dict,
                  stepper: str = "proposed", taylor_order: int | None = None,
                  tolerate_blowup: bool = False) -> TrajectoryRecord:
    """Drive one discrete observer over a measurement stream.

    truth_rot supplies the reference attitude per epoch (the true one
    when known, the measured one for replay).  A non-finite state aborts
    with the epoch index unless the series is expected to blow up
    (the Euler baseline at coarse steps), in which case rows record the
    non-finite values as they are.
    """
    _, Rhat0 = cfg.initial_rotations()
    n = len(ms)
    st = initial_state(Rhat0, np.zeros(3), ms.rates[0])
    data = np.empty((n, len(COLUMNS)))
    w0 = innovation(Rhat0, ms.rotations[0])
    data[0] = _row(0, 0.0, truth_rot[0], st, w0, ms.bias)
    with np.errstate(all="ignore"):
        for k in range(1, n):
            if stepper == "proposed":
                st = step_discrete(st, ms.rotations[k], ms.rates[k], g, ms.dt,
                                   taylor_order=taylor_order)
            else:
                st = euler_mahony_step(st, ms.rotations[k], ms.rates[k], g,
                                       ms.dt, with_ke=cfg.euler_with_ke)
            if not tolerate_blowup and not np.all(np.isfinite(st.Rhat)):
                raise RuntimeError(
                    f"series {label!r}: non-finite state at epoch {k} "
                    f"(t = {k * ms.dt:.6g} s)"
                )
            w = innovation(st.Rhat, ms.rotations[k]) if np.all(np.isfinite(st.Rhat)) \
                else np.full(3, np.nan)
            data[k] = _row(k, k * ms.dt, truth_rot[k], st, w, ms.bias)
    return TrajectoryRecord(label=label, params=params, data=data)


def _measurements(cfg: ScenarioConfig, dt: float | None = None,
                  g: Gains | None = None):
    """Truth plus sampled measurements for the configured constant rate."""
    dt = cfg.dt if dt is None else dt
    R0, _ = cfg.initial_rotations()
    traj = propagate_truth(R0, cfg.omega, dt, cfg.T)
    ms = sample_measurements(traj, cfg.bias, dt)
    return traj, ms


def _scenario_constant_omega(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    traj, ms = _measurements(cfg)
    return [_run_discrete(ms, traj.rotations, cfg, cfg.gains,
                          "constant_omega", {})]


def _scenario_gain_sweep(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    param = cfg.sweep["param"]
    traj, ms = _measurements(cfg)
    out = []
    for v in cfg.sweep["values"]:
        g = replace(cfg.gains, **{param: float(v)})
        out.append(_run_discrete(ms, traj.rotations, cfg, g,
                                 f"{param}={v:g}", {param: float(v)}))
    return out


def _scenario_manifold(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    traj, ms = _measurements(cfg)
    out = []
    for ke in (cfg.gains.k_e, 0.0):
        g = replace(cfg.gains, k_e=ke)
        out.append(_run_discrete(ms, traj.rotations, cfg, g,
                                 f"k_e={ke:g}", {"k_e": ke}))
    return out


def _scenario_noise(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    spec = cfg.noise if cfg.noise is not None else NoiseSpec()
    traj, ms = _measurements(cfg)
    noisy = apply_noise(ms, spec)
    return [_run_discrete(noisy, traj.rotations, cfg, cfg.gains, "noise",
                          {"amplitude": spec.amplitude,
                           "frequency_hz": spec.frequency_hz})]


def _scenario_euler(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    traj, ms = _measurements(cfg)
    prop = _run_discrete(ms, traj.rotations, cfg, cfg.gains, "proposed", {})
    eul = _run_discrete(ms, traj.rotations, cfg, cfg.gains, "euler",
                        {"with_ke": cfg.euler_with_ke}, stepper="euler",
                        tolerate_blowup=True)
    return [prop, eul]


def _scenario_dt_sweep(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    out = []
    for v in cfg.sweep["values"]:
        traj, ms = _measurements(cfg, dt=float(v))
        out.append(_run_discrete(ms, traj.rotations, cfg, cfg.gains,
                                 f"dt={v:g}", {"dt": float(v)}))
    return out


def _scenario_taylor(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    traj, ms = _measurements(cfg)
    exact = _run_discrete(ms, traj.rotations, cfg, cfg.gains, "exact", {})
    trunc = _run_discrete(ms, traj.rotations, cfg, cfg.gains,
                          f"taylor_{cfg.taylor_order}",
                          {"order": cfg.taylor_order},
                          taylor_order=cfg.taylor_order)
    return [exact, trunc]


def _scenario_stabilization(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    R0, _ = cfg.initial_rotations()
    p = cfg.target_rotation()
    n = int(np.floor(cfg.T / cfg.dt + 1e-9)) + 1
    st = StabilizerState(bhat=np.zeros(3), target=p)
    R = R0.copy()
    data = np.empty((n, len(COLUMNS)))
    for k in range(n):
        Omega_c, st_next = stabilizing_input(st, R, cfg.gains, cfg.dt)
        err = np.linalg.norm(R - p)
        data[k] = np.concatenate((
            [float(k), k * cfg.dt], R.ravel(), p.ravel(), st.bhat,
            st_next.omega_prev,
            [err, orthogonality_defect(R), np.linalg.norm(st.bhat)],
        ))
        if not np.all(np.isfinite(R)):
            raise RuntimeError(f"series 'stabilization': non-finite plant "
                               f"state at epoch {k} (t = {k * cfg.dt:.6g} s)")
        R = R @ Omega_c
        st = st_next
    return [TrajectoryRecord("stabilization", {}, data)]


def _scenario_path_tracking(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    R0, _ = cfg.initial_rotations()
    w = cfg.omega
    path = PathSpec(f=lambda t: R0 @ exp_skew(t * w))
    n = int(np.floor(cfg.T / cfg.dt + 1e-9)) + 1
    times = cfg.dt * np.arange(n)
    rots = np.array([path.f(t) for t in times])
    rates = np.array([vee(path.velocity(t, 1e-6)) for t in times])
    ms = MeasurementStream(dt=cfg.dt, rotations=rots, rates=rates)
    return [_run_discrete(ms, rots, cfg, cfg.gains, "path_tracking", {})]


def _scenario_replay(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    ms = load_replay(cfg.replay_path)
    # no ground truth in a recording: measure the estimate against the
    # measured attitude itself
    return [_run_discrete(ms, ms.rotations, cfg, cfg.gains, "replay",
                          {"path": str(cfg.replay_path)})]


_RUNNERS = {
    "constant_omega": _scenario_constant_omega,
    "gain_sweep": _scenario_gain_sweep,
    "manifold_convergence": _scenario_manifold,
    "noise": _scenario_noise,
    "euler_comparison": _scenario_euler,
    "dt_sweep": _scenario_dt_sweep,
    "taylor_predictor": _scenario_taylor,
    "stabilization": _scenario_stabilization,
    "path_tracking": _scenario_path_tracking,
    "replay": _scenario_replay,
}


def run_experiment(cfg: ScenarioConfig) -> list[TrajectoryRecord]:
    """Execute one scenario, returning one record per series."""
    cfg.validate()
    return _RUNNERS[cfg.scenario](cfg)


def extract_envelope(series: TrajectoryRecord) -> list[EnvelopePoint]:
    """Strict local maxima of the Frobenius error over time.

    Interior points only, ties excluded; non-finite stretches (a blown-up
    baseline) never produce peaks because the comparisons fail.
    """
    if len(series) < 3:
        raise ValueError(f"need at least 3 epochs for an envelope, got {len(series)}")
    t = series.column("t")
    e = series.column("frobenius_error")
    out = []
    for i in range(1, len(e) - 1):
        if e[i] > e[i - 1] and e[i] > e[i + 1]:
            out.append(EnvelopePoint(t=float(t[i]), peak_error=float(e[i])))
    return out


def convergence_order_study(cfg: ScenarioConfig,
                            dts: list[float]) -> list[OrderStudyRow]:
    """Deviation of the discrete observer from its continuous limit.

    For each step size, runs the discrete observer and compares the
    estimate per epoch against an rk4 integration of the continuous
    observer at a fine reference step (shared across step sizes when
    they align on the reference grid).  Deviations should shrink
    roughly linearly in dt.
    """
    if not dts:
        raise ValueError("dts: need at least one step size")
    for dt in dts:
        if not dt > 0.0:
            raise ValueError(f"dts: must be positive, got {dt}")
        if dt > cfg.T:
            raise ValueError(f"dts: step {dt} exceeds the horizon T = {cfg.T}")

    R0, Rhat0 = cfg.initial_rotations()
    traj_ref: dict[float, list[ObserverState]] = {}

    h_ref = 2.5e-3
    aligned = all(abs(dt / h_ref - round(dt / h_ref)) < 1e-9 for dt in dts)

    def reference(h: float) -> list[ObserverState]:
        def meas(t):
            return R0 @ exp_skew(t * cfg.omega), cfg.omega + cfg.bias
        st0 = initial_state(Rhat0, np.zeros(3), meas(0.0)[1])
        return integrate_continuous(st0, meas, cfg.gains, h, cfg.T)

    if aligned:
        traj_ref[h_ref] = reference(h_ref)

    rows: list[OrderStudyRow] = []
    prev = None
    for dt in dts:
        traj, ms = _measurements(cfg, dt=dt)
        rec = _run_discrete(ms, traj.rotations, cfg, cfg.gains, f"dt={dt:g}",
                            {"dt": dt})
        if aligned:
            ref = traj_ref[h_ref]
            stride = int(round(dt / h_ref))
        else:
            h = dt / max(1, int(round(dt / h_ref)))
            ref = reference(h)
            stride = int(round(dt / h))
        dev = 0.0
        for k in range(len(rec)):
            Rhat_d = rec.data[k, 11:20].reshape(3, 3)
            dev = max(dev, float(np.linalg.norm(Rhat_d - ref[k * stride].Rhat)))
        rows.append(OrderStudyRow(dt=dt, deviation=dev,
                                  ratio=None if prev is None else prev / dev))
        prev = dev
    return rows


def emit_csv(record: TrajectoryRecord, path) -> None:
    """Write one series as CSV: declared header, full-precision values."""
    with open(path, "w") as fh:
        fh.write(",".join(COLUMNS) + "\n")
        for row in record.data:
            cells = [str(int(row[0]))]
            cells += [f"{v:.17g}" for v in row[1:]]
            fh.write(",".join(cells) + "\n")


def parse_csv(path) -> TrajectoryRecord:
    """Read back a series CSV written by emit_csv."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        if header != COLUMNS:
            raise ValueError(f"{path}: unexpected header {header[:3]}...")
        rows = [[float(c) for c in line.strip().split(",")]
                for line in fh if line.strip()]
    data = np.array(rows) if rows else np.empty((0, len(COLUMNS)))
    return TrajectoryRecord(label=Path(path).stem, params={}, data=data)


def _finite_or_none(x: float):
    x = float(x)
    return x if np.isfinite(x) else None


def _series_summary(rec: TrajectoryRecord, csv_name: str) -> dict:
    e = rec.column("frobenius_error")
    finite = e[np.isfinite(e)]
    Rhat_T = rec.data[-1, 11:20].reshape(3, 3)
    entry = {
        "label": rec.label,
        "params": rec.params,
        "csv": csv_name,
        "epochs": len(rec),
        "terminal_frobenius_error": _finite_or_none(e[-1]),
        "terminal_norm": _finite_or_none(np.linalg.norm(Rhat_T)),
        "terminal_defect": _finite_or_none(rec.column("defect")[-1]),
        "terminal_bias_error": _finite_or_none(rec.column("bias_error")[-1]),
        "min_frobenius_error": _finite_or_none(finite.min()) if len(finite) else None,
    }
    if len(rec) >= 3:
        entry["envelope"] = [[p.t, p.peak_error] for p in extract_envelope(rec)]
    return entry


def _csv_name(scenario: str, rec: TrajectoryRecord, multi: bool) -> str:
    if not multi and rec.label == scenario:
        return f"{scenario}.csv"
    tag = "".join(c if c.isalnum() or c in ".-" else "_" for c in rec.label)
    return f"{scenario}_{tag}.csv"


def emit_summary_json(records: list[TrajectoryRecord], path,
                      cfg: ScenarioConfig | None = None,
                      csv_names: list[str] | None = None) -> dict:
    """Write the run manifest; returns the dict that was written."""
    if csv_names is None:
        multi = len(records) > 1
        csv_names = [_csv_name(cfg.scenario if cfg else "series", r, multi)
                     for r in records]
    summary = {
        "scenario": cfg.scenario if cfg else None,
        "config": cfg.echo() if cfg else None,
        "series": [_series_summary(r, n) for r, n in zip(records, csv_names)],
    }
    with open(path, "w") as fh:
        json.dump(summary, fh, indent=2)
        fh.write("\n")
    return summary


def run_and_emit(cfg: ScenarioConfig, outdir) -> dict:
    """Run a scenario and write its CSV series plus summary.json."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    records = run_experiment(cfg)
    elapsed = time.perf_counter() - t0
    multi = len(records) > 1
    names = [_csv_name(cfg.scenario, r, multi) for r in records]
    for rec, name in zip(records, names):
        emit_csv(rec, outdir / name)
    summary = emit_summary_json(records, outdir / "summary.json", cfg, names)
    summary["elapsed_s"] = elapsed
    return summary
