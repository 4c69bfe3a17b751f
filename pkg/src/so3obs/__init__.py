"""Discrete-time attitude observer on SO(3).

A predictor-corrector estimator for rigid-body attitude from biased rate
and attitude measurements, stabilized on the rotation manifold by a
feedback-integrator term, plus the scenario harness that exercises it.
"""

from .so3 import (exp_skew, exp_skew_taylor, hat, orthogonality_defect,
                  project_to_so3, random_rotation, vee)
from .integrators import FieldPair, check_tangency, modified_field
from .observer import (ConvergenceBound, Gains, ObserverState,
                       StabilityCertificate, build_certificate, error_bound,
                       estimate_bound_constants, euler_mahony_step,
                       initial_state, innovation, integrate_continuous,
                       linearized_matrices, step_discrete)
from .truth import (MeasurementStream, NoiseSpec, TruthTrajectory,
                    apply_noise, load_replay, propagate_truth,
                    sample_measurements, save_replay)
from .control import (PathSpec, StabilizerState, path_tracking_step,
                      path_velocity, stabilizing_input)
from .harness import (ScenarioConfig, TrajectoryRecord, convergence_order_study,
                      emit_csv, emit_summary_json, extract_envelope,
                      run_and_emit, run_experiment)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceBound", "FieldPair", "Gains", "MeasurementStream",
    "NoiseSpec", "ObserverState", "PathSpec", "ScenarioConfig",
    "StabilityCertificate", "StabilizerState", "TrajectoryRecord",
    "TruthTrajectory", "apply_noise", "build_certificate", "check_tangency",
    "convergence_order_study", "emit_csv", "emit_summary_json", "error_bound",
    "estimate_bound_constants", "euler_mahony_step", "exp_skew",
    "exp_skew_taylor", "extract_envelope",
    "hat", "initial_state", "innovation", "integrate_continuous",
    "linearized_matrices", "load_replay", "modified_field",
    "orthogonality_defect", "path_tracking_step", "path_velocity",
    "project_to_so3", "propagate_truth", "random_rotation", "run_and_emit",
    "run_experiment", "sample_measurements", "save_replay",
    "stabilizing_input", "step_discrete", "vee",
]
