"""RL-driven fusion of RSSI/PDR/AoA indoor tracking paths."""

from rliff._rliff import (
    EnvironmentSpec,
    InputError,
    LearningConfig,
    Position2D,
    SyncedEstimates,
    TrackerNoiseConfig,
    Trajectory,
    TrainResult,
    WeightVector,
    apply_action,
    build_trajectory,
    discretize_state,
    environment_preset,
    equal_weights,
    evaluate,
    fuse,
    generate_trajectory,
    random_weights,
    reward,
    run_experiment,
    run_reliability,
    simulate_aoa_path,
    simulate_pdr_path,
    simulate_rssi_path,
    tracking_error,
    train,
    trajectory_from_csv,
    trajectory_to_csv,
)

__all__ = [
    "EnvironmentSpec",
    "InputError",
    "LearningConfig",
    "Position2D",
    "SyncedEstimates",
    "TrackerNoiseConfig",
    "Trajectory",
    "TrainResult",
    "WeightVector",
    "apply_action",
    "build_trajectory",
    "discretize_state",
    "environment_preset",
    "equal_weights",
    "evaluate",
    "fuse",
    "generate_trajectory",
    "random_weights",
    "reward",
    "run_experiment",
    "run_reliability",
    "simulate_aoa_path",
    "simulate_pdr_path",
    "simulate_rssi_path",
    "tracking_error",
    "train",
    "trajectory_from_csv",
    "trajectory_to_csv",
]
