"""Closed-loop robot-assisted ergonomics engine."""

from ._core import (
    ArmAngles,
    Handedness,
    RulaBreakdown,
    Vec3,
    classify,
    compute_response,
    default_experiment_spec_json,
    lower_arm_sagittal,
    lower_arm_transversal,
    roundtrip_angles,
    run_default_experiment_json,
    run_scenario_json,
    score,
    solve_arm,
    table_a,
    upper_arm_coronal,
    upper_arm_sagittal,
)

__all__ = [
    "ArmAngles",
    "Handedness",
    "RulaBreakdown",
    "Vec3",
    "classify",
    "compute_response",
    "default_experiment_spec_json",
    "lower_arm_sagittal",
    "lower_arm_transversal",
    "roundtrip_angles",
    "run_default_experiment_json",
    "run_scenario_json",
    "score",
    "solve_arm",
    "table_a",
    "upper_arm_coronal",
    "upper_arm_sagittal",
]
