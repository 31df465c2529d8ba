import json
import math

import pytest

ergoloop = pytest.importorskip("ergoloop")


def test_neutral_scores_one():
    angles = ergoloop.ArmAngles()
    result = ergoloop.score(angles)
    assert result.upper == 1
    assert result.arm_score == 1


def test_table_corners():
    assert ergoloop.table_a(1, 1, 1, 1) == 1
    assert ergoloop.table_a(6, 3, 4, 2) == 9
    assert ergoloop.table_a(1, 1, 1, 2) == 2


def test_angle_primitives():
    s = ergoloop.Vec3(0.0, 0.0, 0.0)
    e = ergoloop.Vec3(0.0, 0.0, -0.3)
    h = ergoloop.Vec3(0.0, 0.25, -0.3)
    assert ergoloop.lower_arm_sagittal(h, e, s) == pytest.approx(90.0)


def test_classification_priority():
    angles = ergoloop.ArmAngles(alpha_s=30.0, gamma_b=20.0)
    causes = ergoloop.classify(angles)
    assert [name for name, _ in causes] == ["WristSagittal", "UpperArmSagittal"]


def test_response_formula():
    (tx, ty, tz), rot = ergoloop.compute_response("LowerArmSagittal", 30.0, b=0.25)
    assert (tx, ty, tz) == pytest.approx((0.0, 0.125, 0.25 * math.cos(math.radians(30))))
    assert rot == 0.0
    (_, _, _), rot = ergoloop.compute_response("WristTransversal", 15.0)
    assert rot == pytest.approx(-15.0)


def test_roundtrip_angles():
    truth = ergoloop.ArmAngles(alpha_s=35.0, alpha_c=10.0, beta_s=80.0,
                               beta_t=15.0, gamma_b=-10.0, gamma_t=5.0)
    got = ergoloop.roundtrip_angles(truth)
    assert got.alpha_s == pytest.approx(35.0, abs=1e-6)
    assert got.beta_s == pytest.approx(80.0, abs=1e-6)
    assert got.gamma_b == pytest.approx(-10.0, abs=1e-6)


def test_solve_arm_neutral():
    result = ergoloop.solve_arm(ergoloop.Vec3(0.0, 0.5, -0.3))
    assert result["beta_s"] == pytest.approx(90.0, abs=1e-6)
    assert not result["saturated"]
    assert result["tip"] == pytest.approx((0.0, 0.5, -0.3), abs=1e-9)


def test_scenario_runs_deterministically():
    scenario = {
        "anthropometrics": {"a": 0.3, "b": 0.25, "tool": 0.25, "shoulder_height": 1.45},
        "initial_pose": {"position": [0.0, 0.32, 0.18], "yaw": 0.0},
        "targets": [{"offset": [0.0, 0.0, 0.0], "contact": "hand"}],
        "dwell_s": 2.0,
        "mode": "robot-assisted",
        "workspace": {"min": [-2, -2, -2], "max": [2, 2, 2]},
    }
    text = json.dumps(scenario)
    a = json.loads(ergoloop.run_scenario_json(text))
    b = json.loads(ergoloop.run_scenario_json(text))
    assert a == b
    assert a["total_commands"] >= 1
    assert a["targets"][0]["mean_arm_score"] == pytest.approx(1.0)


def test_default_experiment_improves_ergonomics():
    report = json.loads(ergoloop.run_default_experiment_json(dwell_s=2.0))
    for row in report["per_target"]:
        assert row["robot_assisted"]["mean"] <= 1.2
        if row["target"] % 2 == 1:
            assert row["human_only"]["mean"] > row["robot_assisted"]["mean"]
