#pragma once

#include <ergoloop/skeleton.hpp>
#include <ergoloop/types.hpp>

#include <string>
#include <vector>

namespace ergoloop {

// Signed projected arm angles, degrees. alpha_s positive = flexion forward,
// alpha_c positive = abduction away from the midline, beta_s in [0, 180]
// elbow flexion, beta_t positive = lateral (negative = crossing the midline),
// gamma_b positive = hand up, gamma_t signed transversal deviation, gamma_w
// wrist twist (computed, ignored by scoring).
struct ArmAngles {
  double alpha_s = 0.0;
  double alpha_c = 0.0;
  double beta_s = 90.0;
  double beta_t = 0.0;
  double gamma_b = 0.0;
  double gamma_t = 0.0;
  double gamma_w = 0.0;
};

struct AngleOffsets {
  double alpha_s = 0.0, alpha_c = 0.0, beta_s = 0.0, beta_t = 0.0;
  double gamma_b = 0.0, gamma_t = 0.0;
};

// Per-user calibration: limb lengths, additive angle corrections, the
// reference hand-to-forearm orientation and the baseline distances backing
// the deviation flags.
struct CalibrationProfile {
  double a = 0.30;
  double b = 0.25;
  double tool = 0.25;
  AngleOffsets offsets;
  Quat r_ref;                    // calibration-time hand relative to forearm
  double baseline_elbow_hip = 0.0;
  double baseline_wrist_elbow = 0.0;

  void validate() const;
  std::string to_json() const;
  static CalibrationProfile from_json(const std::string& text);
};

// Direction flags, redundant with the signed angles.
struct DeviationFlags {
  bool upper_forward = true;
  bool upper_abducted_lateral = false;
  bool forearm_lateral = false;
  bool wrist_up = true;
};

struct WristAngles {
  double bend = 0.0;         // gamma_b
  double transversal = 0.0;  // gamma_t
  double twist = 0.0;        // gamma_w
  bool saturated = false;    // |bend| >= 89 deg, decomposition degenerate
};

// Projected angle primitives (degrees). All positions in meters; each throws
// std::domain_error on a zero-length limb vector.
double lower_arm_sagittal(const Vec3& hand, const Vec3& elbow, const Vec3& shoulder);
double upper_arm_sagittal(const Vec3& torso, const Vec3& neck, const Vec3& elbow,
                          const Vec3& shoulder);
double upper_arm_coronal(const Vec3& neck, const Vec3& elbow, const Vec3& shoulder);
double lower_arm_transversal(const Vec3& neck, const Vec3& shoulder, const Vec3& hand,
                             const Vec3& elbow);

// Relative wrist rotation against the calibration reference, decomposed as
// intrinsic rotations about the vertical, lateral and longitudinal axes.
WristAngles wrist_angles(const Quat& imu_hand, const Quat& imu_forearm, const Quat& r_ref);

// Builds a profile from a stationary calibration window (>= 1 frame).
// Throws when the window is empty or the intra-window angle spread exceeds
// 5 degrees.
CalibrationProfile calibrate(const std::vector<SensorFrame>& window, double tool_length,
                             Handedness side = Handedness::Right);

DeviationFlags compute_flags(const SensorFrame& frame, const CalibrationProfile& calib,
                             Handedness side = Handedness::Right);

ArmAngles compute_arm_angles(const SensorFrame& frame, const CalibrationProfile& calib,
                             Handedness side = Handedness::Right);

}  // namespace ergoloop
