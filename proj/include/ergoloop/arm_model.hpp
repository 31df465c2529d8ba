#pragma once

#include <ergoloop/types.hpp>

namespace ergoloop {

// Limb dimensions of the modelled user. L is hand+tool length, configured
// rather than measured.
struct Anthropometrics {
  double a = 0.30;               // shoulder-elbow, m
  double b = 0.25;               // elbow-wrist, m
  double tool = 0.25;            // hand+tool, m
  double shoulder_height = 1.45; // above floor, m

  void validate() const {
    if (!(a > 0.0) || !(b > 0.0) || !(tool > 0.0))
      throw std::invalid_argument("limb lengths must be positive");
  }
};

// Ground-truth pose of the simulated arm. Angle semantics match the measured
// arm angles: alpha_s signed upper-arm angle from the trunk (positive =
// forward), alpha_c upper-arm coronal, beta_s elbow flexion, beta_t lower-arm
// transversal (positive = lateral), gamma_b wrist bend (positive = up),
// gamma_t wrist transversal deviation.
struct ArmConfiguration {
  double alpha_s = 0.0;
  double alpha_c = 0.0;
  double beta_s = 90.0;
  double beta_t = 0.0;
  double gamma_b = 0.0;
  double gamma_t = 0.0;

  void validate() const {
    if (beta_s < 0.0 || beta_s > 160.0)
      throw std::invalid_argument("beta_s outside [0, 160]");
    if (std::abs(alpha_c) > 120.0)
      throw std::invalid_argument("alpha_c outside [-120, 120]");
    if (std::abs(gamma_b) > 60.0 || std::abs(gamma_t) > 60.0)
      throw std::invalid_argument("wrist angle outside [-60, 60]");
  }
};

// Joint-space comfort envelope of the simulated human: elbow and wrist are
// hard limits in the reach solver, the shoulder entries bound the deviation
// magnitudes the closed loop is exercised over.
struct ArmEnvelope {
  double alpha_s_min = -45.0;
  double alpha_s_max = 70.0;
  double alpha_c_max = 30.0;   // sustained abduction during reaching
  double beta_s_max = 160.0;
  double beta_t_max = 60.0;
  double wrist_max = 60.0;
};

// Forward kinematics of the arm chain, shoulder at the origin of the body
// frame (x right, y forward, z up).
struct ArmGeometry {
  Vec3 upper_dir;     // shoulder -> elbow unit vector
  Vec3 forearm_dir;   // elbow -> hand unit vector
  Vec3 tool_dir;      // hand -> tool tip unit vector
  Vec3 elbow, hand, tip;
  Quat forearm_frame; // body -> forearm sensor orientation
  Quat hand_frame;    // body -> hand sensor orientation
};

// Solves the segment directions implied by a configuration. Throws
// std::invalid_argument when the angle combination is not geometrically
// representable (e.g. |alpha_s| < |alpha_c|).
ArmGeometry arm_geometry(const ArmConfiguration& c, const Anthropometrics& anthro,
                         Handedness side);

}  // namespace ergoloop
