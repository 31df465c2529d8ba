#pragma once

#include <ergoloop/arm_model.hpp>
#include <ergoloop/types.hpp>

namespace ergoloop {

struct ReachResult {
  ArmConfiguration config;
  Vec3 elbow, hand, tip;   // body frame, shoulder at origin
  bool saturated = false;  // target clamped to the reachable set
};

// Analytic reach model of the simulated human: a two-link arm solved in the
// vertical plane through shoulder and target, anatomic elbow branch, plus a
// wrist that stays neutral unless the task constrains the tool.
class ReachSolver {
 public:
  ReachSolver(const Anthropometrics& anthro, Handedness side = Handedness::Right,
              const ArmEnvelope& envelope = {});

  // Hand-contact target: the hand itself touches the target point, relaxed
  // wrist. Deviations show up in the shoulder and elbow.
  ReachResult solve_hand(const Vec3& hand_target) const;

  // Tool-tip target with the tool extending the forearm (wrist neutral when
  // the compound two-link reach succeeds); clamps to maximum reach toward
  // the target otherwise.
  ReachResult solve_tip(const Vec3& tip_target) const;

  // Tool-tip target presented against a workpiece face: the tool yaw tracks
  // the face normal (face_yaw) and the hand stays inside a comfort height
  // band, the wrist bending to span the remaining offset.
  ReachResult solve_tool(const Vec3& tip_target, double face_yaw_deg) const;

  // Comfort band for the hand height used by solve_tool, relative to the
  // shoulder. Defaults to neutral hand height +/- hand_band().
  double hand_band() const { return hand_band_halfwidth_; }
  void set_hand_band(double halfwidth) { hand_band_halfwidth_ = halfwidth; }

  const Anthropometrics& anthro() const { return anthro_; }

 private:
  struct Planar {
    double theta_u = 0.0;  // upper-arm angle from straight down, deg
    double beta = 90.0;    // elbow flexion, deg
    bool saturated = false;
  };
  Planar planar_two_link(double rho, double zeta, double len1, double len2) const;
  ReachResult assemble(double azimuth, const Planar& p, double tool_elev,
                       double tool_yaw, bool has_tool_constraint, bool saturated) const;

  Anthropometrics anthro_;
  Handedness side_;
  ArmEnvelope envelope_;
  double hand_band_halfwidth_ = 0.10;
};

}  // namespace ergoloop
