#pragma once

#include <ergoloop/arm_model.hpp>
#include <ergoloop/workpiece.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ergoloop {

enum class ContactKind { Hand, Tool };

// A reach target riding on the workpiece. offset is workpiece-local and
// rotates with the workpiece yaw. Hand contact: the hand touches the point.
// Tool contact: the tool tip is presented against the point, tool yaw
// tracking the workpiece face.
struct Target {
  Vec3 offset;
  ContactKind contact = ContactKind::Hand;
  double dwell_s = 0.0;  // 0 -> scenario default
};

enum class SimMode { HumanOnly, RobotAssisted };

const char* mode_name(SimMode m);
SimMode mode_from_name(const std::string& name);

struct Scenario {
  Anthropometrics anthro;
  Handedness side = Handedness::Right;
  WorkpiecePose initial_pose;   // body frame, shoulder origin
  std::vector<Target> targets;
  double dwell_s = 20.0;
  SimMode mode = SimMode::RobotAssisted;
  std::uint64_t seed = 0;       // echoed into outputs; the model is deterministic
  double rate_hz = 30.0;
  MotionLimits motion;
  WorkspaceBox workspace;
  double max_target_time_s = 120.0;  // safety bound per target

  void validate() const;
  std::string to_json() const;
  static Scenario from_json(const std::string& text);
  static Scenario from_json_file(const std::string& path);
};

// The six-target box experiment: odd target indices (1-based) sit on the
// bottom face, even on the top face; both modes, several trials each.
struct ExperimentSpec {
  Anthropometrics anthro;
  Handedness side = Handedness::Right;
  WorkpiecePose initial_pose;   // box centre, body frame
  Vec3 box_size{0.4, 0.3, 0.3}; // width x depth x height
  std::vector<Target> targets;  // exactly 6, workpiece-local
  int trials = 3;
  double dwell_s = 20.0;
  double rate_hz = 30.0;
  double load_g = 900.0;        // recorded only; no force adjustment in scope
  std::uint64_t seed = 0;
  MotionLimits motion;
  WorkspaceBox workspace;

  void validate() const;
  std::string to_json() const;
  static ExperimentSpec from_json(const std::string& text);
  static ExperimentSpec from_json_file(const std::string& path);

  // Frozen default layout reproducing the study geometry at desk scale.
  static ExperimentSpec default_spec();
};

}  // namespace ergoloop
