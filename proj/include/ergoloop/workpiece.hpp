#pragma once

#include <ergoloop/planner.hpp>
#include <ergoloop/types.hpp>

namespace ergoloop {

// Workpiece pose in the body frame; yaw about vertical, degrees.
struct WorkpiecePose {
  Vec3 position;
  double yaw = 0.0;
};

struct MotionLimits {
  double v_max = 0.1;      // m/s
  double omega_max = 30.0; // deg/s
};

struct WorkspaceBox {
  Vec3 min{-0.8, 0.05, -1.2};
  Vec3 max{0.8, 1.2, 0.6};

  Vec3 clamp(const Vec3& p, bool* clamped = nullptr) const;
  bool contains(const Vec3& p) const;
};

struct StepResult {
  WorkpiecePose pose;
  bool complete = false;    // residual < 1 mm and < 0.1 deg
  bool saturated = false;   // goal clamped to the workspace box
};

// One rate-limited step toward pose + cmd. dt must be positive.
StepResult step_workpiece(const WorkpiecePose& pose, const ResponseCommand& cmd, double dt,
                          const MotionLimits& limits = {}, const WorkspaceBox& box = {});

// Persistent motion toward a goal fixed when the command was issued.
class WorkpieceMotion {
 public:
  WorkpieceMotion() = default;
  WorkpieceMotion(const WorkpiecePose& start, const ResponseCommand& cmd,
                  const WorkspaceBox& box);

  bool active() const { return active_; }
  bool saturated() const { return saturated_; }
  // Advances the pose; clears active() once the goal is reached.
  WorkpiecePose step(const WorkpiecePose& pose, double dt, const MotionLimits& limits);

 private:
  Vec3 goal_pos_;
  double goal_yaw_ = 0.0;
  bool active_ = false;
  bool saturated_ = false;
};

}  // namespace ergoloop
