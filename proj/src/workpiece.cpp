#include <ergoloop/workpiece.hpp>

#include <algorithm>
#include <cmath>

namespace ergoloop {

namespace {
constexpr double kPosTol = 1e-3;   // 1 mm
constexpr double kYawTol = 0.1;    // deg
}  // namespace

Vec3 WorkspaceBox::clamp(const Vec3& p, bool* clamped) const {
  Vec3 out{std::clamp(p.x, min.x, max.x), std::clamp(p.y, min.y, max.y),
           std::clamp(p.z, min.z, max.z)};
  if (clamped) *clamped = (out.x != p.x || out.y != p.y || out.z != p.z);
  return out;
}

bool WorkspaceBox::contains(const Vec3& p) const {
  return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
         p.z <= max.z;
}

WorkpieceMotion::WorkpieceMotion(const WorkpiecePose& start, const ResponseCommand& cmd,
                                 const WorkspaceBox& box) {
  goal_pos_ = box.clamp(start.position + cmd.translation, &saturated_);
  goal_yaw_ = start.yaw + cmd.rotation_z;
  active_ = true;
}

WorkpiecePose WorkpieceMotion::step(const WorkpiecePose& pose, double dt,
                                    const MotionLimits& limits) {
  if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
  WorkpiecePose next = pose;
  if (!active_) return next;

  Vec3 delta = goal_pos_ - pose.position;
  double dist = delta.norm();
  double step = limits.v_max * dt;
  next.position = dist <= step || dist < 1e-15 ? goal_pos_
                                               : pose.position + delta * (step / dist);

  double dyaw = goal_yaw_ - pose.yaw;
  double yaw_step = limits.omega_max * dt;
  if (std::abs(dyaw) <= yaw_step)
    next.yaw = goal_yaw_;
  else
    next.yaw = pose.yaw + (dyaw > 0 ? yaw_step : -yaw_step);

  if ((goal_pos_ - next.position).norm() < kPosTol && std::abs(goal_yaw_ - next.yaw) < kYawTol)
    active_ = false;
  return next;
}

StepResult step_workpiece(const WorkpiecePose& pose, const ResponseCommand& cmd, double dt,
                          const MotionLimits& limits, const WorkspaceBox& box) {
  WorkpieceMotion motion(pose, cmd, box);
  StepResult r;
  r.pose = motion.step(pose, dt, limits);
  r.complete = !motion.active();
  r.saturated = motion.saturated();
  return r;
}

}  // namespace ergoloop
