#include <ergoloop/planner.hpp>

#include <cmath>

namespace ergoloop {

const char* cause_name(Cause c) {
  switch (c) {
    case Cause::UpperArmCoronal: return "UpperArmCoronal";
    case Cause::LowerArmTransversal: return "LowerArmTransversal";
    case Cause::WristTransversal: return "WristTransversal";
    case Cause::WristSagittal: return "WristSagittal";
    case Cause::UpperArmSagittal: return "UpperArmSagittal";
    case Cause::LowerArmSagittal: return "LowerArmSagittal";
  }
  return "?";
}

std::optional<Cause> cause_from_name(const std::string& name) {
  for (int i = 0; i < kCauseCount; ++i) {
    Cause c = static_cast<Cause>(i);
    if (name == cause_name(c)) return c;
  }
  return std::nullopt;
}

std::vector<Deviation> classify(const ArmAngles& a, const RulaBreakdown& breakdown,
                                const PlannerConfig& cfg) {
  std::vector<Deviation> out;
  if (breakdown.arm_score < cfg.trigger_score) return out;

  // Priority: coronal and transversal planes first, then the wrist, then the
  // sagittal upper and lower arm.
  if (std::abs(a.alpha_c) > cfg.upper_coronal_threshold)
    out.push_back({Cause::UpperArmCoronal, a.alpha_c});
  if (std::abs(a.beta_t) > cfg.lower_transversal_threshold)
    out.push_back({Cause::LowerArmTransversal, a.beta_t});
  if (std::abs(a.gamma_t) > cfg.wrist_transversal_threshold)
    out.push_back({Cause::WristTransversal, a.gamma_t});
  if (std::abs(a.gamma_b) > cfg.wrist_sagittal_threshold)
    out.push_back({Cause::WristSagittal, a.gamma_b});
  if (std::abs(a.alpha_s) > cfg.upper_sagittal_threshold)
    out.push_back({Cause::UpperArmSagittal, a.alpha_s});
  if (a.beta_s < cfg.lower_band_lo || a.beta_s > cfg.lower_band_hi)
    out.push_back({Cause::LowerArmSagittal, a.beta_s});
  return out;
}

ResponseCommand compute_response(const Deviation& d, const CalibrationProfile& profile,
                                 Handedness side, double gain) {
  const double a = profile.a, b = profile.b, L = profile.tool;
  const double m = d.magnitude;
  ResponseCommand cmd;
  cmd.cause = d;

  switch (d.cause) {
    case Cause::UpperArmSagittal:
      cmd.translation = {0.0, -a * sind(m), -a * (1.0 - cosd(m))};
      break;
    case Cause::UpperArmCoronal:
      cmd.translation = {-a * sind(m), 0.0, -a * (1.0 - cosd(m))};
      break;
    case Cause::LowerArmSagittal:
      // Drives beta_s toward 90; the same expression covers both the
      // under-flexed and over-flexed side.
      cmd.translation = {0.0, b * (1.0 - sind(m)), b * cosd(m)};
      break;
    case Cause::LowerArmTransversal:
      cmd.translation = {-b * sind(m), b * (1.0 - cosd(m)), 0.0};
      break;
    case Cause::WristSagittal:
      cmd.translation = {0.0, L * (1.0 - cosd(m)), -L * sind(m)};
      break;
    case Cause::WristTransversal:
      cmd.rotation_z = -m;
      break;
  }

  if (side == Handedness::Left) {
    cmd.translation.x = -cmd.translation.x;
    // Mirrored wrists deviate in the opposite rotational sense.
    cmd.rotation_z = -cmd.rotation_z;
  }
  cmd.translation = cmd.translation * gain;
  cmd.rotation_z *= gain;
  return cmd;
}

std::optional<ResponseCommand> Arbitrator::update(double now, const ArmAngles& angles,
                                                  const RulaBreakdown& breakdown,
                                                  const CalibrationProfile& profile,
                                                  Handedness side) {
  if (now <= last_time_) throw std::invalid_argument("non-monotone arbitration time");
  last_time_ = now;

  std::vector<Deviation> active = classify(angles, breakdown, config_);
  std::array<bool, kCauseCount> seen{};
  for (const Deviation& d : active) {
    int i = static_cast<int>(d.cause);
    seen[i] = true;
    if (!onset_[i]) onset_[i] = now;
  }
  for (int i = 0; i < kCauseCount; ++i)
    if (!seen[i]) onset_[i].reset();

  if (suppressed(now)) return std::nullopt;

  for (const Deviation& d : active) {
    int i = static_cast<int>(d.cause);
    if (now - *onset_[i] >= config_.hold_time_s) {
      waiting_motion_ = true;
      suppressed_until_ = now + config_.settle_time_s;
      return compute_response(d, profile, side, config_.gain);
    }
  }
  return std::nullopt;
}

void Arbitrator::notify_motion_complete(double now) {
  waiting_motion_ = false;
  suppressed_until_ = now;
}

bool Arbitrator::suppressed(double now) const {
  if (!waiting_motion_) return false;
  return motion_feedback_ ? true : now < suppressed_until_;
}

}  // namespace ergoloop
