#pragma once

#include <ergoloop/angles.hpp>
#include <ergoloop/rula.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ergoloop {

// The six deviation causes, listed in response priority order.
enum class Cause {
  UpperArmCoronal = 0,
  LowerArmTransversal,
  WristTransversal,
  WristSagittal,
  UpperArmSagittal,
  LowerArmSagittal,
};

constexpr int kCauseCount = 6;

const char* cause_name(Cause c);
std::optional<Cause> cause_from_name(const std::string& name);

struct Deviation {
  Cause cause;
  double magnitude = 0.0;  // signed angle, degrees (beta_s itself for the lower arm)
};

// Workpiece motion command in the body frame (x right, y forward, z up).
struct ResponseCommand {
  Vec3 translation;          // meters
  double rotation_z = 0.0;   // degrees about vertical
  Deviation cause{Cause::UpperArmSagittal, 0.0};
};

struct PlannerConfig {
  int trigger_score = 2;
  double hold_time_s = 1.0;
  double settle_time_s = 3.0;
  double gain = 1.0;              // fraction of the full correction
  double tool_length_m = 0.25;    // fallback when no profile tool length

  // Cause triggers, degrees.
  double upper_sagittal_threshold = 20.0;
  double upper_coronal_threshold = 10.0;
  double lower_transversal_threshold = 10.0;
  double wrist_transversal_threshold = 10.0;
  double wrist_sagittal_threshold = 10.0;
  double lower_band_lo = 60.0;
  double lower_band_hi = 100.0;
};

// Triggered causes ordered by priority (coronal/transversal first, then the
// wrist, then the sagittal upper and lower arm). Empty while the arm score
// is below the trigger score.
std::vector<Deviation> classify(const ArmAngles& angles, const RulaBreakdown& breakdown,
                                const PlannerConfig& config = {});

// Corrective workpiece motion for one deviation. Pure formula evaluation;
// trigger gating is the caller's (classify/arbitrate) responsibility.
ResponseCommand compute_response(const Deviation& d, const CalibrationProfile& profile,
                                 Handedness side = Handedness::Right, double gain = 1.0);

// Debounced single-command arbitration. Call once per frame in time order.
class Arbitrator {
 public:
  explicit Arbitrator(const PlannerConfig& config = {}) : config_(config) {}

  // Returns a command when the highest-priority persistent cause has been
  // active for hold_time_s and no previous command is still settling.
  std::optional<ResponseCommand> update(double now, const ArmAngles& angles,
                                        const RulaBreakdown& breakdown,
                                        const CalibrationProfile& profile,
                                        Handedness side = Handedness::Right);

  // Lifts command suppression when the simulation reports the workpiece
  // motion finished; replay streams fall back to settle_time_s.
  void notify_motion_complete(double now);

  // With motion feedback the settle gate is the completion callback alone;
  // without it (replay) suppression expires after settle_time_s.
  void set_motion_feedback(bool enabled) { motion_feedback_ = enabled; }

  bool suppressed(double now) const;
  const PlannerConfig& config() const { return config_; }

 private:
  PlannerConfig config_;
  std::array<std::optional<double>, kCauseCount> onset_{};
  double last_time_ = -1e300;
  double suppressed_until_ = -1e300;
  bool waiting_motion_ = false;
  bool motion_feedback_ = false;
};

}  // namespace ergoloop
