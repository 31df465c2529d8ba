#pragma once

#include <ergoloop/reach.hpp>
#include <ergoloop/run_config.hpp>
#include <ergoloop/scenario.hpp>
#include <ergoloop/trace.hpp>

#include <string>
#include <vector>

namespace ergoloop {

struct TargetStats {
  int target_index = 0;          // 1-based
  double mean_arm_score = 0.0;   // over the recorded dwell window
  double max_arm_score = 0.0;
  int commands = 0;              // commands issued while on this target
  double window_start = 0.0;
  double window_end = 0.0;
  bool reach_saturated = false;  // any saturated reach while on this target
};

struct SimOutcome {
  Trace trace;
  std::vector<TargetStats> targets;
  int total_commands = 0;
  bool workspace_saturated = false;

  std::string summary_json(const Scenario& scenario) const;
};

// Fixed-step closed loop: re-solve the reach, synthesize the frame, score,
// arbitrate (robot-assisted only), move the workpiece. Deterministic for a
// given scenario and configuration.
SimOutcome run_scenario(const Scenario& scenario, const RunConfig& config = {});

struct ModeTargetResult {
  double mean = 0.0;
  double max = 0.0;
  int commands = 0;
};

struct ExperimentReport {
  std::vector<ModeTargetResult> human_only;      // per target, averaged over trials
  std::vector<ModeTargetResult> robot_assisted;
  double load_g = 900.0;
  std::string config_echo;
  std::string spec_echo;

  std::string to_json() const;
  std::string bar_data_csv() const;
  std::string bar_chart_svg() const;
};

struct ExperimentOutput {
  ExperimentReport report;
  // traces[mode][trial]; mode 0 = human-only, 1 = robot-assisted
  std::vector<std::vector<Trace>> traces;
};

ExperimentOutput run_experiment(const ExperimentSpec& spec, const RunConfig& config = {});

}  // namespace ergoloop
