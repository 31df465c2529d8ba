#pragma once

#include <ergoloop/angles.hpp>

#include <string>

namespace ergoloop {

// Band thresholds of the arm/wrist worksheet, degrees.
struct ScoringConfig {
  double upper_sagittal_band = 20.0;  // |alpha_s| <= band -> 1
  double upper_mid = 45.0;
  double upper_high = 90.0;
  double abduction_threshold = 10.0;
  double lower_band_lo = 60.0;
  double lower_band_hi = 100.0;
  double transversal_threshold = 10.0;
  double wrist_band = 15.0;
  double wrist_deadband = 5.0;
};

struct StepScores {
  int upper = 1;  // 1..6, includes abduction adjustment
  int lower = 1;  // 1..3, includes transversal adjustment
  int wrist = 1;  // 1..4, includes sagittal +1
  int twist = 1;  // fixed 1 here; table accepts 1..2
};

struct RulaBreakdown {
  int upper = 1;
  int lower = 1;
  int wrist = 1;
  int twist = 1;
  int arm_score = 1;  // Table A, 1..9
};

// Worksheet step scores for the measured angles. Total on finite inputs.
StepScores step_scores(const ArmAngles& angles, const ScoringConfig& config = {});

// Table A lookup; throws std::out_of_range on out-of-range step scores.
int table_a(int upper, int lower, int wrist, int twist);

RulaBreakdown score(const ArmAngles& angles, const ScoringConfig& config = {});

}  // namespace ergoloop
