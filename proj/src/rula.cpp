#include <ergoloop/rula.hpp>

#include <algorithm>
#include <cmath>

namespace ergoloop {

namespace {

// Arm/wrist worksheet Table A: [upper-1][lower-1][wrist-1][twist-1].
constexpr int kTableA[6][3][4][2] = {
    {{{1, 2}, {2, 2}, {2, 3}, {3, 3}},
     {{2, 2}, {2, 2}, {3, 3}, {3, 3}},
     {{2, 3}, {3, 3}, {3, 3}, {4, 4}}},
    {{{2, 3}, {3, 3}, {3, 4}, {4, 4}},
     {{3, 3}, {3, 3}, {3, 4}, {4, 4}},
     {{3, 4}, {4, 4}, {4, 4}, {5, 5}}},
    {{{3, 3}, {4, 4}, {4, 4}, {5, 5}},
     {{3, 4}, {4, 4}, {4, 4}, {5, 5}},
     {{4, 4}, {4, 4}, {4, 5}, {5, 5}}},
    {{{4, 4}, {4, 4}, {4, 5}, {5, 5}},
     {{4, 4}, {4, 4}, {4, 5}, {5, 5}},
     {{4, 4}, {4, 5}, {5, 5}, {6, 6}}},
    {{{5, 5}, {5, 5}, {5, 6}, {6, 7}},
     {{5, 6}, {6, 6}, {6, 7}, {7, 7}},
     {{6, 6}, {6, 7}, {7, 7}, {7, 8}}},
    {{{7, 7}, {7, 7}, {7, 8}, {8, 9}},
     {{8, 8}, {8, 8}, {8, 9}, {9, 9}},
     {{9, 9}, {9, 9}, {9, 9}, {9, 9}}}};

}  // namespace

StepScores step_scores(const ArmAngles& a, const ScoringConfig& c) {
  StepScores s;

  // Step 1: upper arm, signed sagittal bands plus the abduction adjustment.
  if (a.alpha_s < -c.upper_sagittal_band) {
    s.upper = 2;
  } else if (a.alpha_s <= c.upper_sagittal_band) {
    s.upper = 1;
  } else if (a.alpha_s <= c.upper_mid) {
    s.upper = 2;
  } else if (a.alpha_s <= c.upper_high) {
    s.upper = 3;
  } else {
    s.upper = 4;
  }
  if (a.alpha_c > c.abduction_threshold) ++s.upper;
  s.upper = std::min(s.upper, 6);

  // Step 2: lower arm band plus the transversal adjustment.
  s.lower = (a.beta_s >= c.lower_band_lo && a.beta_s <= c.lower_band_hi) ? 1 : 2;
  if (std::abs(a.beta_t) > c.transversal_threshold) ++s.lower;
  s.lower = std::min(s.lower, 3);

  // Step 3: wrist from the transversal deviation, +1 for a sagittal bend.
  double gt = std::abs(a.gamma_t);
  if (gt <= c.wrist_deadband) {
    s.wrist = 1;
  } else if (gt <= c.wrist_band) {
    s.wrist = 2;
  } else {
    s.wrist = 3;
  }
  if (std::abs(a.gamma_b) > c.wrist_deadband) ++s.wrist;
  s.wrist = std::min(s.wrist, 4);

  // Step 4: twisting movements of the wrist are out of scope.
  s.twist = 1;
  return s;
}

int table_a(int upper, int lower, int wrist, int twist) {
  if (upper < 1 || upper > 6 || lower < 1 || lower > 3 || wrist < 1 || wrist > 4 ||
      twist < 1 || twist > 2)
    throw std::out_of_range("table_a index out of range");
  return kTableA[upper - 1][lower - 1][wrist - 1][twist - 1];
}

RulaBreakdown score(const ArmAngles& angles, const ScoringConfig& config) {
  StepScores s = step_scores(angles, config);
  return {s.upper, s.lower, s.wrist, s.twist, table_a(s.upper, s.lower, s.wrist, s.twist)};
}

}  // namespace ergoloop
