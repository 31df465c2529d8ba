#pragma once

#include <ergoloop/angles.hpp>
#include <ergoloop/planner.hpp>
#include <ergoloop/rula.hpp>
#include <ergoloop/workpiece.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

namespace ergoloop {

struct TraceRecord {
  double t = 0.0;
  ArmAngles angles;
  RulaBreakdown scores;
  std::optional<Cause> active_cause;
  std::optional<ResponseCommand> command;
  WorkpiecePose workpiece;
};

struct Trace {
  std::vector<TraceRecord> records;

  void push(TraceRecord r);
  void validate() const;  // monotone times; commands carry their cause
};

// Fixed-column CSV: t, alpha_s, alpha_c, beta_s, beta_t, gamma_b, gamma_t,
// score_upper, score_lower, score_wrist, score_twist, rula_arm, cause,
// tx, ty, tz, rot_z, wp_x, wp_y, wp_z, wp_yaw. Deterministic formatting;
// identical traces serialize to identical bytes.
void write_timeseries(const Trace& trace, std::ostream& out);
void write_timeseries(const Trace& trace, const std::string& path);

Trace read_timeseries(std::istream& in);

}  // namespace ergoloop
