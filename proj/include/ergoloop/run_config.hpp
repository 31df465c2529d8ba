#pragma once

#include <ergoloop/planner.hpp>
#include <ergoloop/rula.hpp>
#include <ergoloop/workpiece.hpp>

#include <string>

namespace ergoloop {

// Merged engine configuration: scoring bands, planner triggers and timing,
// workpiece motion limits. Loaded from one JSON document; flags override
// file values.
struct RunConfig {
  ScoringConfig scoring;
  PlannerConfig planner;
  MotionLimits motion;
  WorkspaceBox workspace;

  void validate() const;
  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
  static RunConfig from_json_file(const std::string& path);
};

}  // namespace ergoloop
