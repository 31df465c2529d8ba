#include <ergoloop/simulation.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ergoloop {

using nlohmann::json;

SimOutcome run_scenario(const Scenario& sc, const RunConfig& rc) {
  sc.validate();
  rc.validate();

  const Vec3 shoulder{0.0, 0.0, sc.anthro.shoulder_height};
  ReachSolver solver(sc.anthro, sc.side);
  CalibrationProfile profile =
      calibrate({calibration_frame(sc.anthro, shoulder, sc.side)}, sc.anthro.tool, sc.side);

  PlannerConfig pcfg = rc.planner;
  Arbitrator arb(pcfg);
  arb.set_motion_feedback(true);

  SimOutcome out;
  WorkpiecePose pose = sc.initial_pose;
  std::optional<WorkpieceMotion> motion;
  const double dt = 1.0 / sc.rate_hz;
  double t = 0.0;

  for (size_t ti = 0; ti < sc.targets.size(); ++ti) {
    const Target& target = sc.targets[ti];
    const double dwell = target.dwell_s > 0.0 ? target.dwell_s : sc.dwell_s;
    const int dwell_frames = std::max(1, static_cast<int>(std::lround(dwell * sc.rate_hz)));

    TargetStats stats;
    stats.target_index = static_cast<int>(ti) + 1;
    size_t window_begin = out.trace.records.size();
    int quiet = 0;
    const double target_start = t;

    while (true) {
      const Vec3 target_world = pose.position + rotate_z(target.offset, pose.yaw);
      ReachResult reach = target.contact == ContactKind::Hand
                              ? solver.solve_hand(target_world)
                              : solver.solve_tool(target_world, pose.yaw);

      SensorFrame frame = synth_frame(reach.config, sc.anthro, shoulder, sc.side, t);
      ArmAngles angles = compute_arm_angles(frame, profile, sc.side);
      RulaBreakdown breakdown = score(angles, rc.scoring);
      std::vector<Deviation> causes = classify(angles, breakdown, pcfg);

      std::optional<ResponseCommand> cmd;
      if (sc.mode == SimMode::RobotAssisted) {
        cmd = arb.update(t, angles, breakdown, profile, sc.side);
        if (cmd) {
          motion.emplace(pose, *cmd, sc.workspace);
          if (motion->saturated()) out.workspace_saturated = true;
          ++stats.commands;
          ++out.total_commands;
        }
      }

      bool moving = motion.has_value() && motion->active();
      if (moving) {
        pose = motion->step(pose, dt, sc.motion);
        if (!motion->active()) {
          arb.notify_motion_complete(t);
          motion.reset();
        }
      }

      TraceRecord rec;
      rec.t = t;
      rec.angles = angles;
      rec.scores = breakdown;
      if (cmd)
        rec.active_cause = cmd->cause.cause;
      else if (!causes.empty())
        rec.active_cause = causes.front().cause;
      rec.command = cmd;
      rec.workpiece = pose;
      out.trace.push(std::move(rec));
      if (reach.saturated) stats.reach_saturated = true;

      t += dt;
      if (moving || cmd) {
        quiet = 0;
        window_begin = out.trace.records.size();
      } else {
        ++quiet;
        if (quiet >= dwell_frames) break;
      }
      if (t - target_start > sc.max_target_time_s) break;  // safety bound
    }

    double sum = 0.0;
    int max_score = 0;
    size_t n = out.trace.records.size() - window_begin;
    for (size_t i = window_begin; i < out.trace.records.size(); ++i) {
      sum += out.trace.records[i].scores.arm_score;
      max_score = std::max(max_score, out.trace.records[i].scores.arm_score);
    }
    stats.mean_arm_score = n > 0 ? sum / static_cast<double>(n) : 0.0;
    stats.max_arm_score = max_score;
    stats.window_start = n > 0 ? out.trace.records[window_begin].t : t;
    stats.window_end = t;
    out.targets.push_back(stats);
  }
  return out;
}

std::string SimOutcome::summary_json(const Scenario& scenario) const {
  json j;
  j["mode"] = mode_name(scenario.mode);
  j["seed"] = scenario.seed;
  j["total_commands"] = total_commands;
  j["workspace_saturated"] = workspace_saturated;
  json ts = json::array();
  for (const TargetStats& s : targets) {
    ts.push_back({{"target", s.target_index},
                  {"mean_arm_score", s.mean_arm_score},
                  {"max_arm_score", s.max_arm_score},
                  {"commands", s.commands},
                  {"window", json::array({s.window_start, s.window_end})},
                  {"reach_saturated", s.reach_saturated}});
  }
  j["targets"] = ts;
  return j.dump(2);
}

ExperimentOutput run_experiment(const ExperimentSpec& spec, const RunConfig& rc) {
  spec.validate();
  rc.validate();

  ExperimentOutput out;
  out.traces.resize(2);
  out.report.human_only.assign(spec.targets.size(), {});
  out.report.robot_assisted.assign(spec.targets.size(), {});
  out.report.load_g = spec.load_g;
  out.report.config_echo = rc.to_json();
  out.report.spec_echo = spec.to_json();

  const SimMode modes[2] = {SimMode::HumanOnly, SimMode::RobotAssisted};
  for (int mi = 0; mi < 2; ++mi) {
    std::vector<ModeTargetResult>& results =
        mi == 0 ? out.report.human_only : out.report.robot_assisted;
    for (int trial = 0; trial < spec.trials; ++trial) {
      Scenario sc;
      sc.anthro = spec.anthro;
      sc.side = spec.side;
      sc.initial_pose = spec.initial_pose;
      sc.targets = spec.targets;
      sc.dwell_s = spec.dwell_s;
      sc.mode = modes[mi];
      sc.seed = spec.seed;
      sc.rate_hz = spec.rate_hz;
      sc.motion = spec.motion;
      sc.workspace = spec.workspace;

      SimOutcome run = run_scenario(sc, rc);
      for (size_t ti = 0; ti < run.targets.size(); ++ti) {
        results[ti].mean += run.targets[ti].mean_arm_score / spec.trials;
        results[ti].max = std::max(results[ti].max, run.targets[ti].max_arm_score);
        results[ti].commands += run.targets[ti].commands;
      }
      out.traces[mi].push_back(std::move(run.trace));
    }
  }
  return out;
}

std::string ExperimentReport::to_json() const {
  json j;
  json targets = json::array();
  for (size_t i = 0; i < human_only.size(); ++i) {
    targets.push_back(
        {{"target", i + 1},
         {"face", (i % 2 == 0) ? "bottom" : "top"},
         {"human_only", {{"mean", human_only[i].mean}, {"max", human_only[i].max}}},
         {"robot_assisted",
          {{"mean", robot_assisted[i].mean}, {"max", robot_assisted[i].max}}},
         {"robot_commands", robot_assisted[i].commands}});
  }
  j["per_target"] = targets;
  j["load_g"] = load_g;
  j["config"] = json::parse(config_echo);
  j["spec"] = json::parse(spec_echo);
  return j.dump(2);
}

std::string ExperimentReport::bar_data_csv() const {
  std::ostringstream out;
  out << "target,human_only_mean,robot_assisted_mean\n";
  char buf[64];
  for (size_t i = 0; i < human_only.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.6g,%.6g\n", i + 1, human_only[i].mean,
                  robot_assisted[i].mean);
    out << buf;
  }
  return out.str();
}

std::string ExperimentReport::bar_chart_svg() const {
  const int n = static_cast<int>(human_only.size());
  const double w = 72.0, gap = 28.0, y0 = 240.0, scale = 60.0;
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << n * (2 * w + gap) + 80
      << "' height='300'>\n";
  svg << "<text x='10' y='20' font-size='14'>Mean RULA arm score per target</text>\n";
  for (int i = 0; i < n; ++i) {
    double x = 50.0 + i * (2 * w + gap);
    double h1 = human_only[i].mean * scale;
    double h2 = robot_assisted[i].mean * scale;
    svg << "<rect x='" << x << "' y='" << y0 - h1 << "' width='" << w << "' height='" << h1
        << "' fill='#c0504d'/>\n";
    svg << "<rect x='" << x + w << "' y='" << y0 - h2 << "' width='" << w << "' height='"
        << h2 << "' fill='#4f81bd'/>\n";
    svg << "<text x='" << x + w / 2 << "' y='" << y0 + 18 << "' font-size='12'>T" << i + 1
        << "</text>\n";
  }
  svg << "<rect x='50' y='260' width='12' height='12' fill='#c0504d'/>"
      << "<text x='66' y='271' font-size='12'>human-only</text>\n";
  svg << "<rect x='170' y='260' width='12' height='12' fill='#4f81bd'/>"
      << "<text x='186' y='271' font-size='12'>robot-assisted</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ergoloop
