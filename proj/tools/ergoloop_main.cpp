#include <ergoloop/simulation.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace ergoloop;

namespace {

RunConfig load_config(const std::string& path) {
  if (path.empty()) return RunConfig{};
  return RunConfig::from_json_file(path);
}

Handedness parse_hand(const std::string& s) {
  if (s == "right") return Handedness::Right;
  if (s == "left") return Handedness::Left;
  throw CLI::ValidationError("--hand", "expected right|left");
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out.good()) throw std::runtime_error("write failed: " + path.string());
}

const char* score_color(int s) {
  if (s <= 1) return "\033[32m";
  if (s == 2) return "\033[33m";
  return "\033[31m";
}

int cmd_score(const std::string& frames_path, const std::string& calib_path,
              const std::string& out_path, const std::string& config_path,
              const std::string& hand, bool live) {
  RunConfig rc = load_config(config_path);
  Handedness side = parse_hand(hand);

  std::ifstream calib_in(calib_path);
  if (!calib_in) throw std::runtime_error("cannot open: " + calib_path);
  std::ostringstream calib_text;
  calib_text << calib_in.rdbuf();
  CalibrationProfile profile = CalibrationProfile::from_json(calib_text.str());

  std::ifstream frames_in(frames_path);
  if (!frames_in) throw std::runtime_error("cannot open: " + frames_path);
  std::vector<SensorFrame> frames = parse_frame_stream_strict(frames_in, side);
  if (frames.empty()) throw std::runtime_error("no frames in: " + frames_path);

  Trace trace;
  double sum = 0.0;
  int max_score = 0;
  for (const SensorFrame& f : frames) {
    TraceRecord rec;
    rec.t = f.t;
    rec.angles = compute_arm_angles(f, profile, side);
    rec.scores = score(rec.angles, rc.scoring);
    auto causes = classify(rec.angles, rec.scores, rc.planner);
    if (!causes.empty()) rec.active_cause = causes.front().cause;
    trace.push(std::move(rec));
    sum += trace.records.back().scores.arm_score;
    max_score = std::max(max_score, trace.records.back().scores.arm_score);
    if (live) {
      int s = trace.records.back().scores.arm_score;
      std::cout << score_color(s) << "t=" << f.t << "  RULA arm " << s << "\033[0m\n";
    }
  }
  write_timeseries(trace, out_path);
  std::cout << "frames: " << frames.size() << "  mean arm score: "
            << sum / static_cast<double>(frames.size()) << "  max: " << max_score << "\n";
  return 0;
}

int cmd_simulate(const std::string& scenario_path, const std::string& mode,
                 std::uint64_t seed, bool seed_set, const std::string& out_dir,
                 const std::string& config_path) {
  RunConfig rc = load_config(config_path);
  Scenario sc = Scenario::from_json_file(scenario_path);
  if (!mode.empty()) sc.mode = mode_from_name(mode);
  if (seed_set) sc.seed = seed;

  fs::create_directories(out_dir);
  SimOutcome outcome = run_scenario(sc, rc);
  write_timeseries(outcome.trace, (fs::path(out_dir) / "trace.csv").string());
  write_text(fs::path(out_dir) / "summary.json", outcome.summary_json(sc) + "\n");

  std::cout << "targets: " << outcome.targets.size() << "  commands: "
            << outcome.total_commands << "\n";
  for (const TargetStats& t : outcome.targets)
    std::cout << "  target " << t.target_index << ": mean " << t.mean_arm_score << " max "
              << t.max_arm_score << "\n";
  return 0;
}

int cmd_experiment(const std::string& spec_path, const std::string& out_dir,
                   const std::string& config_path, bool svg) {
  RunConfig rc = load_config(config_path);
  ExperimentSpec spec =
      spec_path.empty() ? ExperimentSpec::default_spec() : ExperimentSpec::from_json_file(spec_path);

  fs::create_directories(out_dir);
  ExperimentOutput out = run_experiment(spec, rc);
  write_text(fs::path(out_dir) / "report.json", out.report.to_json() + "\n");
  write_text(fs::path(out_dir) / "bar_data.csv", out.report.bar_data_csv());
  if (svg) write_text(fs::path(out_dir) / "chart.svg", out.report.bar_chart_svg());

  const char* mode_dirs[2] = {"human_only", "robot_assisted"};
  for (int mi = 0; mi < 2; ++mi) {
    for (size_t trial = 0; trial < out.traces[mi].size(); ++trial) {
      fs::path dir = fs::path(out_dir) / "traces";
      fs::create_directories(dir);
      std::string name =
          std::string(mode_dirs[mi]) + "_trial" + std::to_string(trial + 1) + ".csv";
      write_timeseries(out.traces[mi][trial], (dir / name).string());
    }
  }

  for (size_t i = 0; i < out.report.human_only.size(); ++i)
    std::cout << "target " << i + 1 << ": human-only mean "
              << out.report.human_only[i].mean << " / robot-assisted mean "
              << out.report.robot_assisted[i].mean << "\n";
  return 0;
}

int cmd_plot(const std::string& report_path, const std::string& out_path) {
  std::ifstream in(report_path);
  if (!in) throw std::runtime_error("cannot open: " + report_path);
  std::ostringstream text;
  text << in.rdbuf();
  auto j = nlohmann::json::parse(text.str());

  ExperimentReport report;
  for (const auto& t : j.at("per_target")) {
    report.human_only.push_back(
        {t.at("human_only").at("mean").get<double>(), t.at("human_only").at("max").get<double>(), 0});
    report.robot_assisted.push_back({t.at("robot_assisted").at("mean").get<double>(),
                                     t.at("robot_assisted").at("max").get<double>(), 0});
  }
  write_text(out_path, report.bar_chart_svg());
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop robot-assisted ergonomics engine"};
  app.require_subcommand(1);

  std::string frames, calib, out, config, hand = "right";
  bool live = false;
  auto* score_cmd = app.add_subcommand("score", "Score a recorded frame stream");
  score_cmd->add_option("--frames", frames, "JSONL frame stream")->required();
  score_cmd->add_option("--calib", calib, "calibration profile JSON")->required();
  score_cmd->add_option("--out", out, "output CSV path")->required();
  score_cmd->add_option("--config", config, "engine configuration JSON");
  score_cmd->add_option("--hand", hand, "active arm (right|left)");
  score_cmd->add_flag("--live", live, "print a colour-coded live score line");

  std::string scenario, mode, sim_out = "sim_out", sim_config;
  std::uint64_t seed = 0;
  auto* sim_cmd = app.add_subcommand("simulate", "Run one closed-loop scenario");
  sim_cmd->add_option("--scenario", scenario, "scenario JSON")->required();
  sim_cmd->add_option("--mode", mode, "human-only|robot-assisted");
  auto* seed_opt = sim_cmd->add_option("--seed", seed, "echoed into the summary");
  sim_cmd->add_option("--out", sim_out, "output directory");
  sim_cmd->add_option("--config", sim_config, "engine configuration JSON");

  std::string spec, exp_out = "experiment_out", exp_config;
  bool svg = false;
  auto* exp_cmd = app.add_subcommand("experiment", "Run the six-target box experiment");
  exp_cmd->add_option("--spec", spec, "experiment spec JSON (default layout when omitted)");
  exp_cmd->add_option("--out", exp_out, "output directory");
  exp_cmd->add_option("--config", exp_config, "engine configuration JSON");
  exp_cmd->add_flag("--svg", svg, "also write a bar chart SVG");

  std::string report, plot_out = "chart.svg";
  auto* plot_cmd = app.add_subcommand("plot", "Render the report bar chart as SVG");
  plot_cmd->add_option("--report", report, "experiment report JSON")->required();
  plot_cmd->add_option("--out", plot_out, "output SVG path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (score_cmd->parsed()) return cmd_score(frames, calib, out, config, hand, live);
    if (sim_cmd->parsed())
      return cmd_simulate(scenario, mode, seed, seed_opt->count() > 0, sim_out, sim_config);
    if (exp_cmd->parsed()) return cmd_experiment(spec, exp_out, exp_config, svg);
    if (plot_cmd->parsed()) return cmd_plot(report, plot_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
