#include <doctest.h>

#include <ergoloop/angles.hpp>
#include <ergoloop/scenario.hpp>
#include <ergoloop/skeleton.hpp>
#include <ergoloop/trace.hpp>

#include "test_helpers.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ergoloop;
using namespace ergoloop::testing;
namespace fs = std::filesystem;

namespace {

fs::path make_temp_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("ergoloop_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(ERGOLOOP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_stream(const fs::path& p, const std::vector<SensorFrame>& frames) {
  std::ofstream out(p, std::ios::binary);
  for (const SensorFrame& f : frames) out << frame_to_json_line(f) << "\n";
}

}  // namespace

TEST_CASE("score: neutral stream yields all-ones rows and exit 0") {
  fs::path dir = make_temp_dir("score_neutral");
  Anthropometrics anthro;
  std::vector<SensorFrame> frames;
  for (int i = 0; i < 10; ++i)
    frames.push_back(calibration_frame(anthro, default_shoulder(), Handedness::Right, i / 30.0));
  write_stream(dir / "frames.jsonl", frames);
  write_file(dir / "calib.json", identity_profile(anthro).to_json());

  int rc = run_cli("score --frames " + (dir / "frames.jsonl").string() + " --calib " +
                   (dir / "calib.json").string() + " --out " + (dir / "scores.csv").string());
  CHECK(rc == 0);
  std::ifstream in(dir / "scores.csv");
  Trace tr = read_timeseries(in);
  REQUIRE(tr.records.size() == 10);
  for (const TraceRecord& r : tr.records) CHECK(r.scores.arm_score == 1);
}

TEST_CASE("score: injected flexion segment raises the score") {
  fs::path dir = make_temp_dir("score_flexed");
  Anthropometrics anthro;
  std::vector<SensorFrame> frames;
  for (int i = 0; i < 6; ++i)
    frames.push_back(calibration_frame(anthro, default_shoulder(), Handedness::Right, i / 30.0));
  ArmConfiguration flexed;
  flexed.alpha_s = 30.0;
  for (int i = 6; i < 12; ++i)
    frames.push_back(synth_frame(flexed, anthro, default_shoulder(), Handedness::Right, i / 30.0));
  write_stream(dir / "frames.jsonl", frames);
  write_file(dir / "calib.json", identity_profile(anthro).to_json());

  int rc = run_cli("score --frames " + (dir / "frames.jsonl").string() + " --calib " +
                   (dir / "calib.json").string() + " --out " + (dir / "scores.csv").string());
  CHECK(rc == 0);
  std::ifstream in(dir / "scores.csv");
  Trace tr = read_timeseries(in);
  REQUIRE(tr.records.size() == 12);
  for (size_t i = 6; i < 12; ++i) CHECK(tr.records[i].scores.arm_score >= 2);
}

TEST_CASE("score: missing file exits nonzero") {
  fs::path dir = make_temp_dir("score_missing");
  write_file(dir / "calib.json", identity_profile().to_json());
  int rc = run_cli("score --frames " + (dir / "nope.jsonl").string() + " --calib " +
                   (dir / "calib.json").string() + " --out " + (dir / "out.csv").string());
  CHECK(rc != 0);
}

TEST_CASE("simulate: same seed twice is byte-identical; modes share the schema") {
  fs::path dir = make_temp_dir("simulate");
  Scenario sc;
  sc.mode = SimMode::RobotAssisted;
  sc.dwell_s = 1.0;
  sc.initial_pose = {{0.0, 0.32, 0.18}, 0.0};
  sc.targets = {Target{{0, 0, 0}, ContactKind::Hand}};
  sc.workspace = {{-2, -2, -2}, {2, 2, 2}};
  write_file(dir / "scenario.json", sc.to_json());

  std::string base = "simulate --scenario " + (dir / "scenario.json").string();
  CHECK(run_cli(base + " --mode robot-assisted --seed 7 --out " + (dir / "a").string()) == 0);
  CHECK(run_cli(base + " --mode robot-assisted --seed 7 --out " + (dir / "b").string()) == 0);
  CHECK(slurp(dir / "a" / "trace.csv") == slurp(dir / "b" / "trace.csv"));
  CHECK(slurp(dir / "a" / "summary.json") == slurp(dir / "b" / "summary.json"));

  CHECK(run_cli(base + " --mode human-only --out " + (dir / "h").string()) == 0);
  std::ifstream robot(dir / "a" / "trace.csv"), human(dir / "h" / "trace.csv");
  std::string header_r, header_h;
  std::getline(robot, header_r);
  std::getline(human, header_h);
  CHECK(header_r == header_h);
  std::ifstream human2(dir / "h" / "trace.csv");
  Trace tr = read_timeseries(human2);
  for (const TraceRecord& r : tr.records) CHECK_FALSE(r.command.has_value());
}

TEST_CASE("simulate: invalid mode string exits nonzero") {
  fs::path dir = make_temp_dir("simulate_badmode");
  Scenario sc;
  sc.initial_pose = {{0.0, 0.30, -0.28}, 0.0};
  sc.targets = {Target{{0, 0, 0}, ContactKind::Hand}};
  write_file(dir / "scenario.json", sc.to_json());
  CHECK(run_cli("simulate --scenario " + (dir / "scenario.json").string() +
                " --mode sideways --out " + (dir / "out").string()) != 0);
}

TEST_CASE("experiment: malformed spec names the problem and exits nonzero") {
  fs::path dir = make_temp_dir("experiment_bad");
  write_file(dir / "spec.json", "{\"anthropometrics\": {\"a\": 0.3}}");
  std::string cmd = std::string(ERGOLOOP_CLI_PATH) + " experiment --spec " +
                    (dir / "spec.json").string() + " --out " + (dir / "out").string() +
                    " 2> " + (dir / "err.txt").string();
  int rc = WEXITSTATUS(std::system(cmd.c_str()));
  CHECK(rc != 0);
  CHECK(slurp(dir / "err.txt").find("b") != std::string::npos);
}

TEST_CASE("experiment + plot: outputs exist and the chart renders") {
  fs::path dir = make_temp_dir("experiment_ok");
  ExperimentSpec spec = ExperimentSpec::default_spec();
  spec.dwell_s = 1.0;
  spec.trials = 1;
  write_file(dir / "spec.json", spec.to_json());
  CHECK(run_cli("experiment --spec " + (dir / "spec.json").string() + " --out " +
                (dir / "out").string() + " --svg") == 0);
  CHECK(fs::exists(dir / "out" / "report.json"));
  CHECK(fs::exists(dir / "out" / "bar_data.csv"));
  CHECK(fs::exists(dir / "out" / "chart.svg"));
  CHECK(fs::exists(dir / "out" / "traces" / "human_only_trial1.csv"));
  CHECK(fs::exists(dir / "out" / "traces" / "robot_assisted_trial1.csv"));

  CHECK(run_cli("plot --report " + (dir / "out" / "report.json").string() + " --out " +
                (dir / "replot.svg").string()) == 0);
  CHECK(slurp(dir / "replot.svg").find("<svg") != std::string::npos);
}
