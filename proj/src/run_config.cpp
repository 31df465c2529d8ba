#include <ergoloop/run_config.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ergoloop {

using nlohmann::json;

void RunConfig::validate() const {
  if (planner.trigger_score < 2 || planner.trigger_score > 9)
    throw std::invalid_argument("trigger_score outside [2, 9]");
  for (double v : {scoring.upper_sagittal_band, scoring.abduction_threshold,
                   scoring.transversal_threshold, scoring.wrist_band,
                   scoring.wrist_deadband, planner.hold_time_s, planner.settle_time_s,
                   planner.gain, planner.tool_length_m, planner.upper_sagittal_threshold,
                   planner.upper_coronal_threshold, planner.lower_transversal_threshold,
                   planner.wrist_transversal_threshold, planner.wrist_sagittal_threshold,
                   motion.v_max, motion.omega_max})
    if (!(v > 0.0)) throw std::invalid_argument("configuration values must be positive");
  if (planner.gain > 1.0) throw std::invalid_argument("gain outside (0, 1]");
}

std::string RunConfig::to_json() const {
  json j;
  j["scoring"] = {{"upper_sagittal_band", scoring.upper_sagittal_band},
                  {"upper_mid", scoring.upper_mid},
                  {"upper_high", scoring.upper_high},
                  {"abduction_threshold", scoring.abduction_threshold},
                  {"lower_band", json::array({scoring.lower_band_lo, scoring.lower_band_hi})},
                  {"transversal_threshold", scoring.transversal_threshold},
                  {"wrist_band", scoring.wrist_band},
                  {"wrist_deadband", scoring.wrist_deadband}};
  j["planner"] = {{"trigger_score", planner.trigger_score},
                  {"hold_time_s", planner.hold_time_s},
                  {"settle_time_s", planner.settle_time_s},
                  {"gain", planner.gain},
                  {"tool_length_m", planner.tool_length_m},
                  {"upper_sagittal_threshold", planner.upper_sagittal_threshold},
                  {"upper_coronal_threshold", planner.upper_coronal_threshold},
                  {"lower_transversal_threshold", planner.lower_transversal_threshold},
                  {"wrist_transversal_threshold", planner.wrist_transversal_threshold},
                  {"wrist_sagittal_threshold", planner.wrist_sagittal_threshold},
                  {"lower_band", json::array({planner.lower_band_lo, planner.lower_band_hi})}};
  j["motion"] = {{"v_max", motion.v_max}, {"omega_max", motion.omega_max}};
  j["workspace"] = {{"min", json::array({workspace.min.x, workspace.min.y, workspace.min.z})},
                    {"max", json::array({workspace.max.x, workspace.max.y, workspace.max.z})}};
  return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
  json j = json::parse(text);
  RunConfig c;
  if (j.contains("scoring")) {
    const json& s = j["scoring"];
    c.scoring.upper_sagittal_band = s.value("upper_sagittal_band", 20.0);
    c.scoring.upper_mid = s.value("upper_mid", 45.0);
    c.scoring.upper_high = s.value("upper_high", 90.0);
    c.scoring.abduction_threshold = s.value("abduction_threshold", 10.0);
    if (s.contains("lower_band")) {
      c.scoring.lower_band_lo = s["lower_band"].at(0).get<double>();
      c.scoring.lower_band_hi = s["lower_band"].at(1).get<double>();
    }
    c.scoring.transversal_threshold = s.value("transversal_threshold", 10.0);
    c.scoring.wrist_band = s.value("wrist_band", 15.0);
    c.scoring.wrist_deadband = s.value("wrist_deadband", 5.0);
  }
  if (j.contains("planner")) {
    const json& p = j["planner"];
    c.planner.trigger_score = p.value("trigger_score", 2);
    c.planner.hold_time_s = p.value("hold_time_s", 1.0);
    c.planner.settle_time_s = p.value("settle_time_s", 3.0);
    c.planner.gain = p.value("gain", 1.0);
    c.planner.tool_length_m = p.value("tool_length_m", 0.25);
    c.planner.upper_sagittal_threshold = p.value("upper_sagittal_threshold", 20.0);
    c.planner.upper_coronal_threshold = p.value("upper_coronal_threshold", 10.0);
    c.planner.lower_transversal_threshold = p.value("lower_transversal_threshold", 10.0);
    c.planner.wrist_transversal_threshold = p.value("wrist_transversal_threshold", 10.0);
    c.planner.wrist_sagittal_threshold = p.value("wrist_sagittal_threshold", 10.0);
    if (p.contains("lower_band")) {
      c.planner.lower_band_lo = p["lower_band"].at(0).get<double>();
      c.planner.lower_band_hi = p["lower_band"].at(1).get<double>();
    }
  }
  if (j.contains("motion")) {
    c.motion.v_max = j["motion"].value("v_max", 0.1);
    c.motion.omega_max = j["motion"].value("omega_max", 30.0);
  }
  if (j.contains("workspace")) {
    const json& w = j["workspace"];
    c.workspace.min = {w.at("min").at(0), w.at("min").at(1), w.at("min").at(2)};
    c.workspace.max = {w.at("max").at(0), w.at("max").at(1), w.at("max").at(2)};
  }
  c.validate();
  return c;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace ergoloop
