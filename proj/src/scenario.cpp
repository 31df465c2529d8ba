#include <ergoloop/scenario.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ergoloop {

using nlohmann::json;

namespace {

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::runtime_error("expected [x,y,z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json anthro_to_json(const Anthropometrics& a) {
  return {{"a", a.a}, {"b", a.b}, {"tool", a.tool}, {"shoulder_height", a.shoulder_height}};
}

Anthropometrics anthro_from_json(const json& j) {
  Anthropometrics a;
  a.a = j.at("a").get<double>();
  a.b = j.at("b").get<double>();
  a.tool = j.at("tool").get<double>();
  if (j.contains("shoulder_height")) a.shoulder_height = j.at("shoulder_height").get<double>();
  a.validate();
  return a;
}

json pose_to_json(const WorkpiecePose& p) {
  return {{"position", vec_to_json(p.position)}, {"yaw", p.yaw}};
}

WorkpiecePose pose_from_json(const json& j) {
  return {vec_from_json(j.at("position")), j.value("yaw", 0.0)};
}

json target_to_json(const Target& t) {
  json j;
  j["offset"] = vec_to_json(t.offset);
  j["contact"] = t.contact == ContactKind::Hand ? "hand" : "tool";
  if (t.dwell_s > 0.0) j["dwell_s"] = t.dwell_s;
  return j;
}

Target target_from_json(const json& j) {
  Target t;
  t.offset = vec_from_json(j.at("offset"));
  std::string c = j.value("contact", "hand");
  if (c == "hand") {
    t.contact = ContactKind::Hand;
  } else if (c == "tool") {
    t.contact = ContactKind::Tool;
  } else {
    throw std::runtime_error("invalid contact kind: " + c);
  }
  t.dwell_s = j.value("dwell_s", 0.0);
  return t;
}

json motion_to_json(const MotionLimits& m) {
  return {{"v_max", m.v_max}, {"omega_max", m.omega_max}};
}

MotionLimits motion_from_json(const json& j) {
  return {j.value("v_max", 0.1), j.value("omega_max", 30.0)};
}

json box_to_json(const WorkspaceBox& b) {
  return {{"min", vec_to_json(b.min)}, {"max", vec_to_json(b.max)}};
}

WorkspaceBox box_from_json(const json& j) {
  return {vec_from_json(j.at("min")), vec_from_json(j.at("max"))};
}

Handedness side_from_json(const json& j) {
  std::string s = j.value("handedness", "right");
  if (s == "right") return Handedness::Right;
  if (s == "left") return Handedness::Left;
  throw std::runtime_error("invalid handedness: " + s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const char* mode_name(SimMode m) {
  return m == SimMode::HumanOnly ? "human-only" : "robot-assisted";
}

SimMode mode_from_name(const std::string& name) {
  if (name == "human-only") return SimMode::HumanOnly;
  if (name == "robot-assisted") return SimMode::RobotAssisted;
  throw std::runtime_error("invalid mode: " + name + " (expected human-only|robot-assisted)");
}

void Scenario::validate() const {
  anthro.validate();
  if (targets.empty()) throw std::invalid_argument("scenario needs at least one target");
  if (!(dwell_s > 0.0)) throw std::invalid_argument("dwell must be positive");
  if (!(rate_hz > 0.0)) throw std::invalid_argument("rate must be positive");
  if (!workspace.contains(initial_pose.position))
    throw std::invalid_argument("initial workpiece pose outside the workspace box");
}

std::string Scenario::to_json() const {
  json j;
  j["anthropometrics"] = anthro_to_json(anthro);
  j["handedness"] = side == Handedness::Right ? "right" : "left";
  j["initial_pose"] = pose_to_json(initial_pose);
  json ts = json::array();
  for (const Target& t : targets) ts.push_back(target_to_json(t));
  j["targets"] = ts;
  j["dwell_s"] = dwell_s;
  j["mode"] = mode_name(mode);
  j["seed"] = seed;
  j["rate_hz"] = rate_hz;
  j["motion"] = motion_to_json(motion);
  j["workspace"] = box_to_json(workspace);
  return j.dump(2);
}

Scenario Scenario::from_json(const std::string& text) {
  json j = json::parse(text);
  Scenario s;
  s.anthro = anthro_from_json(j.at("anthropometrics"));
  s.side = side_from_json(j);
  s.initial_pose = pose_from_json(j.at("initial_pose"));
  for (const json& t : j.at("targets")) s.targets.push_back(target_from_json(t));
  s.dwell_s = j.value("dwell_s", 20.0);
  if (j.contains("mode")) s.mode = mode_from_name(j.at("mode").get<std::string>());
  s.seed = j.value("seed", std::uint64_t{0});
  s.rate_hz = j.value("rate_hz", 30.0);
  if (j.contains("motion")) s.motion = motion_from_json(j.at("motion"));
  if (j.contains("workspace")) s.workspace = box_from_json(j.at("workspace"));
  s.validate();
  return s;
}

Scenario Scenario::from_json_file(const std::string& path) {
  return from_json(read_file(path));
}

void ExperimentSpec::validate() const {
  anthro.validate();
  if (targets.size() != 6) throw std::invalid_argument("experiment needs exactly 6 targets");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(dwell_s > 0.0)) throw std::invalid_argument("dwell must be positive");
  if (!(box_size.x > 0.0 && box_size.y > 0.0 && box_size.z > 0.0))
    throw std::invalid_argument("box size must be positive");
}

std::string ExperimentSpec::to_json() const {
  json j;
  j["anthropometrics"] = anthro_to_json(anthro);
  j["handedness"] = side == Handedness::Right ? "right" : "left";
  j["initial_pose"] = pose_to_json(initial_pose);
  j["box_size"] = vec_to_json(box_size);
  json ts = json::array();
  for (const Target& t : targets) ts.push_back(target_to_json(t));
  j["targets"] = ts;
  j["trials"] = trials;
  j["dwell_s"] = dwell_s;
  j["rate_hz"] = rate_hz;
  j["load_g"] = load_g;
  j["seed"] = seed;
  j["motion"] = motion_to_json(motion);
  j["workspace"] = box_to_json(workspace);
  return j.dump(2);
}

ExperimentSpec ExperimentSpec::from_json(const std::string& text) {
  json j = json::parse(text);
  ExperimentSpec e;
  e.anthro = anthro_from_json(j.at("anthropometrics"));
  e.side = side_from_json(j);
  e.initial_pose = pose_from_json(j.at("initial_pose"));
  e.box_size = vec_from_json(j.at("box_size"));
  for (const json& t : j.at("targets")) e.targets.push_back(target_from_json(t));
  e.trials = j.value("trials", 3);
  e.dwell_s = j.value("dwell_s", 20.0);
  e.rate_hz = j.value("rate_hz", 30.0);
  e.load_g = j.value("load_g", 900.0);
  e.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("motion")) e.motion = motion_from_json(j.at("motion"));
  if (j.contains("workspace")) e.workspace = box_from_json(j.at("workspace"));
  e.validate();
  return e;
}

ExperimentSpec ExperimentSpec::from_json_file(const std::string& path) {
  return from_json(read_file(path));
}

ExperimentSpec ExperimentSpec::default_spec() {
  // Box centre in front of the torso; odd marks sit on the bottom face where
  // a no-trunk reach runs out of arm, even marks on the top face at a
  // comfortable height. Coordinates frozen from a pilot sweep.
  ExperimentSpec e;
  e.initial_pose = {{0.0, 0.44, -0.42}, 0.0};
  e.box_size = {0.4, 0.3, 0.3};
  const double y_local = -0.14;  // toward the user from the box centre
  const double z_top = 0.15, z_bottom = -0.15;
  e.targets = {
      Target{{-0.04, y_local, z_bottom}, ContactKind::Hand},  // 1
      Target{{-0.04, y_local, z_top}, ContactKind::Hand},     // 2
      Target{{0.0, y_local, z_bottom}, ContactKind::Hand},    // 3
      Target{{0.0, y_local, z_top}, ContactKind::Hand},       // 4
      Target{{0.04, y_local, z_bottom}, ContactKind::Hand},   // 5
      Target{{0.04, y_local, z_top}, ContactKind::Hand},      // 6
  };
  return e;
}

}  // namespace ergoloop
