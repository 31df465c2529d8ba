#include <ergoloop/skeleton.hpp>

#include <json.hpp>

#include <cmath>
#include <istream>
#include <sstream>

namespace ergoloop {

using nlohmann::json;

namespace {

Vec3 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::runtime_error("expected [x,y,z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Quat quat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::runtime_error("expected [w,x,y,z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

const Vec3& SensorFrame::joint(const std::string& name) const {
  auto it = joints.find(name);
  if (it == joints.end()) throw std::out_of_range("missing joint: " + name);
  return it->second;
}

std::string side_joint(Handedness side, const std::string& base) {
  return (side == Handedness::Right ? "right_" : "left_") + base;
}

std::vector<std::string> required_joints(Handedness side) {
  return {"neck", "torso", side_joint(side, "shoulder"), side_joint(side, "elbow"),
          side_joint(side, "hand"), side_joint(side, "hip")};
}

void validate_frame(const SensorFrame& frame, Handedness side) {
  if (!std::isfinite(frame.t)) throw std::runtime_error("non-finite timestamp");
  for (const auto& name : required_joints(side)) {
    auto it = frame.joints.find(name);
    if (it == frame.joints.end()) throw std::runtime_error("missing joint: " + name);
    if (!it->second.finite()) throw std::runtime_error("non-finite joint: " + name);
  }
  for (const Quat* q : {&frame.imu_hand, &frame.imu_forearm}) {
    double n = q->norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-6)
      throw std::runtime_error("non-unit orientation");
  }
}

FrameStreamResult parse_frame_stream(std::istream& in, Handedness side) {
  FrameStreamResult result;
  std::string line;
  int line_no = 0;
  double last_t = -std::numeric_limits<double>::infinity();
  bool have_last = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    SensorFrame frame;
    try {
      json j = json::parse(line);
      frame.t = j.at("t").get<double>();
      for (auto& [name, pos] : j.at("joints").items()) frame.joints[name] = vec_from_json(pos);
      frame.imu_hand = quat_from_json(j.at("imu_hand"));
      frame.imu_forearm = quat_from_json(j.at("imu_forearm"));
      validate_frame(frame, side);
      if (have_last && !(frame.t > last_t)) throw std::runtime_error("non-monotone timestamp");
    } catch (const json::exception& e) {
      result.issues.push_back({line_no, std::string("malformed record: ") + e.what() +
                                            ", line " + std::to_string(line_no)});
      continue;
    } catch (const std::exception& e) {
      result.issues.push_back(
          {line_no, std::string(e.what()) + ", line " + std::to_string(line_no)});
      continue;
    }
    last_t = frame.t;
    have_last = true;
    result.frames.push_back(std::move(frame));
  }
  return result;
}

std::vector<SensorFrame> parse_frame_stream_strict(std::istream& in, Handedness side) {
  FrameStreamResult r = parse_frame_stream(in, side);
  if (!r.issues.empty()) throw std::runtime_error(r.issues.front().message);
  return std::move(r.frames);
}

std::string frame_to_json_line(const SensorFrame& frame) {
  json j;
  j["t"] = frame.t;
  json joints = json::object();
  for (const auto& [name, pos] : frame.joints) joints[name] = vec_to_json(pos);
  j["joints"] = joints;
  j["imu_hand"] = json::array({frame.imu_hand.w, frame.imu_hand.x, frame.imu_hand.y,
                               frame.imu_hand.z});
  j["imu_forearm"] = json::array({frame.imu_forearm.w, frame.imu_forearm.x,
                                  frame.imu_forearm.y, frame.imu_forearm.z});
  return j.dump();
}

ArmGeometry arm_geometry(const ArmConfiguration& c, const Anthropometrics& anthro,
                         Handedness side) {
  anthro.validate();
  const double sgn = side_sign(side);

  // Upper arm from the two measured constraints: total angle from the trunk
  // axis and the coronal projection. alpha_s's sign picks the forward or
  // backward hemisphere.
  const double ux = sgn * sind(c.alpha_c);
  const double uz = -cosd(c.alpha_s);
  const double uy2 = 1.0 - ux * ux - uz * uz;
  if (uy2 < -1e-9)
    throw std::invalid_argument("arm configuration not representable: |alpha_s| < |alpha_c|");
  const double uy = (c.alpha_s < 0.0 ? -1.0 : 1.0) * std::sqrt(std::max(0.0, uy2));
  const Vec3 u{ux, uy, uz};

  // Forearm: elbow flexion beta_s against the upper arm, transversal
  // projection beta_t against the shoulder line, forward branch.
  const Vec3 x_axis{1.0, 0.0, 0.0};
  const double cu = u.dot(x_axis);
  const double sw = std::sqrt(std::max(0.0, 1.0 - cu * cu));
  if (sw < 1e-9) throw std::invalid_argument("degenerate upper-arm direction");
  const Vec3 w = (x_axis - u * cu) * (1.0 / sw);
  const Vec3 n = u.cross(w);
  const double p = cosd(c.beta_s);
  const double q = (sgn * sind(c.beta_t) - p * cu) / sw;
  const double r2 = 1.0 - p * p - q * q;
  if (r2 < -1e-9)
    throw std::invalid_argument("arm configuration not representable: beta_s/beta_t conflict");
  const double r = -std::sqrt(std::max(0.0, r2));
  const Vec3 f = u * p + w * q + n * r;

  ArmGeometry g;
  g.upper_dir = u;
  g.forearm_dir = f;
  g.elbow = u * anthro.a;
  g.hand = g.elbow + f * anthro.b;

  // Forearm sensor frame: longitudinal = f, lateral from the vertical where
  // possible, body lateral otherwise.
  const Vec3 z_axis{0.0, 0.0, 1.0};
  Vec3 fx = f.cross(z_axis);  // +x at the neutral forward-pointing forearm
  if (fx.norm() < 1e-6) fx = x_axis - f * f.dot(x_axis);
  fx = fx.normalized();
  Vec3 fz = fx.cross(f);
  g.forearm_frame = Quat::from_basis(fx, f, fz);

  // Wrist rotation relative to the forearm: vertical axis first, lateral
  // second. Lateral sign mirrored so positive deviation is away from the
  // midline on both sides.
  Quat wrist = Quat::from_axis_angle({0, 0, 1}, sgn * c.gamma_t) *
               Quat::from_axis_angle({1, 0, 0}, c.gamma_b);
  g.hand_frame = (g.forearm_frame * wrist).normalized();
  g.tool_dir = g.hand_frame.rotate({0.0, 1.0, 0.0});
  g.tip = g.hand + g.tool_dir * anthro.tool;
  return g;
}

SensorFrame synth_frame(const ArmConfiguration& config, const Anthropometrics& anthro,
                        const Vec3& shoulder_world, Handedness side, double t) {
  ArmGeometry g = arm_geometry(config, anthro, side);
  const double sgn = side_sign(side);

  SensorFrame frame;
  frame.t = t;
  const Vec3 S = shoulder_world;
  const Vec3 neck = S + Vec3{-sgn * 0.20, 0.0, 0.0};
  const Vec3 torso = neck + Vec3{0.0, 0.0, -0.25};
  frame.joints["neck"] = neck;
  frame.joints["torso"] = torso;
  frame.joints["head"] = neck + Vec3{0.0, 0.0, 0.18};
  frame.joints[side_joint(side, "shoulder")] = S;
  frame.joints[side_joint(side, "elbow")] = S + g.elbow;
  frame.joints[side_joint(side, "hand")] = S + g.hand;

  const Handedness other = side == Handedness::Right ? Handedness::Left : Handedness::Right;
  const Vec3 other_shoulder = neck + Vec3{-sgn * 0.20, 0.0, 0.0};
  frame.joints[side_joint(other, "shoulder")] = other_shoulder;
  frame.joints[side_joint(other, "elbow")] = other_shoulder + Vec3{0.0, 0.0, -anthro.a};
  frame.joints[side_joint(other, "hand")] = other_shoulder + Vec3{0.0, 0.0, -anthro.a - anthro.b};

  const Vec3 hip = neck + Vec3{sgn * 0.12, 0.0, -0.55};
  const Vec3 other_hip = neck + Vec3{-sgn * 0.12, 0.0, -0.55};
  frame.joints[side_joint(side, "hip")] = hip;
  frame.joints[side_joint(other, "hip")] = other_hip;
  frame.joints[side_joint(side, "knee")] = hip + Vec3{0.0, 0.0, -0.45};
  frame.joints[side_joint(other, "knee")] = other_hip + Vec3{0.0, 0.0, -0.45};
  frame.joints[side_joint(side, "foot")] = hip + Vec3{0.0, 0.0, -0.90};
  frame.joints[side_joint(other, "foot")] = other_hip + Vec3{0.0, 0.0, -0.90};

  frame.imu_forearm = g.forearm_frame;
  frame.imu_hand = g.hand_frame;
  return frame;
}

SensorFrame calibration_frame(const Anthropometrics& anthro, const Vec3& shoulder_world,
                              Handedness side, double t) {
  return synth_frame(ArmConfiguration{}, anthro, shoulder_world, side, t);
}

}  // namespace ergoloop
