#include <ergoloop/angles.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace ergoloop {

using nlohmann::json;

namespace {

double angle_between(const Vec3& v1, const Vec3& v2, const char* what) {
  double n1 = v1.norm(), n2 = v2.norm();
  if (n1 < 1e-9 || n2 < 1e-9)
    throw std::domain_error(std::string("degenerate limb vector: ") + what);
  return acosd(v1.dot(v2) / (n1 * n2));
}

struct BodyAxes {
  Vec3 right, forward, up;
};

BodyAxes body_axes(const SensorFrame& frame, Handedness side) {
  const Vec3& neck = frame.joint("neck");
  const Vec3& torso = frame.joint("torso");
  const Vec3& shoulder = frame.joint(side_joint(side, "shoulder"));
  Vec3 up = (neck - torso).normalized();
  Vec3 lateral = side == Handedness::Right ? shoulder - neck : neck - shoulder;
  Vec3 right = (lateral - up * lateral.dot(up)).normalized();
  return {right, up.cross(right), up};
}

// Centered mean keeps identical samples bit-exact.
double stable_mean(const std::vector<double>& v) {
  double ref = v.front();
  double acc = 0.0;
  for (double x : v) acc += x - ref;
  return ref + acc / static_cast<double>(v.size());
}

double spread(const std::vector<double>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

double lower_arm_sagittal(const Vec3& hand, const Vec3& elbow, const Vec3& shoulder) {
  return angle_between(hand - elbow, elbow - shoulder, "hand-elbow / elbow-shoulder");
}

double upper_arm_sagittal(const Vec3& torso, const Vec3& neck, const Vec3& elbow,
                          const Vec3& shoulder) {
  return angle_between(torso - neck, elbow - shoulder, "torso-neck / elbow-shoulder");
}

double upper_arm_coronal(const Vec3& neck, const Vec3& elbow, const Vec3& shoulder) {
  return angle_between(neck - shoulder, elbow - shoulder, "neck-shoulder / elbow-shoulder") -
         90.0;
}

double lower_arm_transversal(const Vec3& neck, const Vec3& shoulder, const Vec3& hand,
                             const Vec3& elbow) {
  return 90.0 -
         angle_between(shoulder - neck, hand - elbow, "shoulder-neck / hand-elbow");
}

WristAngles wrist_angles(const Quat& imu_hand, const Quat& imu_forearm, const Quat& r_ref) {
  for (const Quat* q : {&imu_hand, &imu_forearm}) {
    double n = q->norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-6)
      throw std::domain_error("non-unit orientation");
  }
  // Hand orientation expressed in the forearm sensor frame, referenced to the
  // calibration-time relationship between the two sensors.
  Quat rel = imu_forearm.conj() * imu_hand;
  Quat r = (r_ref.conj() * rel).normalized();
  double m[3][3];
  r.to_matrix(m);

  WristAngles out;
  const double s_bend = clamp_unit(m[2][1]);
  if (std::abs(s_bend) >= sind(89.0)) {
    // Gimbal-degenerate: report saturated bend, fold twist into the vertical
    // term.
    out.saturated = true;
    out.bend = s_bend > 0 ? 90.0 : -90.0;
    out.transversal = atan2d(m[1][0], m[0][0]);
    out.twist = 0.0;
    return out;
  }
  out.bend = asind(s_bend);
  out.transversal = atan2d(-m[0][1], m[1][1]);
  out.twist = atan2d(-m[2][0], m[2][2]);
  return out;
}

void CalibrationProfile::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !(tool > 0.0))
    throw std::invalid_argument("calibration limb lengths must be positive");
  if (std::abs(r_ref.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("calibration reference orientation must be unit");
}

std::string CalibrationProfile::to_json() const {
  json j;
  j["a"] = a;
  j["b"] = b;
  j["tool"] = tool;
  j["angle_offsets"] = {{"alpha_s", offsets.alpha_s}, {"alpha_c", offsets.alpha_c},
                        {"beta_s", offsets.beta_s},   {"beta_t", offsets.beta_t},
                        {"gamma_b", offsets.gamma_b}, {"gamma_t", offsets.gamma_t}};
  j["r_ref"] = json::array({r_ref.w, r_ref.x, r_ref.y, r_ref.z});
  j["baseline"] = {{"elbow_hip", baseline_elbow_hip}, {"wrist_elbow", baseline_wrist_elbow}};
  return j.dump(2);
}

CalibrationProfile CalibrationProfile::from_json(const std::string& text) {
  json j = json::parse(text);
  CalibrationProfile p;
  p.a = j.at("a").get<double>();
  p.b = j.at("b").get<double>();
  p.tool = j.at("tool").get<double>();
  const json& o = j.at("angle_offsets");
  p.offsets = {o.at("alpha_s"), o.at("alpha_c"), o.at("beta_s"),
               o.at("beta_t"), o.at("gamma_b"), o.at("gamma_t")};
  const json& q = j.at("r_ref");
  p.r_ref = {q.at(0), q.at(1), q.at(2), q.at(3)};
  p.baseline_elbow_hip = j.at("baseline").at("elbow_hip").get<double>();
  p.baseline_wrist_elbow = j.at("baseline").at("wrist_elbow").get<double>();
  p.validate();
  return p;
}

DeviationFlags compute_flags(const SensorFrame& frame, const CalibrationProfile& calib,
                             Handedness side) {
  BodyAxes axes = body_axes(frame, side);
  const Vec3& torso = frame.joint("torso");
  const Vec3& hip = frame.joint(side_joint(side, "hip"));
  const Vec3& elbow = frame.joint(side_joint(side, "elbow"));
  const Vec3& hand = frame.joint(side_joint(side, "hand"));

  DeviationFlags flags;
  // Torso plane anchored between torso and hip, normal along body forward.
  Vec3 anchor = (torso + hip) * 0.5;
  flags.upper_forward = (elbow - anchor).dot(axes.forward) >= 0.0;
  flags.upper_abducted_lateral =
      calib.baseline_elbow_hip > 0.0 &&
      (elbow - hip).norm() > 1.15 * calib.baseline_elbow_hip;
  Vec3 lateral = side == Handedness::Right ? axes.right : -axes.right;
  flags.forearm_lateral = (hand - elbow).dot(lateral) >= 0.0;
  flags.wrist_up = wrist_angles(frame.imu_hand, frame.imu_forearm, calib.r_ref).bend >= 0.0;
  return flags;
}

ArmAngles compute_arm_angles(const SensorFrame& frame, const CalibrationProfile& calib,
                             Handedness side) {
  validate_frame(frame, side);
  const Vec3& neck = frame.joint("neck");
  const Vec3& torso = frame.joint("torso");
  const Vec3& shoulder = frame.joint(side_joint(side, "shoulder"));
  const Vec3& elbow = frame.joint(side_joint(side, "elbow"));
  const Vec3& hand = frame.joint(side_joint(side, "hand"));

  ArmAngles a;
  a.beta_s = lower_arm_sagittal(hand, elbow, shoulder);
  a.alpha_c = upper_arm_coronal(neck, elbow, shoulder);
  a.beta_t = lower_arm_transversal(neck, shoulder, hand, elbow);

  // arccos is unsigned; the forward flag assigns the sagittal sign.
  double alpha_mag = upper_arm_sagittal(torso, neck, elbow, shoulder);
  DeviationFlags flags = compute_flags(frame, calib, side);
  a.alpha_s = flags.upper_forward ? alpha_mag : -alpha_mag;

  WristAngles w = wrist_angles(frame.imu_hand, frame.imu_forearm, calib.r_ref);
  a.gamma_b = w.bend;
  // Lateral wrist signs mirrored for the left arm: positive always means
  // away from the midline.
  double sgn = side_sign(side);
  a.gamma_t = sgn * w.transversal;
  a.gamma_w = sgn * w.twist;

  a.alpha_s += calib.offsets.alpha_s;
  a.alpha_c += calib.offsets.alpha_c;
  a.beta_s += calib.offsets.beta_s;
  a.beta_t += calib.offsets.beta_t;
  a.gamma_b += calib.offsets.gamma_b;
  a.gamma_t += calib.offsets.gamma_t;
  return a;
}

CalibrationProfile calibrate(const std::vector<SensorFrame>& window, double tool_length,
                             Handedness side) {
  if (window.empty()) throw std::invalid_argument("empty calibration window");
  if (!(tool_length > 0.0)) throw std::invalid_argument("tool length must be positive");

  std::vector<double> av, bv, ehv;
  std::vector<Quat> rels;
  for (const SensorFrame& f : window) {
    validate_frame(f, side);
    const Vec3& s = f.joint(side_joint(side, "shoulder"));
    const Vec3& e = f.joint(side_joint(side, "elbow"));
    const Vec3& h = f.joint(side_joint(side, "hand"));
    const Vec3& hip = f.joint(side_joint(side, "hip"));
    av.push_back((e - s).norm());
    bv.push_back((h - e).norm());
    ehv.push_back((e - hip).norm());
    rels.push_back((f.imu_forearm.conj() * f.imu_hand).normalized());
  }

  // Component mean of the sign-aligned relative quaternions; the window is
  // near-constant so this is well-conditioned.
  Quat ref = rels.front();
  double qw = 0, qx = 0, qy = 0, qz = 0;
  for (Quat q : rels) {
    double d = q.w * ref.w + q.x * ref.x + q.y * ref.y + q.z * ref.z;
    if (d < 0.0) q = {-q.w, -q.x, -q.y, -q.z};
    qw += q.w; qx += q.x; qy += q.y; qz += q.z;
  }
  Quat r_ref = Quat{qw, qx, qy, qz}.normalized();

  CalibrationProfile p;
  p.a = stable_mean(av);
  p.b = stable_mean(bv);
  p.tool = tool_length;
  p.r_ref = r_ref;
  p.baseline_elbow_hip = stable_mean(ehv);
  p.baseline_wrist_elbow = p.b;

  std::vector<double> as, ac, bs, bt, gb, gt;
  for (const SensorFrame& f : window) {
    ArmAngles raw = compute_arm_angles(f, p, side);  // offsets still zero
    as.push_back(raw.alpha_s);
    ac.push_back(raw.alpha_c);
    bs.push_back(raw.beta_s);
    bt.push_back(raw.beta_t);
    gb.push_back(raw.gamma_b);
    gt.push_back(raw.gamma_t);
  }
  for (const auto* v : {&as, &ac, &bs, &bt, &gb, &gt})
    if (spread(*v) > 5.0) throw std::runtime_error("calibration unstable: user moved");

  p.offsets.alpha_s = 0.0 - stable_mean(as);
  p.offsets.alpha_c = 0.0 - stable_mean(ac);
  p.offsets.beta_s = 90.0 - stable_mean(bs);
  p.offsets.beta_t = 0.0 - stable_mean(bt);
  p.offsets.gamma_b = 0.0 - stable_mean(gb);
  p.offsets.gamma_t = 0.0 - stable_mean(gt);
  return p;
}

}  // namespace ergoloop
