#include <ergoloop/reach.hpp>

#include <algorithm>
#include <cmath>

namespace ergoloop {

namespace {

Vec3 mirror_x(const Vec3& v) { return {-v.x, v.y, v.z}; }

// Vertical reach plane through the target, folded into the forward
// hemisphere: targets behind the chest get a negative in-plane distance so
// the elbow keeps its forward flexion branch.
struct PlanarTarget {
  double azimuth = 0.0;  // deg, in (-90, 90]
  double rho = 0.0;      // signed horizontal distance in the plane
  double zeta = 0.0;     // height
};

PlanarTarget planar_target(const Vec3& t) {
  PlanarTarget p;
  p.zeta = t.z;
  double horiz = std::hypot(t.x, t.y);
  if (horiz < 1e-12) return p;
  p.azimuth = atan2d(t.x, t.y);
  p.rho = horiz;
  if (p.azimuth > 90.0) {
    p.azimuth -= 180.0;
    p.rho = -p.rho;
  } else if (p.azimuth < -90.0) {
    p.azimuth += 180.0;
    p.rho = -p.rho;
  }
  return p;
}

// Rotation from the forearm direction to the tool direction, decomposed
// about the forearm-frame vertical then lateral axis.
struct WristDecomb {
  double bend = 0.0;
  double transversal = 0.0;
};

WristDecomb wrist_toward(const Quat& forearm_frame, const Vec3& tool_dir) {
  Vec3 local = forearm_frame.conj().rotate(tool_dir.normalized());
  WristDecomb w;
  w.bend = asind(local.z);
  w.transversal = atan2d(-local.x, local.y);
  return w;
}

}  // namespace

ReachSolver::ReachSolver(const Anthropometrics& anthro, Handedness side,
                         const ArmEnvelope& envelope)
    : anthro_(anthro), side_(side), envelope_(envelope) {
  anthro_.validate();
}

ReachSolver::Planar ReachSolver::planar_two_link(double rho, double zeta, double len1,
                                                 double len2) const {
  Planar p;
  double d = std::hypot(rho, zeta);
  if (d < 1e-9) throw std::domain_error("reach target at the shoulder");
  double d_max = len1 + len2;
  double d_min = std::abs(len1 - len2);
  double d_eff = d;
  if (d > d_max) {
    d_eff = d_max;
    p.saturated = true;
  } else if (d < d_min) {
    d_eff = d_min;
    p.saturated = true;
  }

  double cos_beta = clamp_unit((d_eff * d_eff - len1 * len1 - len2 * len2) /
                               (2.0 * len1 * len2));
  p.beta = acosd(cos_beta);
  if (p.beta > envelope_.beta_s_max) {
    p.beta = envelope_.beta_s_max;
    p.saturated = true;
  }
  double dir = atan2d(rho, -zeta);  // angle of the target from straight down
  p.theta_u = dir - atan2d(len2 * sind(p.beta), len1 + len2 * cosd(p.beta));
  return p;
}

ReachResult ReachSolver::assemble(double azimuth, const Planar& p, double tool_elev,
                                  double tool_yaw, bool has_tool_constraint,
                                  bool saturated) const {
  // 3D directions of the planar solution.
  double s_u = sind(p.theta_u), elev_f = p.theta_u + p.beta;
  Vec3 u{s_u * sind(azimuth), s_u * cosd(azimuth), -cosd(p.theta_u)};
  Vec3 f{sind(elev_f) * sind(azimuth), sind(elev_f) * cosd(azimuth), -cosd(elev_f)};

  ArmConfiguration c;
  double alpha_mag = acosd(-u.z);
  c.alpha_s = (u.y >= 0.0 ? alpha_mag : -alpha_mag);
  c.alpha_c = asind(u.x);
  c.beta_s = p.beta;
  c.beta_t = asind(f.x);
  c.gamma_b = 0.0;
  c.gamma_t = 0.0;

  bool wrist_clamped = false;
  if (has_tool_constraint) {
    // Wrist bends away from the forearm to present the tool along the
    // requested yaw/elevation. Recover the decomposed angles against the
    // actual forearm frame.
    ArmGeometry base = arm_geometry(c, anthro_, Handedness::Right);
    Vec3 tool_dir = rotate_z({0.0, cosd(tool_elev), sind(tool_elev)}, tool_yaw);
    WristDecomb w = wrist_toward(base.forearm_frame, tool_dir);
    c.gamma_b = std::clamp(w.bend, -envelope_.wrist_max, envelope_.wrist_max);
    c.gamma_t = std::clamp(w.transversal, -envelope_.wrist_max, envelope_.wrist_max);
    wrist_clamped = c.gamma_b != w.bend || c.gamma_t != w.transversal;
  }

  ArmGeometry g = arm_geometry(c, anthro_, Handedness::Right);
  ReachResult r;
  r.config = c;
  r.elbow = g.elbow;
  r.hand = g.hand;
  r.tip = g.tip;
  r.saturated = saturated || p.saturated || wrist_clamped;

  if (side_ == Handedness::Left) {
    r.elbow = mirror_x(r.elbow);
    r.hand = mirror_x(r.hand);
    r.tip = mirror_x(r.tip);
  }
  return r;
}

ReachResult ReachSolver::solve_hand(const Vec3& hand_target) const {
  Vec3 t = side_ == Handedness::Left ? mirror_x(hand_target) : hand_target;
  PlanarTarget pt = planar_target(t);
  Planar p = planar_two_link(pt.rho, pt.zeta, anthro_.a, anthro_.b);
  return assemble(pt.azimuth, p, 0.0, 0.0, false, false);
}

ReachResult ReachSolver::solve_tip(const Vec3& tip_target) const {
  Vec3 t = side_ == Handedness::Left ? mirror_x(tip_target) : tip_target;
  PlanarTarget pt = planar_target(t);
  Planar p = planar_two_link(pt.rho, pt.zeta, anthro_.a, anthro_.b + anthro_.tool);
  return assemble(pt.azimuth, p, 0.0, 0.0, false, false);
}

ReachResult ReachSolver::solve_tool(const Vec3& tip_target, double face_yaw_deg) const {
  Vec3 t = side_ == Handedness::Left ? mirror_x(tip_target) : tip_target;
  double yaw = side_ == Handedness::Left ? -face_yaw_deg : face_yaw_deg;

  const double z_lo = -anthro_.a - hand_band_halfwidth_;
  const double z_hi = -anthro_.a + hand_band_halfwidth_;
  const double r_min = std::abs(anthro_.a - anthro_.b) + 1e-6;
  const double r_max = anthro_.a + anthro_.b - 1e-6;

  auto hand_for = [&](double elev) {
    Vec3 tool_dir = rotate_z({0.0, cosd(elev), sind(elev)}, yaw);
    return t - tool_dir * anthro_.tool;
  };
  auto feasible = [&](double elev) {
    Vec3 h = hand_for(elev);
    double d = h.norm();
    return d >= r_min && d <= r_max && h.z >= z_lo && h.z <= z_hi;
  };
  auto wrist_cost = [&](double elev) {
    Vec3 h = hand_for(elev);
    PlanarTarget pt = planar_target(h);
    Planar p = planar_two_link(pt.rho, pt.zeta, anthro_.a, anthro_.b);
    double elev_f = p.theta_u + p.beta;
    Vec3 f{sind(elev_f) * sind(pt.azimuth), sind(elev_f) * cosd(pt.azimuth), -cosd(elev_f)};
    Vec3 tool_dir = rotate_z({0.0, cosd(elev), sind(elev)}, yaw);
    return acosd(f.dot(tool_dir));  // total wrist rotation
  };

  // Scan the tool elevation, then refine around the best feasible sample.
  const double lim = 75.0;
  double best_e = 0.0, best_cost = 1e300;
  bool any = false;
  for (double e = -lim; e <= lim + 1e-9; e += 1.0) {
    if (!feasible(e)) continue;
    double cost = wrist_cost(e);
    if (cost < best_cost - 1e-12) {
      best_cost = cost;
      best_e = e;
      any = true;
    }
  }

  bool fallback = false;
  if (!any) {
    // No elevation keeps the hand in the comfort band; take the elevation
    // closest to the band and report saturation.
    double best_violation = 1e300;
    for (double e = -lim; e <= lim + 1e-9; e += 1.0) {
      Vec3 h = hand_for(e);
      double d = h.norm();
      double v = 0.0;
      v += std::max(0.0, d - r_max) + std::max(0.0, r_min - d);
      v += std::max(0.0, h.z - z_hi) + std::max(0.0, z_lo - h.z);
      if (v < best_violation - 1e-12) {
        best_violation = v;
        best_e = e;
      }
    }
    fallback = true;
  } else {
    // Golden-section refinement on the feasible neighbourhood.
    double lo = best_e - 1.0, hi = best_e + 1.0;
    const double phi = 0.6180339887498949;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    auto cost_or_inf = [&](double e) { return feasible(e) ? wrist_cost(e) : 1e300; };
    double f1 = cost_or_inf(x1), f2 = cost_or_inf(x2);
    for (int i = 0; i < 60; ++i) {
      if (f1 < f2) {
        hi = x2; x2 = x1; f2 = f1;
        x1 = hi - phi * (hi - lo);
        f1 = cost_or_inf(x1);
      } else {
        lo = x1; x1 = x2; f1 = f2;
        x2 = lo + phi * (hi - lo);
        f2 = cost_or_inf(x2);
      }
    }
    best_e = f1 < f2 ? x1 : x2;
  }

  Vec3 h = hand_for(best_e);
  PlanarTarget pt = planar_target(h);
  Planar p = planar_two_link(pt.rho, pt.zeta, anthro_.a, anthro_.b);
  return assemble(pt.azimuth, p, best_e, yaw, true, fallback);
}

}  // namespace ergoloop
