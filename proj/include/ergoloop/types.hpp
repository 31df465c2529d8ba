#pragma once

#include <cmath>
#include <stdexcept>

namespace ergoloop {

enum class Handedness { Right, Left };

inline double side_sign(Handedness h) { return h == Handedness::Right ? 1.0 : -1.0; }

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }
inline double sind(double d) { return std::sin(deg2rad(d)); }
inline double cosd(double d) { return std::cos(deg2rad(d)); }
inline double clamp_unit(double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); }
inline double acosd(double v) { return rad2deg(std::acos(clamp_unit(v))); }
inline double asind(double v) { return rad2deg(std::asin(clamp_unit(v))); }
inline double atan2d(double y, double x) { return rad2deg(std::atan2(y, x)); }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    double n = norm();
    if (n < 1e-12) throw std::domain_error("cannot normalize near-zero vector");
    return {x / n, y / n, z / n};
  }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Yaw rotation about +z, angle in degrees.
inline Vec3 rotate_z(const Vec3& v, double yaw_deg) {
  double c = cosd(yaw_deg), s = sind(yaw_deg);
  return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

// Unit quaternion (w, x, y, z). Composition q1 * q2 applies q2 first.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Quat from_axis_angle(const Vec3& axis, double angle_deg) {
    Vec3 a = axis.normalized();
    double h = deg2rad(angle_deg) * 0.5;
    double s = std::sin(h);
    return {std::cos(h), a.x * s, a.y * s, a.z * s};
  }

  Quat conj() const { return {w, -x, -y, -z}; }
  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Quat normalized() const {
    double n = norm();
    if (n < 1e-12) throw std::domain_error("cannot normalize near-zero quaternion");
    return {w / n, x / n, y / n, z / n};
  }

  Quat operator*(const Quat& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }

  Vec3 rotate(const Vec3& v) const {
    Quat p{0.0, v.x, v.y, v.z};
    Quat r = (*this) * p * conj();
    return {r.x, r.y, r.z};
  }

  // Row-major 3x3 rotation matrix.
  void to_matrix(double m[3][3]) const {
    double ww = w * w, xx = x * x, yy = y * y, zz = z * z;
    m[0][0] = ww + xx - yy - zz;
    m[0][1] = 2.0 * (x * y - w * z);
    m[0][2] = 2.0 * (x * z + w * y);
    m[1][0] = 2.0 * (x * y + w * z);
    m[1][1] = ww - xx + yy - zz;
    m[1][2] = 2.0 * (y * z - w * x);
    m[2][0] = 2.0 * (x * z - w * y);
    m[2][1] = 2.0 * (y * z + w * x);
    m[2][2] = ww - xx - yy + zz;
  }

  // Orthonormal basis (columns cx, cy, cz are the images of the local axes).
  static Quat from_basis(const Vec3& cx, const Vec3& cy, const Vec3& cz) {
    double m00 = cx.x, m01 = cy.x, m02 = cz.x;
    double m10 = cx.y, m11 = cy.y, m12 = cz.y;
    double m20 = cx.z, m21 = cy.z, m22 = cz.z;
    double tr = m00 + m11 + m22;
    Quat q;
    if (tr > 0.0) {
      double s = std::sqrt(tr + 1.0) * 2.0;
      q = {0.25 * s, (m21 - m12) / s, (m02 - m20) / s, (m10 - m01) / s};
    } else if (m00 > m11 && m00 > m22) {
      double s = std::sqrt(1.0 + m00 - m11 - m22) * 2.0;
      q = {(m21 - m12) / s, 0.25 * s, (m01 + m10) / s, (m02 + m20) / s};
    } else if (m11 > m22) {
      double s = std::sqrt(1.0 + m11 - m00 - m22) * 2.0;
      q = {(m02 - m20) / s, (m01 + m10) / s, 0.25 * s, (m12 + m21) / s};
    } else {
      double s = std::sqrt(1.0 + m22 - m00 - m11) * 2.0;
      q = {(m10 - m01) / s, (m02 + m20) / s, (m12 + m21) / s, 0.25 * s};
    }
    return q.normalized();
  }
};

}  // namespace ergoloop
