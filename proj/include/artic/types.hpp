#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "artic/error.hpp"

namespace artic {

using Vec3 = Eigen::Vector3d;
using Point3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Tolerance for the unit-direction invariant on motion axes.
inline constexpr double kUnitTol = 1e-9;

enum class PartLabel : std::uint8_t { Static = 0, Dynamic = 1 };

enum class MotionKind { Revolute, Prismatic };

const char* to_string(MotionKind kind);

/// Ordered set of 3D points with optional per-point part labels.
struct PointCloud {
  std::vector<Point3> points;
  std::optional<std::vector<PartLabel>> labels;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Motion type plus the axis line it acts about.
///
/// For prismatic motion the origin is a reporting convention only (by
/// convention the dynamic-part centroid); the transform depends solely on
/// the direction. Angles are radians everywhere inside the library;
/// degrees appear only at CLI/report boundaries.
struct MotionAxis {
  MotionKind kind = MotionKind::Revolute;
  Vec3 direction = Vec3::UnitX();
  Point3 origin = Point3::Zero();
};

/// Per-frame articulation amount: radians for revolute motion, model units
/// for prismatic motion.
using MotionMagnitude = double;

inline bool is_unit(const Vec3& v, double tol = kUnitTol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

/// Throws InvalidAxisError unless the axis direction is unit length.
void validate_axis(const MotionAxis& axis);

/// Axis-aligned bounding box accumulator.
struct Bounds3 {
  Point3 min = Point3::Constant(std::numeric_limits<double>::infinity());
  Point3 max = Point3::Constant(-std::numeric_limits<double>::infinity());

  void extend(const Point3& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  bool valid() const { return (min.array() <= max.array()).all(); }
  Point3 center() const { return 0.5 * (min + max); }
  Vec3 extent() const { return max - min; }
  double diagonal() const { return valid() ? (max - min).norm() : 0.0; }
};

Bounds3 bounds_of(const std::vector<Point3>& points);

inline Bounds3 bounds_of(const PointCloud& cloud) {
  return bounds_of(cloud.points);
}

/// Bounding-box diagonal of a cloud; zero for an empty cloud.
inline double bbox_diagonal(const PointCloud& cloud) {
  return bounds_of(cloud).diagonal();
}

Point3 centroid(const PointCloud& cloud);

inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

}  // namespace artic
