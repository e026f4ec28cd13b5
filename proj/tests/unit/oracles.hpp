// Test-only reference implementations and generators. These stay
// independent of the library's accelerated paths so they can vouch for
// them.
#pragma once

#include <vector>

#include "artic/rng.hpp"
#include "artic/types.hpp"

namespace artic::testing {

/// O(n^2) chamfer reference: squared distances, mean per direction, both
/// directions summed. No spatial index involved.
inline double brute_chamfer(const PointCloud& a, const PointCloud& b) {
  auto one_way = [](const std::vector<Point3>& from, const std::vector<Point3>& to) {
    double sum = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) {
        best = std::min(best, (p - q).squaredNorm());
      }
      sum += best;
    }
    return sum / static_cast<double>(from.size());
  };
  return one_way(a.points, b.points) + one_way(b.points, a.points);
}

inline PointCloud random_cloud(RngStream& rng, int count, double scale = 1.0) {
  PointCloud cloud;
  cloud.points.reserve(count);
  for (int i = 0; i < count; ++i) {
    cloud.points.emplace_back(scale * rng.uniform(-1.0, 1.0),
                              scale * rng.uniform(-1.0, 1.0),
                              scale * rng.uniform(-1.0, 1.0));
  }
  return cloud;
}

/// Points uniform in an axis-aligned box of the given full extents,
/// centered at the origin.
inline PointCloud random_box_cloud(RngStream& rng, int count, const Vec3& dims) {
  PointCloud cloud;
  cloud.points.reserve(count);
  for (int i = 0; i < count; ++i) {
    cloud.points.emplace_back(0.5 * dims.x() * rng.uniform(-1.0, 1.0),
                              0.5 * dims.y() * rng.uniform(-1.0, 1.0),
                              0.5 * dims.z() * rng.uniform(-1.0, 1.0));
  }
  return cloud;
}

inline Vec3 random_unit(RngStream& rng) {
  for (;;) {
    const Vec3 v(rng.normal(), rng.normal(), rng.normal());
    if (v.norm() > 1e-6) {
      return v.normalized();
    }
  }
}

/// Random rotation matrix (uniform axis, uniform angle).
inline Mat3 random_rotation(RngStream& rng);

}  // namespace artic::testing

#include "artic/motion.hpp"

namespace artic::testing {

inline Mat3 random_rotation(RngStream& rng) {
  return rotation_about(random_unit(rng), rng.uniform(-M_PI, M_PI));
}

inline PointCloud transformed(const PointCloud& cloud, const Mat3& rot, const Vec3& t) {
  PointCloud out;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) {
    out.points.emplace_back(rot * p + t);
  }
  out.labels = cloud.labels;
  return out;
}

}  // namespace artic::testing
