#include "artic/types.hpp"

namespace artic {

const char* to_string(MotionKind kind) {
  return kind == MotionKind::Revolute ? "revolute" : "prismatic";
}

void validate_axis(const MotionAxis& axis) {
  if (!axis.direction.allFinite() || !is_unit(axis.direction)) {
    throw InvalidAxisError("motion axis direction is not unit length");
  }
  if (!axis.origin.allFinite()) {
    throw InvalidAxisError("motion axis origin is not finite");
  }
}

Bounds3 bounds_of(const std::vector<Point3>& points) {
  Bounds3 b;
  for (const auto& p : points) {
    b.extend(p);
  }
  return b;
}

Point3 centroid(const PointCloud& cloud) {
  if (cloud.empty()) {
    throw EmptyInputError("centroid of empty cloud");
  }
  Point3 sum = Point3::Zero();
  for (const auto& p : cloud.points) {
    sum += p;
  }
  return sum / static_cast<double>(cloud.size());
}

}  // namespace artic
