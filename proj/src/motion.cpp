#include "artic/motion.hpp"

#include <cmath>

namespace artic {

namespace {

void check_magnitude(double magnitude) {
  if (!std::isfinite(magnitude)) {
    throw Error("motion magnitude is not finite");
  }
}

}  // namespace

Mat3 rotation_about(const Vec3& direction, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Vec3& k = direction;

  Mat3 cross;
  cross << 0.0, -k.z(), k.y(),
           k.z(), 0.0, -k.x(),
          -k.y(), k.x(), 0.0;

  return c * Mat3::Identity() + s * cross + (1.0 - c) * (k * k.transpose());
}

PointCloud apply_revolute(const PointCloud& cloud, const MotionAxis& axis,
                          MotionMagnitude angle) {
  if (axis.kind != MotionKind::Revolute) {
    throw KindMismatchError("apply_revolute requires a revolute axis");
  }
  validate_axis(axis);
  check_magnitude(angle);
  if (angle == 0.0) {
    return cloud;  // keep the zero-motion frame bitwise equal to the input
  }

  const Mat3 rot = rotation_about(axis.direction, angle);
  PointCloud out;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) {
    out.points.emplace_back(axis.origin + rot * (p - axis.origin));
  }
  out.labels = cloud.labels;
  return out;
}

PointCloud apply_prismatic(const PointCloud& cloud, const MotionAxis& axis,
                           MotionMagnitude displacement) {
  if (axis.kind != MotionKind::Prismatic) {
    throw KindMismatchError("apply_prismatic requires a prismatic axis");
  }
  validate_axis(axis);
  check_magnitude(displacement);
  if (displacement == 0.0) {
    return cloud;
  }

  const Vec3 shift = displacement * axis.direction;
  PointCloud out;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) {
    out.points.emplace_back(p + shift);
  }
  out.labels = cloud.labels;
  return out;
}

PointCloud apply_motion(const PointCloud& cloud, const MotionAxis& axis,
                        MotionMagnitude magnitude) {
  return axis.kind == MotionKind::Revolute
             ? apply_revolute(cloud, axis, magnitude)
             : apply_prismatic(cloud, axis, magnitude);
}

}  // namespace artic
