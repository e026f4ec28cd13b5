#pragma once

#include "artic/types.hpp"

namespace artic {

/// Rotation matrix for `angle` radians about the unit vector `direction`,
/// built with the Rodrigues formula. The direction must already be unit.
Mat3 rotation_about(const Vec3& direction, double angle);

/// Rotates every point of `cloud` by `angle` radians about the line
/// {axis.origin + t * axis.direction}. Labels are preserved.
///
/// Throws KindMismatchError unless axis.kind is Revolute, and
/// InvalidAxisError if the direction is not unit length.
PointCloud apply_revolute(const PointCloud& cloud, const MotionAxis& axis,
                          MotionMagnitude angle);

/// Translates every point of `cloud` by `displacement * axis.direction`.
/// The axis origin never affects the result.
PointCloud apply_prismatic(const PointCloud& cloud, const MotionAxis& axis,
                           MotionMagnitude displacement);

/// Dispatches to apply_revolute or apply_prismatic by axis.kind.
PointCloud apply_motion(const PointCloud& cloud, const MotionAxis& axis,
                        MotionMagnitude magnitude);

}  // namespace artic
