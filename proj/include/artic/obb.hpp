#pragma once

#include <array>

#include "artic/types.hpp"

namespace artic {

/// Oriented bounding box from a principal-component fit.
///
/// The frame holds the three principal axes ordered by descending
/// eigenvalue of the point covariance, sign-canonicalized and forced
/// right-handed. Every input point lies inside the box inflated by
/// 1e-6 * diagonal.
struct OrientedBox {
  Point3 center = Point3::Zero();
  std::array<Vec3, 3> frame = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  std::array<double, 3> half_extents = {0.0, 0.0, 0.0};

  double diagonal() const {
    return 2.0 * Vec3(half_extents[0], half_extents[1], half_extents[2]).norm();
  }
  /// Largest |coordinate| of `p` expressed in the box frame, minus the
  /// matching half extent; <= 0 means inside.
  double signed_excess(const Point3& p) const;
};

/// Candidate axis placements read off an oriented box: the box center plus
/// its six face centers as origins, and the three principal axes with their
/// negations as directions. Face centers of a zero extent collapse onto the
/// center; duplicates are kept so candidate indices stay stable.
struct CandidateSet {
  std::array<Point3, 7> origins;
  std::array<Vec3, 6> directions;
};

/// PCA-based oriented bounding box.
///
/// The frame comes from the eigenvectors of the covariance about the
/// centroid (two-pass, double precision); the center is the midpoint of the
/// per-axis projection ranges and the half extents are half those ranges.
/// Eigenvalue ties break by lexicographic comparison of the (sign
/// canonicalized) eigenvectors; the frame is made right-handed by flipping
/// the last axis.
///
/// Throws DegenerateGeometryError (carrying the covariance rank) for fewer
/// than 3 points or collinear/coincident input.
OrientedBox fit_obb(const PointCloud& cloud);

/// Origin/direction candidates of a fitted box: exactly 7 origins and
/// 6 directions. origins[0] is the center; origins[1 + 2i], origins[2 + 2i]
/// are the +/- face centers along frame axis i; directions[2i], directions[2i+1]
/// are +/- frame axis i.
CandidateSet enumerate_candidates(const OrientedBox& box);

}  // namespace artic
