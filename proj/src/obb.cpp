#include "artic/obb.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>

namespace artic {

namespace {

// Flip an eigenvector so its largest-magnitude component is positive.
// Eigen's eigenvector signs are arbitrary; this pins them.
Vec3 canonical_sign(const Vec3& v) {
  int dominant = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(v[i]) > std::abs(v[dominant])) {
      dominant = i;
    }
  }
  return v[dominant] < 0.0 ? Vec3(-v) : v;
}

bool lex_greater(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] != b[i]) {
      return a[i] > b[i];
    }
  }
  return false;
}

}  // namespace

double OrientedBox::signed_excess(const Point3& p) const {
  double worst = -std::numeric_limits<double>::infinity();
  const Vec3 rel = p - center;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs(rel.dot(frame[i])) - half_extents[i]);
  }
  return worst;
}

OrientedBox fit_obb(const PointCloud& cloud) {
  const std::size_t n = cloud.size();

  // Two-pass covariance about the centroid.
  Point3 mean = Point3::Zero();
  for (const auto& p : cloud.points) {
    mean += p;
  }
  if (n > 0) {
    mean /= static_cast<double>(n);
  }
  Mat3 cov = Mat3::Zero();
  for (const auto& p : cloud.points) {
    const Vec3 d = p - mean;
    cov += d * d.transpose();
  }
  if (n > 0) {
    cov /= static_cast<double>(n);
  }

  Eigen::SelfAdjointEigenSolver<Mat3> solver(cov);
  const Vec3 eigenvalues = solver.eigenvalues();  // ascending
  const double lambda_max = eigenvalues[2];

  int rank = 0;
  if (lambda_max > 0.0) {
    for (int i = 0; i < 3; ++i) {
      if (eigenvalues[i] > lambda_max * 1e-10) {
        ++rank;
      }
    }
  }
  if (n < 3 || rank < 2) {
    throw DegenerateGeometryError(
        "fit_obb: need at least 3 non-collinear points (covariance rank " +
            std::to_string(rank) + ", " + std::to_string(n) + " points)",
        rank);
  }

  struct Axis {
    double eigenvalue;
    Vec3 vector;
  };
  std::array<Axis, 3> axes;
  for (int i = 0; i < 3; ++i) {
    axes[i] = {eigenvalues[i], canonical_sign(solver.eigenvectors().col(i))};
  }
  std::sort(axes.begin(), axes.end(), [&](const Axis& a, const Axis& b) {
    const double tie = 1e-12 * std::max(lambda_max, 1e-300);
    if (std::abs(a.eigenvalue - b.eigenvalue) > tie) {
      return a.eigenvalue > b.eigenvalue;
    }
    return lex_greater(a.vector, b.vector);
  });

  OrientedBox box;
  for (int i = 0; i < 3; ++i) {
    box.frame[i] = axes[i].vector;
  }
  if (box.frame[0].cross(box.frame[1]).dot(box.frame[2]) < 0.0) {
    box.frame[2] = -box.frame[2];
  }

  // Projection ranges along each axis give center and half extents.
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (const auto& p : cloud.points) {
    for (int i = 0; i < 3; ++i) {
      const double proj = p.dot(box.frame[i]);
      lo[i] = std::min(lo[i], proj);
      hi[i] = std::max(hi[i], proj);
    }
  }
  box.center = Point3::Zero();
  for (int i = 0; i < 3; ++i) {
    box.center += 0.5 * (lo[i] + hi[i]) * box.frame[i];
    box.half_extents[i] = 0.5 * (hi[i] - lo[i]);
  }
  return box;
}

CandidateSet enumerate_candidates(const OrientedBox& box) {
  CandidateSet set;
  set.origins[0] = box.center;
  for (int i = 0; i < 3; ++i) {
    const Vec3 offset = box.half_extents[i] * box.frame[i];
    set.origins[1 + 2 * i] = box.center + offset;
    set.origins[2 + 2 * i] = box.center - offset;
    set.directions[2 * i] = box.frame[i];
    set.directions[2 * i + 1] = -box.frame[i];
  }
  return set;
}

}  // namespace artic
