#pragma once

#include <cstdint>
#include <vector>

#include "artic/types.hpp"

namespace artic {

/// Balanced kd-tree over 3D points for exact nearest-neighbor queries.
///
/// Built once per target cloud (median split on the widest dimension,
/// leaves scanned linearly). Queries return the true nearest neighbor,
/// never an approximation. Queries are const and safe to run from several
/// threads at once; construction is single-threaded.
class KdTree3 {
 public:
  explicit KdTree3(const std::vector<Point3>& points);

  /// Exact squared distance from `query` to the closest stored point.
  double nearest_sq(const Point3& query) const;

  std::size_t size() const { return points_.size(); }

 private:
  struct Node {
    double split = 0.0;
    std::int32_t dim = -1;      // -1 marks a leaf
    std::uint32_t left = 0;     // child node, or range begin for leaves
    std::uint32_t right = 0;    // child node, or range end for leaves
  };

  std::uint32_t build(std::uint32_t begin, std::uint32_t end);
  void search(std::uint32_t node, const Point3& query, double& best_sq) const;

  static constexpr std::uint32_t kLeafSize = 16;

  std::vector<Point3> points_;  // permuted into contiguous leaf ranges
  std::vector<Node> nodes_;
  std::uint32_t root_ = 0;
};

}  // namespace artic
