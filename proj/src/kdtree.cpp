#include "artic/kdtree.hpp"

#include <algorithm>
#include <limits>

namespace artic {

KdTree3::KdTree3(const std::vector<Point3>& points) : points_(points) {
  if (points_.empty()) {
    throw EmptyInputError("kd-tree over empty cloud");
  }
  nodes_.reserve(2 * points_.size() / kLeafSize + 2);
  root_ = build(0, static_cast<std::uint32_t>(points_.size()));
}

std::uint32_t KdTree3::build(std::uint32_t begin, std::uint32_t end) {
  const std::uint32_t index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();

  if (end - begin <= kLeafSize) {
    nodes_[index] = Node{0.0, -1, begin, end};
    return index;
  }

  Bounds3 bounds;
  for (std::uint32_t i = begin; i < end; ++i) {
    bounds.extend(points_[i]);
  }
  const Vec3 extent = bounds.extent();
  int dim = 0;
  if (extent.y() > extent.x()) dim = 1;
  if (extent.z() > extent[dim]) dim = 2;

  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(points_.begin() + begin, points_.begin() + mid,
                   points_.begin() + end,
                   [dim](const Point3& a, const Point3& b) { return a[dim] < b[dim]; });
  const double split = points_[mid][dim];

  const std::uint32_t left = build(begin, mid);
  const std::uint32_t right = build(mid, end);
  nodes_[index] = Node{split, dim, left, right};
  return index;
}

void KdTree3::search(std::uint32_t node_index, const Point3& query,
                     double& best_sq) const {
  const Node& node = nodes_[node_index];
  if (node.dim < 0) {
    for (std::uint32_t i = node.left; i < node.right; ++i) {
      const double d = (points_[i] - query).squaredNorm();
      if (d < best_sq) {
        best_sq = d;
      }
    }
    return;
  }

  const double delta = query[node.dim] - node.split;
  const std::uint32_t near = delta < 0.0 ? node.left : node.right;
  const std::uint32_t far = delta < 0.0 ? node.right : node.left;
  search(near, query, best_sq);
  if (delta * delta < best_sq) {
    search(far, query, best_sq);
  }
}

double KdTree3::nearest_sq(const Point3& query) const {
  double best = std::numeric_limits<double>::infinity();
  search(root_, query, best);
  return best;
}

}  // namespace artic
