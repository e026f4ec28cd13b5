#include "artic/chamfer.hpp"

#include "artic/kdtree.hpp"

namespace artic {

namespace {

double mean_nearest_sq(const std::vector<Point3>& from, const KdTree3& to) {
  double sum = 0.0;
  for (const auto& p : from) {
    sum += to.nearest_sq(p);
  }
  return sum / static_cast<double>(from.size());
}

}  // namespace

ChamferResult chamfer_distance(const PointCloud& a, const PointCloud& b) {
  if (a.empty() || b.empty()) {
    throw EmptyInputError("chamfer_distance requires two non-empty clouds");
  }
  const KdTree3 tree_a(a.points);
  const KdTree3 tree_b(b.points);

  ChamferResult result;
  result.forward_term = mean_nearest_sq(a.points, tree_b);
  result.backward_term = mean_nearest_sq(b.points, tree_a);
  result.value = result.forward_term + result.backward_term;
  return result;
}

double chamfer_sequence(const std::vector<PointCloud>& pred,
                        const std::vector<PointCloud>& obs) {
  if (pred.size() != obs.size()) {
    throw FrameCountError("chamfer_sequence: " + std::to_string(pred.size()) +
                          " predicted frames vs " + std::to_string(obs.size()) +
                          " observed");
  }
  if (pred.empty()) {
    throw FrameCountError("chamfer_sequence: empty frame lists");
  }
  double total = 0.0;
  for (std::size_t t = 0; t < pred.size(); ++t) {
    total += chamfer_distance(pred[t], obs[t]).value;
  }
  return total;
}

}  // namespace artic
