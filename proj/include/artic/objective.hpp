#pragma once

#include <memory>
#include <vector>

#include "artic/kdtree.hpp"
#include "artic/types.hpp"

namespace artic {

/// Chamfer objective for one dynamic part against observed frames, built
/// for repeated evaluation at many candidate motions.
///
/// Trees over the rest part and each frame are built once. A rigid motion T
/// preserves distances, so the backward chamfer term is evaluated by pulling
/// frame points back through T^-1 and querying the rest tree; no tree is
/// ever rebuilt inside a search loop. Values match the public
/// chamfer_distance up to floating-point roundoff (~1e-15 relative).
class SequenceObjective {
 public:
  SequenceObjective(PointCloud rest_dynamic, const std::vector<PointCloud>& frames);

  /// Chamfer between the rest part moved by (axis, magnitude) and frame t.
  double frame_loss(const MotionAxis& axis, double magnitude, std::size_t t) const;

  /// Sum of frame losses; magnitudes must have one entry per frame.
  double total_loss(const MotionAxis& axis, const std::vector<double>& magnitudes) const;

  std::size_t frame_count() const { return frames_.size(); }
  const PointCloud& rest_dynamic() const { return rest_; }
  const PointCloud& frame(std::size_t t) const { return frames_[t]; }

  /// Bounding-box diagonal of the rest part; the scale for magnitude
  /// ranges and optimizer steps.
  double rest_diagonal() const { return rest_diagonal_; }

 private:
  PointCloud rest_;
  std::vector<PointCloud> frames_;
  std::unique_ptr<KdTree3> rest_tree_;
  std::vector<std::unique_ptr<KdTree3>> frame_trees_;
  double rest_diagonal_ = 0.0;
};

}  // namespace artic
