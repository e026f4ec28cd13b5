#include "artic/objective.hpp"

#include "artic/motion.hpp"

namespace artic {

SequenceObjective::SequenceObjective(PointCloud rest_dynamic,
                                     const std::vector<PointCloud>& frames)
    : rest_(std::move(rest_dynamic)), frames_(frames) {
  if (rest_.empty()) {
    throw EmptyInputError("objective rest part is empty");
  }
  if (frames_.empty()) {
    throw EmptyInputError("objective has no frames");
  }
  rest_tree_ = std::make_unique<KdTree3>(rest_.points);
  frame_trees_.reserve(frames_.size());
  for (const auto& frame : frames_) {
    if (frame.empty()) {
      throw EmptyInputError("objective frame is empty");
    }
    frame_trees_.push_back(std::make_unique<KdTree3>(frame.points));
  }
  rest_diagonal_ = bbox_diagonal(rest_);
}

double SequenceObjective::frame_loss(const MotionAxis& axis, double magnitude,
                                     std::size_t t) const {
  const auto& frame = frames_[t].points;
  const auto& tree_frame = *frame_trees_[t];

  double forward = 0.0;
  double backward = 0.0;

  if (axis.kind == MotionKind::Revolute) {
    const Mat3 rot = rotation_about(axis.direction, magnitude);
    const Mat3 rot_inv = rot.transpose();
    for (const auto& p : rest_.points) {
      forward += tree_frame.nearest_sq(axis.origin + rot * (p - axis.origin));
    }
    for (const auto& q : frame) {
      backward += rest_tree_->nearest_sq(axis.origin + rot_inv * (q - axis.origin));
    }
  } else {
    const Vec3 shift = magnitude * axis.direction;
    for (const auto& p : rest_.points) {
      forward += tree_frame.nearest_sq(p + shift);
    }
    for (const auto& q : frame) {
      backward += rest_tree_->nearest_sq(q - shift);
    }
  }

  return forward / static_cast<double>(rest_.size()) +
         backward / static_cast<double>(frame.size());
}

double SequenceObjective::total_loss(const MotionAxis& axis,
                                     const std::vector<double>& magnitudes) const {
  if (magnitudes.size() != frames_.size()) {
    throw FrameCountError("objective: magnitude count != frame count");
  }
  double total = 0.0;
  for (std::size_t t = 0; t < frames_.size(); ++t) {
    total += frame_loss(axis, magnitudes[t], t);
  }
  return total;
}

}  // namespace artic
