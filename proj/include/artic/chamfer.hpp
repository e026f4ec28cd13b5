#pragma once

#include <vector>

#include "artic/types.hpp"

namespace artic {

/// Symmetric chamfer distance between two clouds.
///
/// Convention: squared distances, mean-reduced per direction, both
/// directions summed. value = forward_term + backward_term, where
/// forward_term = mean over p in a of min over q in b of |p-q|^2.
struct ChamferResult {
  double value = 0.0;
  double forward_term = 0.0;
  double backward_term = 0.0;
};

/// Exact symmetric chamfer distance. Throws EmptyInputError when either
/// cloud has no points.
ChamferResult chamfer_distance(const PointCloud& a, const PointCloud& b);

/// Sum of per-frame chamfer values over two frame-aligned sequences.
/// Throws FrameCountError on length mismatch.
double chamfer_sequence(const std::vector<PointCloud>& pred,
                        const std::vector<PointCloud>& obs);

}  // namespace artic
