#pragma once

#include <vector>

#include "artic/types.hpp"

namespace artic {

/// Estimator input: the labeled rest-state cloud of the whole object plus
/// the time-ordered dynamic-part clouds of the intermediate states.
struct ObservedSequence {
  PointCloud rest;                 // labeled Static/Dynamic
  std::vector<PointCloud> frames;  // dynamic part only, one per state
};

/// Throws unless the sequence has at least one non-empty frame and the rest
/// cloud carries both Static and Dynamic labels.
void validate_sequence(const ObservedSequence& seq);

/// Points of a labeled cloud with the given label (labels stripped).
PointCloud select_part(const PointCloud& labeled, PartLabel label);

inline PointCloud dynamic_part(const PointCloud& labeled) {
  return select_part(labeled, PartLabel::Dynamic);
}
inline PointCloud static_part(const PointCloud& labeled) {
  return select_part(labeled, PartLabel::Static);
}

}  // namespace artic
