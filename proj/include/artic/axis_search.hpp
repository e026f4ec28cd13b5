#pragma once

#include <vector>

#include "artic/obb.hpp"
#include "artic/objective.hpp"
#include "artic/sequence.hpp"
#include "artic/types.hpp"

namespace artic {

/// One candidate motion with its best-fit per-frame magnitudes and the
/// summed chamfer residual against the observed frames.
struct Hypothesis {
  MotionAxis axis;
  std::vector<MotionMagnitude> magnitudes;
  double residual = 0.0;
  int origin_index = -1;     // into CandidateSet::origins
  int direction_index = -1;  // into CandidateSet::directions
};

struct SearchOptions {
  /// Motion kinds to search, in order. Defaults to both.
  std::vector<MotionKind> kinds = {MotionKind::Revolute, MotionKind::Prismatic};
  /// Residuals closer than this are ties, broken by candidate index
  /// (origin-major, direction-minor, revolute before prismatic).
  double tie_tolerance = 1e-12;
};

/// Result of the discrete candidate search: the winning hypothesis plus the
/// full ranking (42 hypotheses per searched kind).
struct EstimateReport {
  Hypothesis best;
  std::vector<Hypothesis> ranked;  // non-decreasing residual (ties may
                                   // reorder within tie_tolerance)
  CandidateSet candidates;
  double timing_s = 0.0;
};

struct MagnitudeFit {
  MotionMagnitude magnitude = 0.0;
  double chamfer = 0.0;
};

/// Magnitude-fit search ranges: 64-sample coarse grid over [-pi, pi] for
/// revolute motion and [-D, D] for prismatic motion (D = rest-cloud
/// bounding-box diagonal), then golden-section refinement of the bracket
/// around the best sample down to this interval width.
inline constexpr int kMagnitudeGridSamples = 64;
inline constexpr double kMagnitudeRefineWidth = 1e-4;

/// Best-fit motion magnitude moving `rest_dynamic` onto `frame` along
/// `axis`, and the chamfer value achieved there.
MagnitudeFit fit_magnitude(const PointCloud& rest_dynamic, const PointCloud& frame,
                           const MotionAxis& axis);

/// Same fit against frame `t` of a prebuilt objective (no tree rebuilds);
/// the reported chamfer comes from the objective's evaluator.
MagnitudeFit fit_magnitude(const SequenceObjective& objective, const MotionAxis& axis,
                           std::size_t t);

/// Exhaustive search over OBB candidates x motion kinds. Fits the OBB to
/// the dynamic part of the rest cloud, enumerates the 7x6 candidate set,
/// fits per-frame magnitudes independently for every (origin, direction,
/// kind) triple, and ranks hypotheses by summed residual.
EstimateReport search(const ObservedSequence& seq, const SearchOptions& opts = {});

}  // namespace artic
