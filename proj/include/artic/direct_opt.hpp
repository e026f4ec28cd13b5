#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "artic/axis_search.hpp"
#include "artic/sequence.hpp"
#include "artic/types.hpp"

namespace artic {

/// Settings for the continuous chamfer descent.
///
/// step_size scales per block: origin and magnitude steps are
/// step_size * diagonal (rest-part bounding-box diagonal), direction steps
/// are step_size radians-equivalent on the unit sphere. fd_step is the
/// central-difference step as a fraction of the same diagonal.
struct OptimizerConfig {
  int max_iters = 500;
  double step_size = 0.1;
  int restarts = 8;
  double fd_step = 1e-4;
  double convergence_tol = 1e-8;  // relative loss change over 10 iterations
  std::uint64_t seed = 0;
  /// Start restart 0 from the discrete-search winner instead of a random
  /// direction. Off by default so the two estimators stay independent.
  bool seed_from_algo = false;
};

/// Descent record of the winning restart.
struct OptTrace {
  double initial_loss = 0.0;
  std::vector<double> losses;  // accepted loss after each iteration
  int restart_index = -1;
  std::vector<double> restart_final_losses;  // one per restart
};

/// Minimizes the summed chamfer loss over axis direction, origin, and
/// per-frame magnitudes by projected gradient descent with backtracking.
/// Gradients are central finite differences; the direction is renormalized
/// to the unit sphere after every step. Runs cfg.restarts independent
/// restarts and returns the best.
///
/// Throws NumericalError (with the iteration index) if the loss turns
/// non-finite on degenerate input.
std::pair<Hypothesis, OptTrace> optimize(const ObservedSequence& seq, MotionKind kind,
                                         const OptimizerConfig& cfg = {});

}  // namespace artic
