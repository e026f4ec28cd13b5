#include "artic/axis_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "artic/chamfer.hpp"
#include "artic/motion.hpp"
#include "artic/objective.hpp"
#include "artic/parallel.hpp"

namespace artic {

namespace {

template <typename F>
MagnitudeFit golden_refine(F&& f, double a, double b, MagnitudeFit best) {
  constexpr double inv_phi = 0.6180339887498948482;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  auto track = [&best](double x, double fx) {
    if (fx < best.chamfer) {
      best = {x, fx};
    }
  };
  track(x1, f1);
  track(x2, f2);
  while (b - a > kMagnitudeRefineWidth) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
      track(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
      track(x2, f2);
    }
  }
  return best;
}

/// Coarse grid over the symmetric search interval, then golden-section
/// refinement of the bracket around the best sample.
MagnitudeFit fit_magnitude_on(const SequenceObjective& objective,
                              const MotionAxis& axis, std::size_t t) {
  const double half = axis.kind == MotionKind::Revolute
                          ? M_PI
                          : std::max(objective.rest_diagonal(), 1e-12);
  auto f = [&](double m) { return objective.frame_loss(axis, m, t); };

  constexpr int n = kMagnitudeGridSamples;
  MagnitudeFit best{0.0, std::numeric_limits<double>::infinity()};
  for (int k = 0; k < n; ++k) {
    const double m = half * ((2.0 * k - (n - 1)) / (n - 1));
    const double value = f(m);
    if (value < best.chamfer) {
      best = {m, value};
    }
  }
  const double step = 2.0 * half / (n - 1);
  const double lo = std::max(-half, best.magnitude - step);
  const double hi = std::min(half, best.magnitude + step);
  return golden_refine(f, lo, hi, best);
}

int kind_rank(MotionKind kind) { return kind == MotionKind::Revolute ? 0 : 1; }

/// Candidate order for tie-breaking: origin-major, direction-minor,
/// revolute before prismatic.
std::array<int, 3> tie_key(const Hypothesis& h) {
  return {h.origin_index, h.direction_index, kind_rank(h.axis.kind)};
}

/// Signed predominance of positive fitted magnitudes.
double positivity(const Hypothesis& h) {
  int pos = 0;
  int neg = 0;
  double sum = 0.0;
  for (double m : h.magnitudes) {
    pos += m > 0.0;
    neg += m < 0.0;
    sum += m;
  }
  if (pos != neg) {
    return static_cast<double>(pos - neg);
  }
  return sum > 0.0 ? 0.5 : (sum < 0.0 ? -0.5 : 0.0);
}

/// Residual recomputed through the public chamfer path, so the stored value
/// matches chamfer_sequence(transformed part, frames) exactly.
double public_residual(const PointCloud& rest_dynamic,
                       const std::vector<PointCloud>& frames,
                       const Hypothesis& h) {
  double total = 0.0;
  for (std::size_t t = 0; t < frames.size(); ++t) {
    const PointCloud moved = apply_motion(rest_dynamic, h.axis, h.magnitudes[t]);
    total += chamfer_distance(moved, frames[t]).value;
  }
  return total;
}

}  // namespace

MagnitudeFit fit_magnitude(const PointCloud& rest_dynamic, const PointCloud& frame,
                           const MotionAxis& axis) {
  validate_axis(axis);
  const SequenceObjective objective(rest_dynamic, {frame});
  MagnitudeFit fit = fit_magnitude_on(objective, axis, 0);
  fit.chamfer =
      chamfer_distance(apply_motion(rest_dynamic, axis, fit.magnitude), frame).value;
  return fit;
}

MagnitudeFit fit_magnitude(const SequenceObjective& objective, const MotionAxis& axis,
                           std::size_t t) {
  validate_axis(axis);
  return fit_magnitude_on(objective, axis, t);
}

EstimateReport search(const ObservedSequence& seq, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  validate_sequence(seq);
  if (opts.kinds.empty()) {
    throw Error("search: no motion kinds requested");
  }

  const PointCloud rest_dyn = dynamic_part(seq.rest);
  const OrientedBox box = fit_obb(rest_dyn);
  const CandidateSet candidates = enumerate_candidates(box);
  const SequenceObjective objective(rest_dyn, seq.frames);
  const std::size_t frame_count = seq.frames.size();

  // A prismatic transform ignores the origin, so one magnitude fit per
  // direction serves all 7 origins; revolute pairs are fit individually.
  struct Unit {
    MotionKind kind;
    int origin_index;  // -1: expand over all origins afterwards
    int direction_index;
  };
  std::vector<Unit> units;
  for (MotionKind kind : opts.kinds) {
    if (kind == MotionKind::Revolute) {
      for (int o = 0; o < 7; ++o) {
        for (int d = 0; d < 6; ++d) {
          units.push_back({kind, o, d});
        }
      }
    } else {
      for (int d = 0; d < 6; ++d) {
        units.push_back({kind, -1, d});
      }
    }
  }

  std::vector<Hypothesis> evaluated(units.size());
  parallel_for(units.size(), [&](std::size_t i) {
    const Unit& unit = units[i];
    Hypothesis h;
    h.axis.kind = unit.kind;
    h.axis.direction = candidates.directions[unit.direction_index];
    h.axis.origin =
        candidates.origins[unit.origin_index < 0 ? 0 : unit.origin_index];
    h.origin_index = std::max(unit.origin_index, 0);
    h.direction_index = unit.direction_index;
    h.magnitudes.resize(frame_count);
    for (std::size_t t = 0; t < frame_count; ++t) {
      h.magnitudes[t] = fit_magnitude_on(objective, h.axis, t).magnitude;
    }
    h.residual = public_residual(rest_dyn, seq.frames, h);
    evaluated[i] = std::move(h);
  });

  EstimateReport report;
  report.candidates = candidates;
  report.ranked.reserve(42 * opts.kinds.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].origin_index >= 0) {
      report.ranked.push_back(std::move(evaluated[i]));
      continue;
    }
    for (int o = 0; o < 7; ++o) {
      Hypothesis copy = evaluated[i];
      copy.origin_index = o;
      copy.axis.origin = candidates.origins[o];
      report.ranked.push_back(std::move(copy));
    }
  }

  std::sort(report.ranked.begin(), report.ranked.end(),
            [](const Hypothesis& a, const Hypothesis& b) {
              if (a.residual != b.residual) {
                return a.residual < b.residual;
              }
              return tie_key(a) < tie_key(b);
            });

  // Residuals within tie_tolerance of the minimum are a tie group; order it
  // purely by candidate index.
  const double tie_cut = report.ranked.front().residual + opts.tie_tolerance;
  auto tie_end = std::find_if(report.ranked.begin(), report.ranked.end(),
                              [&](const Hypothesis& h) { return h.residual > tie_cut; });
  std::sort(report.ranked.begin(), tie_end,
            [](const Hypothesis& a, const Hypothesis& b) {
              return tie_key(a) < tie_key(b);
            });

  // Canonical reporting: of the +/- direction twins, surface the one whose
  // fitted magnitudes are predominantly positive.
  Hypothesis& winner = report.ranked.front();
  if (positivity(winner) < 0.0) {
    const int twin_dir = winner.direction_index ^ 1;
    for (auto it = report.ranked.begin() + 1; it != tie_end; ++it) {
      if (it->origin_index == winner.origin_index &&
          it->direction_index == twin_dir &&
          it->axis.kind == winner.axis.kind) {
        if (positivity(*it) > positivity(winner)) {
          std::iter_swap(report.ranked.begin(), it);
        }
        break;
      }
    }
  }

  report.best = report.ranked.front();
  report.timing_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace artic
