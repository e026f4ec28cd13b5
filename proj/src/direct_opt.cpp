#include "artic/direct_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "artic/chamfer.hpp"
#include "artic/motion.hpp"
#include "artic/objective.hpp"
#include "artic/parallel.hpp"
#include "artic/rng.hpp"

namespace artic {

namespace {

constexpr int kMaxHalvings = 20;
constexpr int kConvergenceWindow = 10;

void validate_config(const OptimizerConfig& cfg) {
  if (cfg.max_iters <= 0 || cfg.step_size <= 0.0 || cfg.restarts < 1 ||
      cfg.fd_step <= 0.0 || cfg.convergence_tol <= 0.0) {
    throw Error("optimizer config fields must be positive (restarts >= 1)");
  }
}

/// Free parameters of one restart. The direction is kept approximately
/// unit; the loss normalizes it before evaluating, so finite-difference
/// probes of single components stay well defined.
struct Params {
  Vec3 direction;
  Point3 origin;
  std::vector<double> magnitudes;
};

struct RestartResult {
  Params params;
  double loss = std::numeric_limits<double>::infinity();
  OptTrace trace;
};

class RestartRun {
 public:
  RestartRun(const SequenceObjective& objective, MotionKind kind,
             const OptimizerConfig& cfg)
      : objective_(objective), kind_(kind), cfg_(cfg) {
    diagonal_ = std::max(objective.rest_diagonal(), 1e-12);
    fd_ = cfg.fd_step * diagonal_;
  }

  MotionAxis axis_of(const Params& p) const {
    const double norm = p.direction.norm();
    MotionAxis axis;
    axis.kind = kind_;
    axis.direction = norm > 0.0 ? Vec3(p.direction / norm) : Vec3::UnitX();
    axis.origin = p.origin;
    return axis;
  }

  double frame_loss(const Params& p, std::size_t t, double magnitude) const {
    return objective_.frame_loss(axis_of(p), magnitude, t);
  }

  double total_loss(const Params& p) const {
    const MotionAxis axis = axis_of(p);
    double total = 0.0;
    for (std::size_t t = 0; t < p.magnitudes.size(); ++t) {
      total += objective_.frame_loss(axis, p.magnitudes[t], t);
    }
    return total;
  }

  /// Central finite differences. Direction/origin components need full
  /// sequence evaluations; each magnitude only touches its own frame.
  void gradient(const Params& p, Vec3& g_dir, Vec3& g_origin,
                std::vector<double>& g_mag) const {
    Params probe = p;
    for (int i = 0; i < 3; ++i) {
      probe.direction[i] = p.direction[i] + fd_;
      const double up = total_loss(probe);
      probe.direction[i] = p.direction[i] - fd_;
      const double down = total_loss(probe);
      probe.direction[i] = p.direction[i];
      g_dir[i] = (up - down) / (2.0 * fd_);
    }
    for (int i = 0; i < 3; ++i) {
      probe.origin[i] = p.origin[i] + fd_;
      const double up = total_loss(probe);
      probe.origin[i] = p.origin[i] - fd_;
      const double down = total_loss(probe);
      probe.origin[i] = p.origin[i];
      g_origin[i] = (up - down) / (2.0 * fd_);
    }
    g_mag.resize(p.magnitudes.size());
    for (std::size_t t = 0; t < p.magnitudes.size(); ++t) {
      const double up = frame_loss(p, t, p.magnitudes[t] + fd_);
      const double down = frame_loss(p, t, p.magnitudes[t] - fd_);
      g_mag[t] = (up - down) / (2.0 * fd_);
    }
  }

  RestartResult run(Params init, int restart_index) const {
    RestartResult result;
    result.params = std::move(init);
    result.params.direction.normalize();
    result.trace.restart_index = restart_index;

    double loss = total_loss(result.params);
    if (!std::isfinite(loss)) {
      throw NumericalError("direct optimization: non-finite initial loss", 0);
    }
    result.trace.initial_loss = loss;

    const double alpha_dir = cfg_.step_size;
    const double alpha_other = cfg_.step_size * diagonal_;

    Vec3 g_dir, g_origin;
    std::vector<double> g_mag;
    for (int iter = 0; iter < cfg_.max_iters; ++iter) {
      if (loss == 0.0) {
        break;
      }
      gradient(result.params, g_dir, g_origin, g_mag);

      // Backtracking line search: halve the global factor until the loss
      // strictly decreases; a fully stalled step ends the restart.
      bool accepted = false;
      double lambda = 1.0;
      for (int halving = 0; halving <= kMaxHalvings; ++halving, lambda *= 0.5) {
        Params trial = result.params;
        trial.direction -= (lambda * alpha_dir) * g_dir;
        const double norm = trial.direction.norm();
        if (norm < 1e-12) {
          continue;
        }
        trial.direction /= norm;  // project back to the unit sphere
        trial.origin -= (lambda * alpha_other) * g_origin;
        for (std::size_t t = 0; t < trial.magnitudes.size(); ++t) {
          trial.magnitudes[t] -= (lambda * alpha_other) * g_mag[t];
        }
        const double trial_loss = total_loss(trial);
        if (std::isfinite(trial_loss) && trial_loss < loss) {
          result.params = std::move(trial);
          loss = trial_loss;
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        break;
      }
      result.trace.losses.push_back(loss);

      const auto& tr = result.trace.losses;
      if (tr.size() > kConvergenceWindow) {
        const double before = tr[tr.size() - 1 - kConvergenceWindow];
        const double change = before - tr.back();
        if (change <= cfg_.convergence_tol * std::max(before, 1e-300)) {
          break;
        }
      }
    }

    result.loss = loss;
    return result;
  }

 private:
  const SequenceObjective& objective_;
  MotionKind kind_;
  OptimizerConfig cfg_;
  double diagonal_ = 0.0;
  double fd_ = 0.0;
};

Vec3 random_unit_vector(RngStream& rng) {
  for (;;) {
    const Vec3 v(rng.normal(), rng.normal(), rng.normal());
    const double norm = v.norm();
    if (norm > 1e-6) {
      return v / norm;
    }
  }
}

int sign_balance(const std::vector<double>& magnitudes) {
  int pos = 0;
  int neg = 0;
  for (double m : magnitudes) {
    pos += m > 0.0;
    neg += m < 0.0;
  }
  return pos - neg;
}

}  // namespace

std::pair<Hypothesis, OptTrace> optimize(const ObservedSequence& seq, MotionKind kind,
                                         const OptimizerConfig& cfg) {
  validate_config(cfg);
  validate_sequence(seq);

  const PointCloud rest_dyn = dynamic_part(seq.rest);
  const SequenceObjective objective(rest_dyn, seq.frames);
  const Point3 rest_centroid = centroid(rest_dyn);
  const std::size_t frame_count = seq.frames.size();
  const RestartRun runner(objective, kind, cfg);

  // Initial states: random unit directions with the origin at the part
  // centroid and per-frame magnitudes from the 1D fit. Restart 0 may be
  // seeded from the discrete search instead.
  std::vector<Params> inits(cfg.restarts);
  for (int r = 0; r < cfg.restarts; ++r) {
    RngStream rng(cfg.seed, "restart", static_cast<std::uint64_t>(r));
    Params p;
    p.direction = random_unit_vector(rng);
    p.origin = rest_centroid;
    p.magnitudes.assign(frame_count, 0.0);
    inits[r] = std::move(p);
  }
  if (cfg.seed_from_algo) {
    SearchOptions opts;
    opts.kinds = {kind};
    const EstimateReport seeded = search(seq, opts);
    inits[0].direction = seeded.best.axis.direction;
    inits[0].origin = seeded.best.axis.origin;
    inits[0].magnitudes = seeded.best.magnitudes;
  }

  std::vector<RestartResult> results(cfg.restarts);
  parallel_for(static_cast<std::size_t>(cfg.restarts), [&](std::size_t r) {
    Params init = inits[r];
    if (!(cfg.seed_from_algo && r == 0)) {
      MotionAxis axis;
      axis.kind = kind;
      axis.direction = init.direction;
      axis.origin = init.origin;
      for (std::size_t t = 0; t < frame_count; ++t) {
        init.magnitudes[t] = fit_magnitude(objective, axis, t).magnitude;
      }
    }
    results[r] = runner.run(std::move(init), static_cast<int>(r));
  });

  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r) {
    if (results[r].loss < results[best].loss) {
      best = r;
    }
  }

  RestartResult& winner = results[best];
  Hypothesis h;
  h.axis = runner.axis_of(winner.params);
  h.magnitudes = winner.params.magnitudes;

  // Reporting conventions: predominantly positive magnitudes, and (for
  // revolute axes) the line point closest to the part centroid as origin.
  if (sign_balance(h.magnitudes) < 0) {
    h.axis.direction = -h.axis.direction;
    for (double& m : h.magnitudes) {
      m = -m;
    }
  }
  if (kind == MotionKind::Revolute) {
    const Vec3 to_centroid = rest_centroid - h.axis.origin;
    h.axis.origin += to_centroid.dot(h.axis.direction) * h.axis.direction;
  }
  double residual = 0.0;
  for (std::size_t t = 0; t < frame_count; ++t) {
    residual += chamfer_distance(apply_motion(rest_dyn, h.axis, h.magnitudes[t]),
                                 seq.frames[t])
                    .value;
  }
  h.residual = residual;

  OptTrace trace = std::move(winner.trace);
  trace.restart_final_losses.resize(cfg.restarts);
  for (int r = 0; r < cfg.restarts; ++r) {
    trace.restart_final_losses[r] = results[r].loss;
  }
  return {std::move(h), std::move(trace)};
}

}  // namespace artic
