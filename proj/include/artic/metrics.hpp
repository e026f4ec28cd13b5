#pragma once

#include <map>
#include <string>
#include <vector>

#include "artic/axis_search.hpp"
#include "artic/direct_opt.hpp"
#include "artic/sequence.hpp"
#include "artic/types.hpp"

namespace artic {

/// Angle between axis directions in degrees, folded to [0, 90] by taking
/// |dot| (the candidate set carries both signs of every direction, so sign
/// is not meaningful).
double angular_error_deg(const MotionAxis& pred, const MotionAxis& gt);

/// Unfolded variant in [0, 180], recorded alongside the folded value.
double angular_error_unfolded_deg(const MotionAxis& pred, const MotionAxis& gt);

/// Origin discrepancy between two axes of the same kind.
struct PositionError {
  double origin_distance = 0.0;  // |o_pred - o_gt|, the headline value
  double line_distance = 0.0;    // minimal distance between the axis lines
  bool identifiable = true;      // false for prismatic axes
};

PositionError position_error(const MotionAxis& pred, const MotionAxis& gt);

enum class Method { Algo, Direct };

const char* to_string(Method m);

/// One estimator run against one object. Position errors are normalized by
/// the object (rest cloud) diagonal.
struct MetricRow {
  std::string object_id;
  Method method = Method::Algo;
  double mae_deg = 0.0;
  double mae_unfolded_deg = 0.0;
  double mpe = 0.0;
  double mpe_line = 0.0;
  bool mpe_identifiable = true;
  double residual = 0.0;
  double runtime_s = 0.0;
  bool ok = true;
  std::string error;
};

struct BenchmarkCase {
  std::string id;
  ObservedSequence seq;
  MotionAxis gt;
};

struct BenchmarkConfig {
  SearchOptions search;
  OptimizerConfig opt;
};

struct Aggregate {
  double mean_mae_deg = 0.0;
  double mean_mpe = 0.0;
  double mean_mpe_line = 0.0;
  double mean_residual = 0.0;
  double mean_runtime_s = 0.0;
  int count = 0;     // rows included in the means
  int failures = 0;  // rows excluded
};

struct BenchmarkResult {
  std::vector<MetricRow> rows;  // ordered by (object id, method)
  std::map<Method, Aggregate> aggregates;
};

/// Runs every requested method on every case, scoring against the ground
/// truth. Estimator failures are recorded per row and excluded from the
/// aggregate means. Row order is deterministic.
BenchmarkResult run_benchmark(const std::vector<BenchmarkCase>& suite,
                              const std::vector<Method>& methods,
                              const BenchmarkConfig& cfg);

}  // namespace artic
