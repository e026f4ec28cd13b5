#include "artic/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace artic {

double angular_error_deg(const MotionAxis& pred, const MotionAxis& gt) {
  validate_axis(pred);
  validate_axis(gt);
  const double d = std::clamp(std::abs(pred.direction.dot(gt.direction)), 0.0, 1.0);
  return rad_to_deg(std::acos(d));
}

double angular_error_unfolded_deg(const MotionAxis& pred, const MotionAxis& gt) {
  validate_axis(pred);
  validate_axis(gt);
  const double d = std::clamp(pred.direction.dot(gt.direction), -1.0, 1.0);
  return rad_to_deg(std::acos(d));
}

PositionError position_error(const MotionAxis& pred, const MotionAxis& gt) {
  validate_axis(pred);
  validate_axis(gt);
  if (pred.kind != gt.kind) {
    throw KindMismatchError("position_error: axis kinds differ");
  }

  PositionError err;
  const Vec3 offset = pred.origin - gt.origin;
  err.origin_distance = offset.norm();

  const Vec3 normal = pred.direction.cross(gt.direction);
  const double normal_sq = normal.squaredNorm();
  if (normal_sq < 1e-18) {  // near-parallel lines: point-to-line distance
    err.line_distance = (offset - offset.dot(gt.direction) * gt.direction).norm();
  } else {
    err.line_distance = std::abs(offset.dot(normal)) / std::sqrt(normal_sq);
  }
  err.identifiable = pred.kind == MotionKind::Revolute;
  return err;
}

const char* to_string(Method m) { return m == Method::Algo ? "algo" : "direct"; }

namespace {

MetricRow score(const std::string& id, Method method, const Hypothesis& h,
                double runtime_s, const MotionAxis& gt, double diagonal) {
  MetricRow row;
  row.object_id = id;
  row.method = method;
  row.mae_deg = angular_error_deg(h.axis, gt);
  row.mae_unfolded_deg = angular_error_unfolded_deg(h.axis, gt);
  if (h.axis.kind == gt.kind) {
    const PositionError pe = position_error(h.axis, gt);
    const double scale = diagonal > 0.0 ? diagonal : 1.0;
    row.mpe = pe.origin_distance / scale;
    row.mpe_line = pe.line_distance / scale;
    row.mpe_identifiable = pe.identifiable;
  } else {
    // Kind mismatch: direction error is still meaningful, origins are not.
    row.mpe = std::numeric_limits<double>::quiet_NaN();
    row.mpe_line = std::numeric_limits<double>::quiet_NaN();
    row.mpe_identifiable = false;
  }
  row.residual = h.residual;
  row.runtime_s = runtime_s;
  return row;
}

}  // namespace

BenchmarkResult run_benchmark(const std::vector<BenchmarkCase>& suite,
                              const std::vector<Method>& methods,
                              const BenchmarkConfig& cfg) {
  if (suite.empty()) {
    throw EmptyInputError("run_benchmark: empty suite");
  }
  if (methods.empty()) {
    throw Error("run_benchmark: no methods requested");
  }

  std::vector<std::size_t> order(suite.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return suite[a].id < suite[b].id;
  });

  std::vector<Method> method_order = methods;
  std::stable_sort(method_order.begin(), method_order.end(),
                   [](Method a, Method b) { return static_cast<int>(a) < static_cast<int>(b); });
  method_order.erase(std::unique(method_order.begin(), method_order.end()),
                     method_order.end());

  BenchmarkResult result;
  for (std::size_t index : order) {
    const BenchmarkCase& item = suite[index];
    const double diagonal = bbox_diagonal(item.seq.rest);
    for (Method method : method_order) {
      MetricRow row;
      try {
        if (method == Method::Algo) {
          const EstimateReport report = search(item.seq, cfg.search);
          row = score(item.id, method, report.best, report.timing_s, item.gt, diagonal);
        } else {
          const auto start = std::chrono::steady_clock::now();
          // Fix the kind to the ground truth's when searching one kind only
          // would be unfair; Direct optimizes a single kind, so use the
          // ground-truth kind unless the search options restrict it.
          MotionKind kind = item.gt.kind;
          if (cfg.search.kinds.size() == 1) {
            kind = cfg.search.kinds.front();
          }
          const auto [hyp, trace] = optimize(item.seq, kind, cfg.opt);
          const double runtime =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                  .count();
          row = score(item.id, method, hyp, runtime, item.gt, diagonal);
        }
      } catch (const Error& e) {
        row.object_id = item.id;
        row.method = method;
        row.ok = false;
        row.error = e.what();
      }
      result.rows.push_back(std::move(row));
    }
  }

  std::map<Method, int> mpe_counts;
  for (const MetricRow& row : result.rows) {
    Aggregate& agg = result.aggregates[row.method];
    if (!row.ok) {
      ++agg.failures;
      continue;
    }
    agg.mean_mae_deg += row.mae_deg;
    if (!std::isnan(row.mpe)) {
      agg.mean_mpe += row.mpe;
      agg.mean_mpe_line += row.mpe_line;
      ++mpe_counts[row.method];
    }
    agg.mean_residual += row.residual;
    agg.mean_runtime_s += row.runtime_s;
    ++agg.count;
  }
  for (auto& [method, agg] : result.aggregates) {
    if (agg.count > 0) {
      agg.mean_mae_deg /= agg.count;
      agg.mean_residual /= agg.count;
      agg.mean_runtime_s /= agg.count;
    }
    if (const int n = mpe_counts[method]; n > 0) {
      agg.mean_mpe /= n;
      agg.mean_mpe_line /= n;
    }
  }
  return result;
}

}  // namespace artic
