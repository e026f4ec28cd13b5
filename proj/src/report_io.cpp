#include "artic/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace artic {

std::string format_double(double value) {
  if (std::isnan(value)) {
    return "";
  }
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

Json hypothesis_to_json(const Hypothesis& h) {
  AxisRecord record{h.axis, h.magnitudes};
  Json j = axis_record_to_json(record);
  j["residual"] = h.residual;
  if (h.origin_index >= 0) {
    j["origin_index"] = h.origin_index;
    j["direction_index"] = h.direction_index;
  }
  return j;
}

Json trace_to_json(const OptTrace& trace) {
  Json j;
  j["initial_loss"] = trace.initial_loss;
  j["losses"] = trace.losses;
  j["iterations"] = trace.losses.size();
  j["restart_index"] = trace.restart_index;
  j["restart_final_losses"] = trace.restart_final_losses;
  return j;
}

Json estimate_report_json(const std::optional<EstimateReport>& algo,
                          const std::optional<std::pair<Hypothesis, OptTrace>>& direct,
                          const Json& config_echo, bool include_timing) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["config"] = config_echo;
  j["conventions"] = {{"chamfer", kChamferConvention}, {"mae", kMaeConvention}};

  if (algo) {
    Json a;
    a["best"] = hypothesis_to_json(algo->best);
    Json ranked = Json::array();
    for (const Hypothesis& h : algo->ranked) {
      ranked.push_back(hypothesis_to_json(h));
    }
    a["ranked"] = std::move(ranked);
    if (include_timing) {
      a["timing_s"] = algo->timing_s;
    }
    j["algo"] = std::move(a);
  }
  if (direct) {
    Json d;
    d["best"] = hypothesis_to_json(direct->first);
    d["trace"] = trace_to_json(direct->second);
    j["direct"] = std::move(d);
  }

  if (algo && direct) {
    j["best_method"] =
        algo->best.residual <= direct->first.residual ? "algo" : "direct";
  } else {
    j["best_method"] = algo ? "algo" : "direct";
  }
  return j;
}

namespace {

Json aggregate_to_json(const Aggregate& agg, bool include_timing) {
  Json j;
  j["mean_mae_deg"] = agg.mean_mae_deg;
  j["mean_mpe"] = agg.mean_mpe;
  j["mean_mpe_line"] = agg.mean_mpe_line;
  j["mean_residual"] = agg.mean_residual;
  if (include_timing) {
    j["mean_runtime_s"] = agg.mean_runtime_s;
  }
  j["count"] = agg.count;
  j["failures"] = agg.failures;
  return j;
}

}  // namespace

Json benchmark_to_json(const BenchmarkResult& result, const Json& config_echo,
                       bool include_timing) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["config"] = config_echo;
  j["conventions"] = {{"chamfer", kChamferConvention}, {"mae", kMaeConvention}};

  Json rows = Json::array();
  for (const MetricRow& row : result.rows) {
    Json r;
    r["object_id"] = row.object_id;
    r["method"] = to_string(row.method);
    r["ok"] = row.ok;
    if (row.ok) {
      r["mae_deg"] = row.mae_deg;
      r["mae_unfolded_deg"] = row.mae_unfolded_deg;
      r["mpe"] = std::isnan(row.mpe) ? Json() : Json(row.mpe);
      r["mpe_line"] = std::isnan(row.mpe_line) ? Json() : Json(row.mpe_line);
      r["mpe_identifiable"] = row.mpe_identifiable;
      r["residual"] = row.residual;
      if (include_timing) {
        r["runtime_s"] = row.runtime_s;
      }
    } else {
      r["error"] = row.error;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);

  Json aggregates;
  for (const auto& [method, agg] : result.aggregates) {
    aggregates[to_string(method)] = aggregate_to_json(agg, include_timing);
  }
  j["aggregates"] = std::move(aggregates);
  return j;
}

std::string benchmark_to_csv(const BenchmarkResult& result, bool include_timing) {
  std::ostringstream out;
  out << "object_id,method,mae_deg,mae_unfolded_deg,mpe,mpe_line,"
         "mpe_identifiable,residual,runtime_s,status\n";
  for (const MetricRow& row : result.rows) {
    out << row.object_id << ',' << to_string(row.method) << ',';
    if (row.ok) {
      out << format_double(row.mae_deg) << ',' << format_double(row.mae_unfolded_deg)
          << ',' << format_double(row.mpe) << ',' << format_double(row.mpe_line)
          << ',' << (row.mpe_identifiable ? "true" : "false") << ','
          << format_double(row.residual) << ',';
      if (include_timing) {
        out << format_double(row.runtime_s);
      }
      out << ",ok\n";
    } else {
      out << ",,,,,,,failed: " << row.error << "\n";
    }
  }
  return out.str();
}

}  // namespace artic
