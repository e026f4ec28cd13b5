#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artic/axis_search.hpp"
#include "artic/direct_opt.hpp"
#include "artic/manifest.hpp"
#include "artic/metrics.hpp"

namespace artic {

/// Convention strings embedded in every report so outputs are
/// self-describing.
inline constexpr const char* kChamferConvention =
    "squared-distance, mean per direction, both directions summed";
inline constexpr const char* kMaeConvention =
    "folded to [0,90] deg via |dot| (negated directions are equivalent)";

Json hypothesis_to_json(const Hypothesis& h);
Json trace_to_json(const OptTrace& trace);

/// Full estimate report: format version, configuration echo, conventions,
/// and the per-method results. Wall-clock timings are volatile and are only
/// included when `include_timing` is set, keeping default outputs
/// byte-reproducible across runs.
Json estimate_report_json(const std::optional<EstimateReport>& algo,
                          const std::optional<std::pair<Hypothesis, OptTrace>>& direct,
                          const Json& config_echo, bool include_timing);

Json benchmark_to_json(const BenchmarkResult& result, const Json& config_echo,
                       bool include_timing);

/// CSV with a header row; one row per MetricRow in order. The runtime
/// column is left empty unless `include_timing` is set.
std::string benchmark_to_csv(const BenchmarkResult& result, bool include_timing);

/// Shortest round-trip decimal form of a double (deterministic).
std::string format_double(double value);

}  // namespace artic
