#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artic/direct_opt.hpp"
#include "artic/sequence.hpp"
#include "artic/types.hpp"

namespace artic {

/// Writes a colored PLY for external viewers: static part gray, dynamic
/// part blue, predicted axis sampled in red, ground-truth axis (when given)
/// in green. Axis polylines carry 64 samples spanning +/-0.6 of the rest
/// cloud diagonal around the axis origin.
void export_overlay(const ObservedSequence& seq, const MotionAxis& pred,
                    const std::optional<MotionAxis>& gt, const std::string& path);

/// CSV of (iteration, loss) rows matching the trace exactly.
void export_trace(const OptTrace& trace, const std::string& path);

/// Reads back a trace CSV written by export_trace.
std::vector<double> read_trace_csv(const std::string& path);

inline constexpr int kAxisSampleCount = 64;
inline constexpr double kAxisSpanFrac = 0.6;

}  // namespace artic
