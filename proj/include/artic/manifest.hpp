#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "artic/sequence.hpp"
#include "artic/types.hpp"

namespace artic {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1.0";

/// Interchange form of a motion axis: direction/origin as triples and
/// magnitudes in degrees (revolute) or model units (prismatic).
struct AxisRecord {
  MotionAxis axis;
  std::vector<double> magnitudes;  // stored in internal units (radians)
};

Json axis_record_to_json(const AxisRecord& record);

/// Parses an axis record. The direction is re-normalized on load; a norm
/// more than 1e-3 away from 1 emits a warning on stderr, and a near-zero
/// norm is a parse error.
AxisRecord axis_record_from_json(const Json& j);

/// Paths and metadata tying one generated or captured sequence together.
/// Paths are relative to the manifest's directory.
struct SequenceManifest {
  std::string version = kFormatVersion;
  std::string object_name;
  double diagonal = 0.0;
  Json template_params;  // free-form echo of the generator settings
  std::string rest_path;
  std::vector<std::string> frame_paths;  // time-ordered
  std::optional<AxisRecord> gt_axis;
  std::string base_dir;  // set on load; not serialized
};

Json manifest_to_json(const SequenceManifest& manifest);

/// Loads and validates a manifest: version must be supported and every
/// referenced file must exist (IoError otherwise).
SequenceManifest load_manifest(const std::string& path);

/// Reads the rest/frame clouds referenced by a loaded manifest.
ObservedSequence load_sequence(const SequenceManifest& manifest);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace artic
