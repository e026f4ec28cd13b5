#include "artic/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "artic/ply_io.hpp"

namespace fs = std::filesystem;

namespace artic {

namespace {

Json vec_to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Vec3 vec_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(std::string(what) + " must be a 3-element array", 0);
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

Json axis_record_to_json(const AxisRecord& record) {
  Json j;
  j["kind"] = to_string(record.axis.kind);
  j["direction"] = vec_to_json(record.axis.direction);
  j["origin"] = vec_to_json(record.axis.origin);
  Json mags = Json::array();
  for (double m : record.magnitudes) {
    mags.push_back(record.axis.kind == MotionKind::Revolute ? rad_to_deg(m) : m);
  }
  j["magnitudes"] = std::move(mags);
  return j;
}

AxisRecord axis_record_from_json(const Json& j) {
  AxisRecord record;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "revolute") {
    record.axis.kind = MotionKind::Revolute;
  } else if (kind == "prismatic") {
    record.axis.kind = MotionKind::Prismatic;
  } else {
    throw ParseError("axis record: unknown kind '" + kind + "'", 0);
  }

  const Vec3 raw = vec_from_json(j.at("direction"), "axis direction");
  const double norm = raw.norm();
  if (!(norm > 1e-9) || !raw.allFinite()) {
    throw ParseError("axis record: direction has near-zero norm", 0);
  }
  if (std::abs(norm - 1.0) > 1e-3) {
    std::cerr << "warning: axis direction norm " << norm
              << " deviates from 1; re-normalizing\n";
  }
  record.axis.direction = raw / norm;
  record.axis.origin = vec_from_json(j.at("origin"), "axis origin");

  if (j.contains("magnitudes")) {
    for (const auto& m : j.at("magnitudes")) {
      const double v = m.get<double>();
      record.magnitudes.push_back(
          record.axis.kind == MotionKind::Revolute ? deg_to_rad(v) : v);
    }
  }
  return record;
}

Json manifest_to_json(const SequenceManifest& manifest) {
  Json j;
  j["format_version"] = manifest.version;
  j["object"] = {{"name", manifest.object_name}, {"diagonal", manifest.diagonal}};
  if (!manifest.template_params.is_null()) {
    j["object"]["template"] = manifest.template_params;
  }
  j["rest"] = manifest.rest_path;
  j["frames"] = manifest.frame_paths;
  if (manifest.gt_axis) {
    j["gt_axis"] = axis_record_to_json(*manifest.gt_axis);
  }
  return j;
}

SequenceManifest load_manifest(const std::string& path) {
  const std::string text = read_text_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("manifest: invalid JSON: " + std::string(e.what()),
                     static_cast<std::size_t>(e.byte));
  }

  SequenceManifest manifest;
  try {
    manifest.version = j.at("format_version").get<std::string>();
    if (manifest.version != kFormatVersion) {
      throw ParseError("manifest: unsupported format version '" + manifest.version +
                           "'",
                       0);
    }
    const Json& object = j.at("object");
    manifest.object_name = object.at("name").get<std::string>();
    manifest.diagonal = object.value("diagonal", 0.0);
    if (object.contains("template")) {
      manifest.template_params = object.at("template");
    }
    manifest.rest_path = j.at("rest").get<std::string>();
    for (const auto& f : j.at("frames")) {
      manifest.frame_paths.push_back(f.get<std::string>());
    }
    if (j.contains("gt_axis")) {
      manifest.gt_axis = axis_record_from_json(j.at("gt_axis"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("manifest: " + std::string(e.what()), 0);
  }

  if (manifest.frame_paths.empty()) {
    throw ParseError("manifest: no frames listed", 0);
  }

  manifest.base_dir = fs::path(path).parent_path().string();
  const auto resolve = [&](const std::string& rel) {
    return (fs::path(manifest.base_dir) / rel).string();
  };
  if (!fs::exists(resolve(manifest.rest_path))) {
    throw IoError("manifest references missing file: " + resolve(manifest.rest_path));
  }
  for (const auto& frame : manifest.frame_paths) {
    if (!fs::exists(resolve(frame))) {
      throw IoError("manifest references missing file: " + resolve(frame));
    }
  }
  return manifest;
}

ObservedSequence load_sequence(const SequenceManifest& manifest) {
  const auto resolve = [&](const std::string& rel) {
    return (fs::path(manifest.base_dir) / rel).string();
  };
  ObservedSequence seq;
  seq.rest = read_cloud_ply(resolve(manifest.rest_path));
  seq.frames.reserve(manifest.frame_paths.size());
  for (const auto& frame : manifest.frame_paths) {
    seq.frames.push_back(read_cloud_ply(resolve(frame)));
  }
  return seq;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << content;
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace artic
