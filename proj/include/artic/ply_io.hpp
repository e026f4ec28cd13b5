#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artic/types.hpp"

namespace artic {

/// Point payload of a PLY file: coordinates plus the optional part-label
/// property ("part": 0 static, 1 dynamic) and optional uchar RGB colors.
struct PlyCloud {
  std::vector<Point3> points;
  std::optional<std::vector<PartLabel>> labels;
  std::optional<std::vector<std::array<std::uint8_t, 3>>> colors;
};

enum class PlyFormat { BinaryLittleEndian, Ascii };

/// Writes vertices as float64 x/y/z plus "part"/color properties when
/// present. Binary output round-trips coordinates bitwise; ASCII output is
/// printed with 17 significant digits.
void write_ply(const std::string& path, const PlyCloud& cloud,
               PlyFormat format = PlyFormat::BinaryLittleEndian);

/// Reads ASCII or binary-little-endian PLY vertices (float32 or float64
/// x/y/z; optional uchar "part"; optional uchar red/green/blue). Unknown
/// scalar properties are skipped; list properties, unknown property types,
/// and big-endian files raise ParseError with the offending byte offset.
PlyCloud read_ply(const std::string& path);

/// PointCloud adapters.
void write_cloud_ply(const std::string& path, const PointCloud& cloud,
                     PlyFormat format = PlyFormat::BinaryLittleEndian);
PointCloud read_cloud_ply(const std::string& path);

}  // namespace artic
