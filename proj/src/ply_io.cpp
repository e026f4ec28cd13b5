#include "artic/ply_io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace artic {

namespace {

enum class ScalarType { Char, UChar, Short, UShort, Int, UInt, Float, Double };

std::size_t scalar_size(ScalarType t) {
  switch (t) {
    case ScalarType::Char:
    case ScalarType::UChar: return 1;
    case ScalarType::Short:
    case ScalarType::UShort: return 2;
    case ScalarType::Int:
    case ScalarType::UInt:
    case ScalarType::Float: return 4;
    case ScalarType::Double: return 8;
  }
  return 0;
}

ScalarType parse_scalar_type(const std::string& token, std::size_t offset) {
  if (token == "char" || token == "int8") return ScalarType::Char;
  if (token == "uchar" || token == "uint8") return ScalarType::UChar;
  if (token == "short" || token == "int16") return ScalarType::Short;
  if (token == "ushort" || token == "uint16") return ScalarType::UShort;
  if (token == "int" || token == "int32") return ScalarType::Int;
  if (token == "uint" || token == "uint32") return ScalarType::UInt;
  if (token == "float" || token == "float32") return ScalarType::Float;
  if (token == "double" || token == "float64") return ScalarType::Double;
  throw ParseError("ply: unknown property type '" + token + "'", offset);
}

struct Property {
  std::string name;
  ScalarType type = ScalarType::Float;
};

struct Element {
  std::string name;
  std::size_t count = 0;
  std::vector<Property> properties;
};

double read_scalar_binary(const char* data, ScalarType type) {
  switch (type) {
    case ScalarType::Char: {
      std::int8_t v;
      std::memcpy(&v, data, 1);
      return v;
    }
    case ScalarType::UChar: {
      std::uint8_t v;
      std::memcpy(&v, data, 1);
      return v;
    }
    case ScalarType::Short: {
      std::int16_t v;
      std::memcpy(&v, data, 2);
      return v;
    }
    case ScalarType::UShort: {
      std::uint16_t v;
      std::memcpy(&v, data, 2);
      return v;
    }
    case ScalarType::Int: {
      std::int32_t v;
      std::memcpy(&v, data, 4);
      return v;
    }
    case ScalarType::UInt: {
      std::uint32_t v;
      std::memcpy(&v, data, 4);
      return v;
    }
    case ScalarType::Float: {
      float v;
      std::memcpy(&v, data, 4);
      return v;
    }
    case ScalarType::Double: {
      double v;
      std::memcpy(&v, data, 8);
      return v;
    }
  }
  return 0.0;
}

}  // namespace

void write_ply(const std::string& path, const PlyCloud& cloud, PlyFormat format) {
  if (cloud.labels && cloud.labels->size() != cloud.points.size()) {
    throw Error("ply: label count does not match point count");
  }
  if (cloud.colors && cloud.colors->size() != cloud.points.size()) {
    throw Error("ply: color count does not match point count");
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }

  const bool binary = format == PlyFormat::BinaryLittleEndian;
  out << "ply\n";
  out << (binary ? "format binary_little_endian 1.0\n" : "format ascii 1.0\n");
  out << "element vertex " << cloud.points.size() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  if (cloud.labels) {
    out << "property uchar part\n";
  }
  if (cloud.colors) {
    out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  }
  out << "end_header\n";

  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const Point3& p = cloud.points[i];
    if (binary) {
      double xyz[3] = {p.x(), p.y(), p.z()};
      out.write(reinterpret_cast<const char*>(xyz), sizeof(xyz));
      if (cloud.labels) {
        const std::uint8_t part = static_cast<std::uint8_t>((*cloud.labels)[i]);
        out.write(reinterpret_cast<const char*>(&part), 1);
      }
      if (cloud.colors) {
        out.write(reinterpret_cast<const char*>((*cloud.colors)[i].data()), 3);
      }
    } else {
      char buf[32];
      for (int c = 0; c < 3; ++c) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p[c],
                                       std::chars_format::general, 17);
        out.write(buf, end - buf);
        out.put(c == 2 && !cloud.labels && !cloud.colors ? '\n' : ' ');
      }
      if (cloud.labels) {
        out << static_cast<int>((*cloud.labels)[i]);
        out.put(cloud.colors ? ' ' : '\n');
      }
      if (cloud.colors) {
        const auto& rgb = (*cloud.colors)[i];
        out << static_cast<int>(rgb[0]) << ' ' << static_cast<int>(rgb[1]) << ' '
            << static_cast<int>(rgb[2]) << '\n';
      }
    }
  }
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

PlyCloud read_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open: " + path);
  }

  auto offset = [&in]() -> std::size_t {
    const auto pos = in.tellg();
    return pos < 0 ? 0 : static_cast<std::size_t>(pos);
  };

  std::string line;
  if (!std::getline(in, line) || (line != "ply" && line != "ply\r")) {
    throw ParseError("ply: missing 'ply' magic", 0);
  }

  bool binary = false;
  bool format_seen = false;
  std::vector<Element> elements;

  for (;;) {
    const std::size_t line_start = offset();
    if (!std::getline(in, line)) {
      throw ParseError("ply: header ended before end_header", line_start);
    }
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword.empty() || keyword == "comment" || keyword == "obj_info") {
      continue;
    }
    if (keyword == "format") {
      std::string fmt, version;
      ls >> fmt >> version;
      if (fmt == "ascii") {
        binary = false;
      } else if (fmt == "binary_little_endian") {
        binary = true;
      } else if (fmt == "binary_big_endian") {
        throw ParseError("ply: big-endian files are not supported", line_start);
      } else {
        throw ParseError("ply: unknown format '" + fmt + "'", line_start);
      }
      format_seen = true;
    } else if (keyword == "element") {
      Element e;
      if (!(ls >> e.name >> e.count)) {
        throw ParseError("ply: malformed element line", line_start);
      }
      elements.push_back(std::move(e));
    } else if (keyword == "property") {
      if (elements.empty()) {
        throw ParseError("ply: property before any element", line_start);
      }
      std::string type;
      ls >> type;
      if (type == "list") {
        if (elements.back().count > 0) {
          throw ParseError("ply: list properties are not supported", line_start);
        }
        continue;  // tolerable on empty elements only
      }
      Property prop;
      prop.type = parse_scalar_type(type, line_start);
      if (!(ls >> prop.name)) {
        throw ParseError("ply: property without a name", line_start);
      }
      elements.back().properties.push_back(std::move(prop));
    } else if (keyword == "end_header") {
      break;
    } else {
      throw ParseError("ply: unexpected header keyword '" + keyword + "'",
                       line_start);
    }
  }
  if (!format_seen) {
    throw ParseError("ply: missing format line", offset());
  }

  PlyCloud cloud;
  for (const Element& element : elements) {
    const bool is_vertex = element.name == "vertex";
    int ix = -1, iy = -1, iz = -1, ipart = -1, ir = -1, ig = -1, ib = -1;
    for (std::size_t i = 0; i < element.properties.size(); ++i) {
      const std::string& name = element.properties[i].name;
      const int idx = static_cast<int>(i);
      if (name == "x") ix = idx;
      else if (name == "y") iy = idx;
      else if (name == "z") iz = idx;
      else if (name == "part") ipart = idx;
      else if (name == "red") ir = idx;
      else if (name == "green") ig = idx;
      else if (name == "blue") ib = idx;
    }
    if (is_vertex && element.count > 0 && (ix < 0 || iy < 0 || iz < 0)) {
      throw ParseError("ply: vertex element lacks x/y/z properties", offset());
    }

    std::size_t stride = 0;
    for (const Property& p : element.properties) {
      stride += scalar_size(p.type);
    }

    std::vector<double> values(element.properties.size());
    std::vector<char> row(stride);
    for (std::size_t r = 0; r < element.count; ++r) {
      const std::size_t row_start = offset();
      if (binary) {
        in.read(row.data(), static_cast<std::streamsize>(stride));
        if (static_cast<std::size_t>(in.gcount()) != stride) {
          throw ParseError("ply: element '" + element.name + "' truncated at row " +
                               std::to_string(r) + " of " +
                               std::to_string(element.count),
                           row_start);
        }
        std::size_t at = 0;
        for (std::size_t i = 0; i < element.properties.size(); ++i) {
          values[i] = read_scalar_binary(row.data() + at, element.properties[i].type);
          at += scalar_size(element.properties[i].type);
        }
      } else {
        if (!std::getline(in, line)) {
          throw ParseError("ply: element '" + element.name + "' truncated at row " +
                               std::to_string(r) + " of " +
                               std::to_string(element.count),
                           row_start);
        }
        std::istringstream ls(line);
        for (std::size_t i = 0; i < element.properties.size(); ++i) {
          if (!(ls >> values[i])) {
            throw ParseError("ply: too few values in row " + std::to_string(r) +
                                 " of element '" + element.name + "'",
                             row_start);
          }
        }
      }

      if (!is_vertex) {
        continue;
      }
      cloud.points.emplace_back(values[ix], values[iy], values[iz]);
      if (ipart >= 0) {
        if (!cloud.labels) {
          cloud.labels.emplace();
        }
        cloud.labels->push_back(values[ipart] != 0.0 ? PartLabel::Dynamic
                                                     : PartLabel::Static);
      }
      if (ir >= 0 && ig >= 0 && ib >= 0) {
        if (!cloud.colors) {
          cloud.colors.emplace();
        }
        cloud.colors->push_back({static_cast<std::uint8_t>(values[ir]),
                                 static_cast<std::uint8_t>(values[ig]),
                                 static_cast<std::uint8_t>(values[ib])});
      }
    }
  }
  return cloud;
}

void write_cloud_ply(const std::string& path, const PointCloud& cloud,
                     PlyFormat format) {
  PlyCloud ply;
  ply.points = cloud.points;
  ply.labels = cloud.labels;
  write_ply(path, ply, format);
}

PointCloud read_cloud_ply(const std::string& path) {
  PlyCloud ply = read_ply(path);
  PointCloud cloud;
  cloud.points = std::move(ply.points);
  cloud.labels = std::move(ply.labels);
  return cloud;
}

}  // namespace artic
