#include "artic/overlay.hpp"

#include <fstream>
#include <sstream>

#include "artic/manifest.hpp"
#include "artic/ply_io.hpp"
#include "artic/report_io.hpp"

namespace artic {

namespace {

constexpr std::array<std::uint8_t, 3> kGray = {128, 128, 128};
constexpr std::array<std::uint8_t, 3> kBlue = {0, 0, 255};
constexpr std::array<std::uint8_t, 3> kRed = {255, 0, 0};
constexpr std::array<std::uint8_t, 3> kGreen = {0, 255, 0};

void append_axis_samples(PlyCloud& out, const MotionAxis& axis, double diagonal,
                         const std::array<std::uint8_t, 3>& color) {
  const double span = kAxisSpanFrac * diagonal;
  for (int k = 0; k < kAxisSampleCount; ++k) {
    const double t =
        span * ((2.0 * k - (kAxisSampleCount - 1)) / (kAxisSampleCount - 1));
    out.points.push_back(axis.origin + t * axis.direction);
    out.colors->push_back(color);
  }
}

}  // namespace

void export_overlay(const ObservedSequence& seq, const MotionAxis& pred,
                    const std::optional<MotionAxis>& gt, const std::string& path) {
  validate_sequence(seq);
  validate_axis(pred);
  if (gt) {
    validate_axis(*gt);
  }

  PlyCloud out;
  out.colors.emplace();
  for (std::size_t i = 0; i < seq.rest.size(); ++i) {
    out.points.push_back(seq.rest.points[i]);
    out.colors->push_back((*seq.rest.labels)[i] == PartLabel::Dynamic ? kBlue
                                                                      : kGray);
  }

  const double diagonal = bbox_diagonal(seq.rest);
  append_axis_samples(out, pred, diagonal, kRed);
  if (gt) {
    append_axis_samples(out, *gt, diagonal, kGreen);
  }
  write_ply(path, out, PlyFormat::BinaryLittleEndian);
}

void export_trace(const OptTrace& trace, const std::string& path) {
  std::ostringstream out;
  out << "iteration,loss\n";
  for (std::size_t i = 0; i < trace.losses.size(); ++i) {
    out << (i + 1) << ',' << format_double(trace.losses[i]) << '\n';
  }
  write_text_file(path, out.str());
}

std::vector<double> read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("trace csv: empty file", 0);
  }
  std::vector<double> losses;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("trace csv: malformed row", 0);
    }
    losses.push_back(std::stod(line.substr(comma + 1)));
  }
  return losses;
}

}  // namespace artic
