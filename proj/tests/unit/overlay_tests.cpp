#include <doctest.h>

#include <array>
#include <cmath>

#include "artic/manifest.hpp"
#include "artic/motion.hpp"
#include "artic/overlay.hpp"
#include "artic/ply_io.hpp"
#include "artic/synth.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using namespace artic;
using namespace artic::testing;

namespace {

constexpr std::array<std::uint8_t, 3> kRed = {255, 0, 0};
constexpr std::array<std::uint8_t, 3> kGreen = {0, 255, 0};

std::vector<Point3> points_with_color(const PlyCloud& cloud,
                                      const std::array<std::uint8_t, 3>& color) {
  std::vector<Point3> out;
  REQUIRE(cloud.colors.has_value());
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if ((*cloud.colors)[i] == color) {
      out.push_back(cloud.points[i]);
    }
  }
  return out;
}

Vec3 polyline_direction(const std::vector<Point3>& samples) {
  REQUIRE(samples.size() >= 2);
  return (samples.back() - samples.front()).normalized();
}

}  // namespace

TEST_SUITE_BEGIN("overlay");

TEST_CASE("matching prediction and truth coincide in the export") {
  TempDir dir;
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 2);
  const auto [seq, gt] = generate(tmpl, 150, 2, /*seed=*/71);

  export_overlay(seq, gt, gt, dir.file("overlay.ply"));
  const PlyCloud loaded = read_ply(dir.file("overlay.ply"));

  const auto red = points_with_color(loaded, kRed);
  const auto green = points_with_color(loaded, kGreen);
  REQUIRE(red.size() == 64);
  REQUIRE(green.size() == 64);
  for (std::size_t i = 0; i < red.size(); ++i) {
    REQUIRE((red[i] - green[i]).norm() <= 1e-9);
  }
  CHECK(loaded.points.size() == seq.rest.size() + 128);
}

TEST_CASE("a 30 degree axis error is measurable from the file") {
  TempDir dir;
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 2);
  const auto [seq, gt] = generate(tmpl, 150, 2, /*seed=*/72);

  MotionAxis pred = gt;
  pred.direction = rotation_about(Vec3::UnitZ(), deg_to_rad(30.0)) * gt.direction;
  export_overlay(seq, pred, gt, dir.file("overlay.ply"));

  const PlyCloud loaded = read_ply(dir.file("overlay.ply"));
  const Vec3 red_dir = polyline_direction(points_with_color(loaded, kRed));
  const Vec3 green_dir = polyline_direction(points_with_color(loaded, kGreen));
  const double angle =
      rad_to_deg(std::acos(std::clamp(std::abs(red_dir.dot(green_dir)), 0.0, 1.0)));
  CHECK(std::abs(angle - 30.0) <= 0.1);
}

TEST_CASE("missing ground truth leaves no green samples") {
  TempDir dir;
  const ObjectTemplate tmpl = make_template(TemplateName::Lid, 2);
  const auto [seq, gt] = generate(tmpl, 150, 2, /*seed=*/73);
  export_overlay(seq, gt, std::nullopt, dir.file("overlay.ply"));
  const PlyCloud loaded = read_ply(dir.file("overlay.ply"));
  CHECK(points_with_color(loaded, kGreen).empty());
  CHECK(points_with_color(loaded, kRed).size() == 64);
}

TEST_CASE("re-export is bitwise identical") {
  TempDir dir;
  const ObjectTemplate tmpl = make_template(TemplateName::Laptop, 2);
  const auto [seq, gt] = generate(tmpl, 150, 2, /*seed=*/74);
  export_overlay(seq, gt, gt, dir.file("a.ply"));
  export_overlay(seq, gt, gt, dir.file("b.ply"));
  CHECK(read_text_file(dir.file("a.ply")) == read_text_file(dir.file("b.ply")));
}

TEST_CASE("trace export round trips") {
  TempDir dir;

  OptTrace trace;
  trace.initial_loss = 2.0;
  trace.losses = {1.0};
  export_trace(trace, dir.file("trace.csv"));
  const std::string text = read_text_file(dir.file("trace.csv"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);  // header + one row

  trace.losses = {0.9, 0.5, 0.25, 0.1249999};
  export_trace(trace, dir.file("trace2.csv"));
  const std::vector<double> back = read_trace_csv(dir.file("trace2.csv"));
  REQUIRE(back.size() == trace.losses.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    REQUIRE(std::abs(back[i] - trace.losses[i]) <= 1e-12);
  }
}

TEST_SUITE_END();
