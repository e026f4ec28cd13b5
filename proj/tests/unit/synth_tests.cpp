#include <doctest.h>

#include "artic/synth.hpp"
#include "oracles.hpp"

using namespace artic;
using namespace artic::testing;

TEST_SUITE_BEGIN("synth");

TEST_CASE("all templates construct with the right motion kind") {
  for (TemplateName name : {TemplateName::Door, TemplateName::Drawer,
                            TemplateName::Lid, TemplateName::Laptop,
                            TemplateName::TrashcanLid}) {
    const ObjectTemplate tmpl = make_template(name, 6);
    CHECK(tmpl.gt_profile.size() == 6);
    CHECK(is_unit(tmpl.gt_axis.direction));
    if (name == TemplateName::Drawer) {
      CHECK(tmpl.gt_axis.kind == MotionKind::Prismatic);
    } else {
      CHECK(tmpl.gt_axis.kind == MotionKind::Revolute);
    }
    CHECK(template_from_string(to_string(name)) == name);
  }
  CHECK_THROWS_AS(template_from_string("fridge"), Error);
}

TEST_CASE("generate labels both parts and honors point counts") {
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 4);
  const auto [seq, gt] = generate(tmpl, 250, 4, /*seed=*/21);

  REQUIRE(seq.rest.labels.has_value());
  REQUIRE(seq.rest.size() == 500);
  int static_count = 0;
  int dynamic_count = 0;
  for (PartLabel label : *seq.rest.labels) {
    (label == PartLabel::Static ? static_count : dynamic_count)++;
  }
  CHECK(static_count == 250);
  CHECK(dynamic_count == 250);
  CHECK(seq.frames.size() == 4);
  for (const auto& frame : seq.frames) {
    CHECK(frame.size() == 250);
  }
}

TEST_CASE("single zero-motion frame equals the rest part exactly") {
  const ObjectTemplate tmpl = make_template(TemplateName::Lid, 1);
  REQUIRE(tmpl.gt_profile.size() == 1);
  CHECK(tmpl.gt_profile[0] == 0.0);

  const auto [seq, gt] = generate(tmpl, 120, 1, /*seed=*/22);
  const PointCloud dyn = dynamic_part(seq.rest);
  REQUIRE(seq.frames[0].size() == dyn.size());
  for (std::size_t i = 0; i < dyn.size(); ++i) {
    CHECK(seq.frames[0].points[i] == dyn.points[i]);
  }
}

TEST_CASE("drawer frames are rigid translations of the rest part") {
  const ObjectTemplate tmpl = make_template(TemplateName::Drawer, 5);
  const auto [seq, gt] = generate(tmpl, 150, 5, /*seed=*/23);
  const PointCloud dyn = dynamic_part(seq.rest);

  for (const auto& frame : seq.frames) {
    REQUIRE(frame.size() == dyn.size());
    for (std::size_t i = 1; i < dyn.size(); i += 17) {
      const double before = (dyn.points[i] - dyn.points[0]).norm();
      const double after = (frame.points[i] - frame.points[0]).norm();
      REQUIRE(std::abs(after - before) <= 1e-9 * std::max(1.0, before));
    }
  }
}

TEST_CASE("generate is deterministic for a fixed seed") {
  const ObjectTemplate tmpl = make_template(TemplateName::Laptop, 3);
  const auto [a, gta] = generate(tmpl, 140, 3, /*seed=*/24);
  const auto [b, gtb] = generate(tmpl, 140, 3, /*seed=*/24);
  REQUIRE(a.rest.size() == b.rest.size());
  for (std::size_t i = 0; i < a.rest.size(); ++i) {
    REQUIRE(a.rest.points[i] == b.rest.points[i]);
  }
  const auto [c, gtc] = generate(tmpl, 140, 3, /*seed=*/25);
  bool any_differ = false;
  for (std::size_t i = 0; i < a.rest.size(); ++i) {
    any_differ |= a.rest.points[i] != c.rest.points[i];
  }
  CHECK(any_differ);
}

TEST_CASE("generate validates its inputs") {
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 3);
  CHECK_THROWS_AS(generate(tmpl, 50, 3), Error);   // too few points
  CHECK_THROWS_AS(generate(tmpl, 150, 5), Error);  // profile length mismatch

  ObjectTemplate bad = tmpl;
  bad.panel_dims = {0.0, 1.0, 1.0};
  CHECK_THROWS_AS(generate(bad, 150, 3), Error);

  bad = tmpl;
  bad.gt_axis.kind = MotionKind::Prismatic;  // door must be revolute
  CHECK_THROWS_AS(generate(bad, 150, 3), Error);
}

TEST_CASE("hinge offset moves the ground truth off the face center") {
  const ObjectTemplate centered = make_template(TemplateName::Door, 3);
  const ObjectTemplate offset = make_template(TemplateName::Door, 3, 0.08);
  const double moved = (offset.gt_axis.origin - centered.gt_axis.origin).norm();
  CHECK(moved == doctest::Approx(0.08 * centered.panel_dims.x()).epsilon(1e-12));
  CHECK_THROWS_AS(make_template(TemplateName::Door, 3, 0.2), Error);
}

TEST_CASE("all-zero degradation returns the sequence bitwise") {
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 3);
  const auto [seq, gt] = generate(tmpl, 130, 3, /*seed=*/26);
  const ObservedSequence out = degrade(seq, DegradeConfig{});
  for (std::size_t t = 0; t < seq.frames.size(); ++t) {
    REQUIRE(out.frames[t].size() == seq.frames[t].size());
    for (std::size_t i = 0; i < seq.frames[t].size(); ++i) {
      REQUIRE(out.frames[t].points[i] == seq.frames[t].points[i]);
    }
  }
}

TEST_CASE("degradation is deterministic and leaves the rest cloud alone") {
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 3);
  const auto [seq, gt] = generate(tmpl, 200, 3, /*seed=*/27);

  DegradeConfig cfg;
  cfg.jitter_sigma = 0.01;
  cfg.dropout_rate = 0.5;
  cfg.outlier_rate = 0.05;
  cfg.seed = 99;

  const ObservedSequence a = degrade(seq, cfg);
  const ObservedSequence b = degrade(seq, cfg);

  REQUIRE(a.rest.size() == seq.rest.size());
  for (std::size_t i = 0; i < seq.rest.size(); ++i) {
    REQUIRE(a.rest.points[i] == seq.rest.points[i]);
    REQUIRE((*a.rest.labels)[i] == (*seq.rest.labels)[i]);
  }
  for (std::size_t t = 0; t < a.frames.size(); ++t) {
    REQUIRE(a.frames[t].size() == b.frames[t].size());
    for (std::size_t i = 0; i < a.frames[t].size(); ++i) {
      REQUIRE(a.frames[t].points[i] == b.frames[t].points[i]);
    }
  }

  // 200 points: drop half, add 5% of the original count back as outliers.
  CHECK(a.frames[1].size() == 110);
}

TEST_CASE("over-aggressive dropout raises OverDegradedError") {
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 2);
  const auto [seq, gt] = generate(tmpl, 100, 2, /*seed=*/28);
  DegradeConfig cfg;
  cfg.dropout_rate = 0.95;  // 5 of 100 points left
  CHECK_THROWS_AS(degrade(seq, cfg), OverDegradedError);
}

TEST_CASE("degrade validates rates") {
  const ObjectTemplate tmpl = make_template(TemplateName::Door, 2);
  const auto [seq, gt] = generate(tmpl, 120, 2, /*seed=*/29);
  DegradeConfig cfg;
  cfg.dropout_rate = 1.0;
  CHECK_THROWS_AS(degrade(seq, cfg), Error);
  cfg = {};
  cfg.jitter_sigma = -0.1;
  CHECK_THROWS_AS(degrade(seq, cfg), Error);
}

TEST_SUITE_END();
