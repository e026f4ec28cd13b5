#include <doctest.h>

#include "artic/motion.hpp"
#include "artic/rng.hpp"
#include "oracles.hpp"

using namespace artic;
using namespace artic::testing;

namespace {

MotionAxis revolute(const Vec3& dir, const Point3& origin) {
  return {MotionKind::Revolute, dir.normalized(), origin};
}

MotionAxis prismatic(const Vec3& dir, const Point3& origin = Point3::Zero()) {
  return {MotionKind::Prismatic, dir.normalized(), origin};
}

}  // namespace

TEST_SUITE_BEGIN("motion");

TEST_CASE("zero angle returns the input cloud bitwise") {
  RngStream rng(7, "motion/zero");
  const PointCloud cloud = random_cloud(rng, 40);
  const PointCloud out = apply_revolute(cloud, revolute({0, 0, 1}, {0.3, -0.1, 2}), 0.0);
  REQUIRE(out.size() == cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(out.points[i] == cloud.points[i]);
  }
}

TEST_CASE("quarter turn about z maps x onto y") {
  PointCloud cloud;
  cloud.points.push_back({1, 0, 0});
  const PointCloud out =
      apply_revolute(cloud, revolute({0, 0, 1}, {0, 0, 0}), deg_to_rad(90.0));
  CHECK(out.points[0].x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(out.points[0].y() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.points[0].z() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("points on the axis line stay fixed") {
  const MotionAxis axis = revolute({0.3, 0.9, -0.2}, {1, 2, 3});
  PointCloud cloud;
  for (int k = -3; k <= 3; ++k) {
    cloud.points.push_back(axis.origin + 0.7 * k * axis.direction);
  }
  const PointCloud out = apply_revolute(cloud, axis, 1.234);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK((out.points[i] - cloud.points[i]).norm() < 1e-9);
  }
}

TEST_CASE("prismatic translation along z") {
  PointCloud cloud;
  cloud.points.push_back({0, 0, 0});
  const PointCloud out = apply_prismatic(cloud, prismatic({0, 0, 1}), 2.0);
  CHECK(out.points[0] == Point3(0, 0, 2));
}

TEST_CASE("prismatic output ignores the axis origin") {
  RngStream rng(11, "motion/prismatic");
  const PointCloud cloud = random_cloud(rng, 25);
  const Vec3 dir = random_unit(rng);
  const PointCloud a = apply_prismatic(cloud, prismatic(dir, {0, 0, 0}), 0.37);
  const PointCloud b = apply_prismatic(cloud, prismatic(dir, {5, -2, 9}), 0.37);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(a.points[i] == b.points[i]);
  }
}

TEST_CASE("apply_motion dispatches by kind, bitwise") {
  RngStream rng(13, "motion/dispatch");
  const PointCloud cloud = random_cloud(rng, 30);
  const MotionAxis rev = revolute(random_unit(rng), {0.2, 0.1, -0.4});
  const MotionAxis pri = prismatic(random_unit(rng));

  const PointCloud via_dispatch_r = apply_motion(cloud, rev, 0.81);
  const PointCloud direct_r = apply_revolute(cloud, rev, 0.81);
  const PointCloud via_dispatch_p = apply_motion(cloud, pri, -0.4);
  const PointCloud direct_p = apply_prismatic(cloud, pri, -0.4);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(via_dispatch_r.points[i] == direct_r.points[i]);
    CHECK(via_dispatch_p.points[i] == direct_p.points[i]);
  }
  CHECK(apply_motion(cloud, rev, 0.0).points[5] == cloud.points[5]);
  CHECK(apply_motion(cloud, pri, 0.0).points[5] == cloud.points[5]);
}

TEST_CASE("non-unit direction raises InvalidAxisError") {
  PointCloud cloud;
  cloud.points.push_back({1, 1, 1});
  MotionAxis bad{MotionKind::Revolute, {0, 0, 2}, {0, 0, 0}};
  CHECK_THROWS_AS(apply_revolute(cloud, bad, 0.5), InvalidAxisError);
  bad.kind = MotionKind::Prismatic;
  CHECK_THROWS_AS(apply_prismatic(cloud, bad, 0.5), InvalidAxisError);
}

TEST_CASE("kind mismatch raises KindMismatchError") {
  PointCloud cloud;
  cloud.points.push_back({1, 1, 1});
  CHECK_THROWS_AS(apply_revolute(cloud, prismatic({1, 0, 0}), 0.5), KindMismatchError);
  CHECK_THROWS_AS(apply_prismatic(cloud, revolute({1, 0, 0}, {0, 0, 0}), 0.5),
                  KindMismatchError);
}

TEST_CASE("rigidity: pairwise distances preserved over 1000 random cases") {
  RngStream rng(17, "motion/rigidity");
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PointCloud cloud = random_cloud(rng, 8, rng.uniform(0.5, 3.0));
    const MotionAxis axis =
        revolute(random_unit(rng),
                 {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)});
    const PointCloud out = apply_revolute(cloud, axis, rng.uniform(-M_PI, M_PI));
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      for (std::size_t j = i + 1; j < cloud.size(); ++j) {
        const double before = (cloud.points[i] - cloud.points[j]).norm();
        const double after = (out.points[i] - out.points[j]).norm();
        REQUIRE(std::abs(after - before) <= 1e-9 * std::max(1.0, before));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("axis fixed points: 1000 random cases") {
  RngStream rng(19, "motion/fixed");
  for (int trial = 0; trial < 1000; ++trial) {
    const MotionAxis axis =
        revolute(random_unit(rng),
                 {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)});
    PointCloud cloud;
    const Point3 on_axis = axis.origin + rng.uniform(-4, 4) * axis.direction;
    cloud.points.push_back(on_axis +
                           1e-13 * Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1),
                                        rng.uniform(-1, 1)));
    const PointCloud out = apply_revolute(cloud, axis, rng.uniform(-M_PI, M_PI));
    REQUIRE((out.points[0] - cloud.points[0]).norm() < 1e-9);
  }
}

TEST_CASE("composition: rotating by a then b equals rotating by a+b") {
  RngStream rng(23, "motion/compose");
  for (int trial = 0; trial < 1000; ++trial) {
    const PointCloud cloud = random_cloud(rng, 4);
    const MotionAxis axis =
        revolute(random_unit(rng),
                 {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    const double a = rng.uniform(-1.5, 1.5);
    const double b = rng.uniform(-1.5, 1.5);
    const PointCloud two_step = apply_revolute(apply_revolute(cloud, axis, a), axis, b);
    const PointCloud one_step = apply_revolute(cloud, axis, a + b);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      REQUIRE((two_step.points[i] - one_step.points[i]).norm() <= 1e-9);
    }
  }
}

TEST_CASE("sign symmetry: +angle about d equals -angle about -d") {
  RngStream rng(29, "motion/sign");
  for (int trial = 0; trial < 1000; ++trial) {
    const PointCloud cloud = random_cloud(rng, 4);
    const Vec3 dir = random_unit(rng);
    const Point3 origin(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double angle = rng.uniform(-M_PI, M_PI);
    const PointCloud pos = apply_revolute(cloud, revolute(dir, origin), angle);
    const PointCloud neg = apply_revolute(cloud, revolute(-dir, origin), -angle);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      REQUIRE((pos.points[i] - neg.points[i]).norm() <= 1e-9);
    }
  }
}

TEST_CASE("labels are preserved") {
  PointCloud cloud;
  cloud.points = {{0, 0, 0}, {1, 0, 0}};
  cloud.labels = {{PartLabel::Static, PartLabel::Dynamic}};
  const PointCloud out = apply_revolute(cloud, revolute({0, 1, 0}, {0, 0, 0}), 0.3);
  REQUIRE(out.labels.has_value());
  CHECK((*out.labels)[0] == PartLabel::Static);
  CHECK((*out.labels)[1] == PartLabel::Dynamic);
}

TEST_SUITE_END();
