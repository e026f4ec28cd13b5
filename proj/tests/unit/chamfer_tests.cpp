#include <doctest.h>

#include <algorithm>

#include "artic/chamfer.hpp"
#include "oracles.hpp"

using namespace artic;
using namespace artic::testing;

TEST_SUITE_BEGIN("chamfer");

TEST_CASE("identical clouds score zero") {
  RngStream rng(3, "chamfer/identity");
  const PointCloud cloud = random_cloud(rng, 120);
  const ChamferResult result = chamfer_distance(cloud, cloud);
  CHECK(result.value == 0.0);
  CHECK(result.forward_term == 0.0);
  CHECK(result.backward_term == 0.0);
}

TEST_CASE("single pair gives the squared distance both ways") {
  PointCloud a, b;
  a.points.push_back({0, 0, 0});
  b.points.push_back({1, 0, 0});
  const ChamferResult result = chamfer_distance(a, b);
  CHECK(result.forward_term == doctest::Approx(1.0));
  CHECK(result.backward_term == doctest::Approx(1.0));
  CHECK(result.value == doctest::Approx(2.0));
}

TEST_CASE("empty input raises EmptyInputError") {
  PointCloud empty, one;
  one.points.push_back({0, 0, 0});
  CHECK_THROWS_AS(chamfer_distance(empty, one), EmptyInputError);
  CHECK_THROWS_AS(chamfer_distance(one, empty), EmptyInputError);
}

TEST_CASE("kd-tree result equals brute force on 100 random pairs") {
  RngStream rng(5, "chamfer/oracle");
  for (int trial = 0; trial < 100; ++trial) {
    const int na = 1 + static_cast<int>(rng.uniform_index(500));
    const int nb = 1 + static_cast<int>(rng.uniform_index(500));
    const PointCloud a = random_cloud(rng, na, rng.uniform(0.2, 2.0));
    const PointCloud b = random_cloud(rng, nb, rng.uniform(0.2, 2.0));
    const double indexed = chamfer_distance(a, b).value;
    const double brute = brute_chamfer(a, b);
    REQUIRE(std::abs(indexed - brute) <= 1e-9 * std::max(1.0, std::abs(brute)));
  }
}

TEST_CASE("symmetry and permutation invariance") {
  RngStream rng(7, "chamfer/symmetry");
  for (int trial = 0; trial < 25; ++trial) {
    PointCloud a = random_cloud(rng, 80);
    PointCloud b = random_cloud(rng, 60);
    const double ab = chamfer_distance(a, b).value;
    const double ba = chamfer_distance(b, a).value;
    REQUIRE(std::abs(ab - ba) <= 1e-12);

    // Shuffle both clouds (Fisher-Yates on the test's own rng).
    for (std::size_t i = a.points.size(); i > 1; --i) {
      std::swap(a.points[i - 1], a.points[rng.uniform_index(i)]);
    }
    for (std::size_t i = b.points.size(); i > 1; --i) {
      std::swap(b.points[i - 1], b.points[rng.uniform_index(i)]);
    }
    const double shuffled = chamfer_distance(a, b).value;
    REQUIRE(std::abs(shuffled - ab) <= 1e-12);
  }
}

TEST_CASE("rigid motions leave the value unchanged") {
  RngStream rng(11, "chamfer/rigid");
  for (int trial = 0; trial < 25; ++trial) {
    const PointCloud a = random_cloud(rng, 70);
    const PointCloud b = random_cloud(rng, 90);
    const double before = chamfer_distance(a, b).value;
    const Mat3 rot = random_rotation(rng);
    const Vec3 t(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    const double after =
        chamfer_distance(transformed(a, rot, t), transformed(b, rot, t)).value;
    REQUIRE(std::abs(after - before) <= 1e-9 * std::max(1.0, before));
  }
}

TEST_CASE("value decomposes into forward and backward terms") {
  RngStream rng(13, "chamfer/terms");
  const PointCloud a = random_cloud(rng, 50);
  const PointCloud b = random_cloud(rng, 50);
  const ChamferResult r = chamfer_distance(a, b);
  CHECK(r.value == r.forward_term + r.backward_term);
  CHECK(r.forward_term >= 0.0);
  CHECK(r.backward_term >= 0.0);
}

TEST_CASE("chamfer_sequence sums per-frame values") {
  RngStream rng(17, "chamfer/sequence");
  std::vector<PointCloud> pred, obs;
  double expected = 0.0;
  for (int t = 0; t < 3; ++t) {
    pred.push_back(random_cloud(rng, 40));
    obs.push_back(random_cloud(rng, 40));
    expected += chamfer_distance(pred.back(), obs.back()).value;
  }
  CHECK(chamfer_sequence(pred, obs) == doctest::Approx(expected).epsilon(1e-15));

  SUBCASE("identical sequences score zero") {
    CHECK(chamfer_sequence(pred, pred) == 0.0);
  }
  SUBCASE("single frame equals chamfer_distance") {
    const std::vector<PointCloud> p1{pred[0]};
    const std::vector<PointCloud> o1{obs[0]};
    CHECK(chamfer_sequence(p1, o1) ==
          doctest::Approx(chamfer_distance(pred[0], obs[0]).value));
  }
  SUBCASE("length mismatch raises FrameCountError") {
    std::vector<PointCloud> short_obs(obs.begin(), obs.begin() + 2);
    CHECK_THROWS_AS(chamfer_sequence(pred, short_obs), FrameCountError);
  }
}

TEST_CASE("frame alignment matters for a rotating sequence") {
  // Three frames of a rotating bar; permuting the predicted frames must
  // change the summed value (verified against the brute-force oracle).
  PointCloud bar;
  for (int i = 0; i < 30; ++i) {
    bar.points.emplace_back(0.1 * i, 0.0, 0.0);
  }
  const MotionAxis axis{MotionKind::Revolute, {0, 0, 1}, {0, 0, 0}};
  std::vector<PointCloud> frames;
  for (int t = 0; t < 3; ++t) {
    frames.push_back(apply_revolute(bar, axis, 0.4 * t));
  }
  std::vector<PointCloud> aligned = frames;
  std::vector<PointCloud> permuted = {frames[1], frames[2], frames[0]};

  double brute_aligned = 0.0;
  double brute_permuted = 0.0;
  for (int t = 0; t < 3; ++t) {
    brute_aligned += brute_chamfer(aligned[t], frames[t]);
    brute_permuted += brute_chamfer(permuted[t], frames[t]);
  }
  CHECK(chamfer_sequence(aligned, frames) == doctest::Approx(brute_aligned));
  CHECK(chamfer_sequence(permuted, frames) == doctest::Approx(brute_permuted));
  CHECK(chamfer_sequence(permuted, frames) > chamfer_sequence(aligned, frames));
}

TEST_SUITE_END();
