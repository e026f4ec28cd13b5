#include "artic/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "artic/motion.hpp"
#include "artic/rng.hpp"

namespace artic {

namespace {

struct Triangle {
  Point3 a, b, c;
  double area() const { return 0.5 * (b - a).cross(c - a).norm(); }
};

/// 12 triangles covering the surface of an axis-aligned box.
std::vector<Triangle> box_triangles(const Point3& center, const Vec3& dims) {
  const Vec3 h = 0.5 * dims;
  std::array<Point3, 8> corner;
  for (int i = 0; i < 8; ++i) {
    corner[i] = center + Vec3((i & 1) ? h.x() : -h.x(), (i & 2) ? h.y() : -h.y(),
                              (i & 4) ? h.z() : -h.z());
  }
  // Faces as corner index quads (consistent winding is irrelevant here).
  constexpr int faces[6][4] = {{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4},
                               {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
  std::vector<Triangle> tris;
  tris.reserve(12);
  for (const auto& f : faces) {
    tris.push_back({corner[f[0]], corner[f[1]], corner[f[2]]});
    tris.push_back({corner[f[0]], corner[f[2]], corner[f[3]]});
  }
  return tris;
}

Point3 tri_point(const Triangle& tri, double u, double v) {
  if (u + v > 1.0) {  // fold the unit square onto the triangle
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return tri.a + u * (tri.b - tri.a) + v * (tri.c - tri.a);
}

/// Area-weighted sampling: per-triangle counts by largest remainder, then a
/// full jittered s x s grid per triangle with the leftover points placed
/// uniformly. The complete grid keeps the sample second moments close to
/// the exact surface moments.
std::vector<Point3> sample_surface(const std::vector<Triangle>& tris, int count,
                                   RngStream& rng) {
  const double total_area =
      std::accumulate(tris.begin(), tris.end(), 0.0,
                      [](double s, const Triangle& t) { return s + t.area(); });

  std::vector<int> counts(tris.size(), 0);
  std::vector<std::pair<double, std::size_t>> remainders;
  int assigned = 0;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const double exact = count * tris[i].area() / total_area;
    counts[i] = static_cast<int>(exact);
    assigned += counts[i];
    remainders.emplace_back(-(exact - counts[i]), i);
  }
  std::sort(remainders.begin(), remainders.end());
  for (int k = 0; k < count - assigned; ++k) {
    ++counts[remainders[k % remainders.size()].second];
  }

  std::vector<Point3> points;
  points.reserve(count);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const int n = counts[i];
    if (n <= 0) {
      continue;
    }
    const int s = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
    const int grid = std::min(n, s * s);
    for (int k = 0; k < grid; ++k) {
      const double u = (k % s + rng.uniform()) / s;
      const double v = (k / s + rng.uniform()) / s;
      points.push_back(tri_point(tris[i], u, v));
    }
    for (int k = grid; k < n; ++k) {
      points.push_back(tri_point(tris[i], rng.uniform(), rng.uniform()));
    }
  }
  return points;
}

std::vector<MotionMagnitude> linear_profile(double full, int frames) {
  std::vector<MotionMagnitude> profile(frames, 0.0);
  for (int t = 0; t < frames; ++t) {
    profile[t] = frames > 1 ? full * t / (frames - 1) : 0.0;
  }
  return profile;
}

void validate_template(const ObjectTemplate& tmpl) {
  if ((tmpl.body_dims.array() <= 0.0).any() || (tmpl.panel_dims.array() <= 0.0).any()) {
    throw Error("object template: part dimensions must be positive");
  }
  if (tmpl.gt_profile.empty()) {
    throw Error("object template: empty motion profile");
  }
  validate_axis(tmpl.gt_axis);
  const bool revolute = tmpl.name != TemplateName::Drawer;
  if (revolute != (tmpl.gt_axis.kind == MotionKind::Revolute)) {
    throw Error("object template: motion kind does not match template name");
  }
}

}  // namespace

const char* to_string(TemplateName name) {
  switch (name) {
    case TemplateName::Door: return "door";
    case TemplateName::Drawer: return "drawer";
    case TemplateName::Lid: return "lid";
    case TemplateName::Laptop: return "laptop";
    case TemplateName::TrashcanLid: return "trashcan_lid";
  }
  return "door";
}

TemplateName template_from_string(const std::string& s) {
  if (s == "door") return TemplateName::Door;
  if (s == "drawer") return TemplateName::Drawer;
  if (s == "lid") return TemplateName::Lid;
  if (s == "laptop") return TemplateName::Laptop;
  if (s == "trashcan_lid") return TemplateName::TrashcanLid;
  throw Error("unknown template name: " + s);
}

ObjectTemplate make_template(TemplateName name, int frames, double hinge_offset_frac) {
  if (frames < 1) {
    throw Error("object template: frames must be >= 1");
  }
  if (hinge_offset_frac < 0.0 || hinge_offset_frac > 0.1) {
    throw Error("object template: hinge offset fraction must be in [0, 0.1]");
  }

  ObjectTemplate t;
  t.name = name;
  t.hinge_offset_frac = hinge_offset_frac;
  t.gt_axis.kind =
      name == TemplateName::Drawer ? MotionKind::Prismatic : MotionKind::Revolute;

  switch (name) {
    case TemplateName::Door:
      t.body_dims = {1.0, 1.8, 0.5};
      t.body_center = {0.0, 0.0, 0.0};
      t.panel_dims = {0.92, 1.72, 0.04};
      t.panel_center = {0.0, 0.0, 0.27};
      t.gt_axis.direction = Vec3::UnitY();  // tall axis of the slab
      t.gt_axis.origin = t.panel_center + Vec3(0.5 * t.panel_dims.x(), 0.0, 0.0);
      t.gt_profile = linear_profile(deg_to_rad(90.0), frames);
      if (hinge_offset_frac > 0.0) {
        t.gt_axis.origin -= Vec3(hinge_offset_frac * t.panel_dims.x(), 0.0, 0.0);
      }
      break;
    case TemplateName::Drawer:
      t.body_dims = {0.9, 0.6, 0.7};
      t.body_center = {0.0, 0.0, 0.0};
      t.panel_dims = {0.8, 0.25, 0.6};
      t.panel_center = {0.0, 0.1, 0.05};
      t.gt_axis.direction = Vec3::UnitZ();  // slide out of the body
      t.gt_axis.origin = t.panel_center;    // convention: dynamic centroid
      t.gt_profile = linear_profile(0.4 * t.panel_dims.z(), frames);
      break;
    case TemplateName::Lid:
      t.body_dims = {0.9, 0.5, 0.6};
      t.body_center = {0.0, 0.0, 0.0};
      t.panel_dims = {0.88, 0.04, 0.58};
      t.panel_center = {0.0, 0.27, 0.0};
      t.gt_axis.direction = Vec3::UnitX();  // hinge along the back edge
      t.gt_axis.origin = t.panel_center - Vec3(0.0, 0.0, 0.5 * t.panel_dims.z());
      t.gt_profile = linear_profile(deg_to_rad(60.0), frames);
      if (hinge_offset_frac > 0.0) {
        t.gt_axis.origin += Vec3(0.0, 0.0, hinge_offset_frac * t.panel_dims.z());
      }
      break;
    case TemplateName::Laptop:
      t.body_dims = {0.64, 0.04, 0.45};
      t.body_center = {0.0, 0.0, 0.0};
      t.panel_dims = {0.64, 0.025, 0.44};
      t.panel_center = {0.0, 0.0325, 0.0};
      t.gt_axis.direction = Vec3::UnitX();
      t.gt_axis.origin = t.panel_center - Vec3(0.0, 0.0, 0.5 * t.panel_dims.z());
      t.gt_profile = linear_profile(deg_to_rad(70.0), frames);
      if (hinge_offset_frac > 0.0) {
        t.gt_axis.origin += Vec3(0.0, 0.0, hinge_offset_frac * t.panel_dims.z());
      }
      break;
    case TemplateName::TrashcanLid:
      t.body_dims = {0.5, 0.7, 0.5};
      t.body_center = {0.0, 0.0, 0.0};
      t.panel_dims = {0.56, 0.04, 0.44};
      t.panel_center = {0.0, 0.37, 0.0};
      t.gt_axis.direction = Vec3::UnitX();
      t.gt_axis.origin = t.panel_center - Vec3(0.0, 0.0, 0.5 * t.panel_dims.z());
      t.gt_profile = linear_profile(deg_to_rad(50.0), frames);
      if (hinge_offset_frac > 0.0) {
        t.gt_axis.origin += Vec3(0.0, 0.0, hinge_offset_frac * t.panel_dims.z());
      }
      break;
  }
  return t;
}

std::pair<ObservedSequence, MotionAxis> generate(const ObjectTemplate& tmpl,
                                                 int points_per_part, int frames,
                                                 std::uint64_t seed) {
  validate_template(tmpl);
  if (points_per_part < 100) {
    throw Error("generate: points_per_part must be >= 100");
  }
  if (frames < 1) {
    throw Error("generate: frames must be >= 1");
  }
  if (static_cast<std::size_t>(frames) != tmpl.gt_profile.size()) {
    throw Error("generate: frame count does not match the template profile (" +
                std::to_string(tmpl.gt_profile.size()) + " entries)");
  }

  RngStream static_rng(seed, "generation/static");
  RngStream dynamic_rng(seed, "generation/dynamic");
  const auto body_points =
      sample_surface(box_triangles(tmpl.body_center, tmpl.body_dims),
                     points_per_part, static_rng);
  const auto panel_points =
      sample_surface(box_triangles(tmpl.panel_center, tmpl.panel_dims),
                     points_per_part, dynamic_rng);

  ObservedSequence seq;
  seq.rest.points.reserve(body_points.size() + panel_points.size());
  seq.rest.labels.emplace();
  seq.rest.labels->reserve(body_points.size() + panel_points.size());
  for (const auto& p : body_points) {
    seq.rest.points.push_back(p);
    seq.rest.labels->push_back(PartLabel::Static);
  }
  PointCloud panel;
  panel.points = panel_points;
  for (const auto& p : panel_points) {
    seq.rest.points.push_back(p);
    seq.rest.labels->push_back(PartLabel::Dynamic);
  }

  seq.frames.reserve(frames);
  for (int t = 0; t < frames; ++t) {
    seq.frames.push_back(apply_motion(panel, tmpl.gt_axis, tmpl.gt_profile[t]));
  }
  return {std::move(seq), tmpl.gt_axis};
}

ObservedSequence degrade(const ObservedSequence& seq, const DegradeConfig& cfg) {
  if (cfg.jitter_sigma < 0.0 || cfg.dropout_rate < 0.0 || cfg.dropout_rate >= 1.0 ||
      cfg.outlier_rate < 0.0 || cfg.outlier_rate >= 1.0) {
    throw Error("degrade: jitter_sigma >= 0 and rates in [0, 1) required");
  }
  if (cfg.jitter_sigma == 0.0 && cfg.dropout_rate == 0.0 && cfg.outlier_rate == 0.0) {
    return seq;  // bitwise identity
  }

  const Bounds3 object_bounds = bounds_of(seq.rest);
  const double diagonal = object_bounds.diagonal();
  const double sigma = cfg.jitter_sigma * diagonal;
  const Point3 box_center = object_bounds.center();
  const Vec3 box_half = 0.5 * 1.2 * object_bounds.extent();

  ObservedSequence out;
  out.rest = seq.rest;
  out.frames.reserve(seq.frames.size());

  for (std::size_t t = 0; t < seq.frames.size(); ++t) {
    RngStream rng(cfg.seed, "degradation", t);
    std::vector<Point3> pts = seq.frames[t].points;
    const std::size_t original = pts.size();

    if (sigma > 0.0) {
      for (auto& p : pts) {
        p += sigma * Vec3(rng.normal(), rng.normal(), rng.normal());
      }
    }

    const std::size_t drop =
        static_cast<std::size_t>(std::llround(cfg.dropout_rate * original));
    if (drop > 0) {
      // Partial Fisher-Yates: survivors are the tail after `drop` removals.
      std::vector<std::uint32_t> order(pts.size());
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t k = 0; k < drop; ++k) {
        const std::size_t j = k + rng.uniform_index(order.size() - k);
        std::swap(order[k], order[j]);
      }
      std::vector<Point3> kept;
      kept.reserve(pts.size() - drop);
      std::sort(order.begin() + drop, order.end());
      for (std::size_t k = drop; k < order.size(); ++k) {
        kept.push_back(pts[order[k]]);
      }
      pts = std::move(kept);
    }
    if (pts.size() < 10) {
      throw OverDegradedError("degrade: frame " + std::to_string(t) +
                              " left with fewer than 10 points");
    }

    const std::size_t extra =
        static_cast<std::size_t>(std::llround(cfg.outlier_rate * original));
    for (std::size_t k = 0; k < extra; ++k) {
      pts.push_back(box_center + Vec3(box_half.x() * rng.uniform(-1.0, 1.0),
                                      box_half.y() * rng.uniform(-1.0, 1.0),
                                      box_half.z() * rng.uniform(-1.0, 1.0)));
    }

    PointCloud frame;
    frame.points = std::move(pts);
    out.frames.push_back(std::move(frame));
  }
  return out;
}

}  // namespace artic
