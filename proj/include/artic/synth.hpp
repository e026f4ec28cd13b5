#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artic/sequence.hpp"
#include "artic/types.hpp"

namespace artic {

enum class TemplateName { Door, Drawer, Lid, Laptop, TrashcanLid };

const char* to_string(TemplateName name);
TemplateName template_from_string(const std::string& s);

/// Parametric two-part object: a static body box and a dynamic panel box
/// with a ground-truth motion. Hinges sit exactly on a face center of the
/// panel's bounding box (so noiseless recovery is a pure algorithm test);
/// a hinge offset fraction moves them off-center to probe candidate
/// quantization.
struct ObjectTemplate {
  TemplateName name = TemplateName::Door;
  Vec3 body_dims = Vec3::Zero();
  Vec3 panel_dims = Vec3::Zero();
  Point3 body_center = Point3::Zero();
  Point3 panel_center = Point3::Zero();
  MotionAxis gt_axis;
  std::vector<MotionMagnitude> gt_profile;  // one entry per frame
  double hinge_offset_frac = 0.0;
};

/// Built-in template with a linear ground-truth motion profile from zero to
/// the template's full articulation over `frames` frames.
ObjectTemplate make_template(TemplateName name, int frames,
                             double hinge_offset_frac = 0.0);

/// Samples both part surfaces (area-weighted, stratified, seeded), labels
/// the rest cloud, and plays the ground-truth profile to produce the
/// dynamic-part frame clouds. frames must match the template profile.
std::pair<ObservedSequence, MotionAxis> generate(const ObjectTemplate& tmpl,
                                                 int points_per_part, int frames,
                                                 std::uint64_t seed = 0);

/// Reconstruction-noise stand-in: per-frame Gaussian jitter (sigma as a
/// fraction of the object diagonal), uniform dropout, and uniform outliers
/// inside the 1.2x-inflated object bounding box.
struct DegradeConfig {
  double jitter_sigma = 0.0;
  double dropout_rate = 0.0;
  double outlier_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Applies the degradation model to every frame; the rest cloud and its
/// labels are never touched. Deterministic given cfg.seed. Throws
/// OverDegradedError if dropout leaves a frame with fewer than 10 points.
ObservedSequence degrade(const ObservedSequence& seq, const DegradeConfig& cfg);

}  // namespace artic
