#include "artic/sequence.hpp"

namespace artic {

void validate_sequence(const ObservedSequence& seq) {
  if (seq.frames.empty()) {
    throw EmptyInputError("observed sequence has no frames");
  }
  for (std::size_t t = 0; t < seq.frames.size(); ++t) {
    if (seq.frames[t].empty()) {
      throw EmptyInputError("observed frame " + std::to_string(t) + " is empty");
    }
  }
  if (seq.rest.empty()) {
    throw EmptyInputError("rest cloud is empty");
  }
  if (!seq.rest.labels) {
    throw EmptyInputError("rest cloud has no part labels");
  }
  bool has_static = false;
  bool has_dynamic = false;
  for (PartLabel label : *seq.rest.labels) {
    has_static |= label == PartLabel::Static;
    has_dynamic |= label == PartLabel::Dynamic;
  }
  if (!has_static || !has_dynamic) {
    throw EmptyInputError("rest cloud must contain both Static and Dynamic points");
  }
}

PointCloud select_part(const PointCloud& labeled, PartLabel label) {
  if (!labeled.labels) {
    throw EmptyInputError("cloud has no part labels");
  }
  PointCloud out;
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    if ((*labeled.labels)[i] == label) {
      out.points.push_back(labeled.points[i]);
    }
  }
  if (out.empty()) {
    throw EmptyInputError("no points with the requested part label");
  }
  return out;
}

}  // namespace artic
