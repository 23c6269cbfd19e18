#include "quakebrief/labels.hpp"

#include "quakebrief/error.hpp"

namespace qb {

Label label_from_index(std::size_t index) {
  if (index >= kNumLabels) throw DataError("label index out of range: " + std::to_string(index));
  return static_cast<Label>(index);
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kBuilding: return "building";
    case Label::kInfrastructure: return "infrastructure";
    case Label::kResilience: return "resilience";
    case Label::kOther: return "other";
  }
  return "other";
}

std::optional<Label> parse_label(std::string_view text) {
  for (Label label : kAllLabels) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

}  // namespace qb
