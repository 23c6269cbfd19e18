#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qb {

/// Sentence classes. The first three are the "real" classes of the GAN;
/// index 3 doubles as the GAN's fake class.
enum class Label : std::uint8_t {
  kBuilding = 0,
  kInfrastructure = 1,
  kResilience = 2,
  kOther = 3,
};

inline constexpr std::size_t kNumLabels = 4;
inline constexpr std::size_t kNumRealClasses = 3;
inline constexpr std::size_t kFakeClass = kNumRealClasses;

inline constexpr std::array<Label, kNumLabels> kAllLabels{
    Label::kBuilding, Label::kInfrastructure, Label::kResilience, Label::kOther};

constexpr std::size_t index_of(Label label) { return static_cast<std::size_t>(label); }
Label label_from_index(std::size_t index);

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view text);

}  // namespace qb
