#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "quakebrief/labels.hpp"

namespace qb {

struct AccuracyReport {
  double accuracy = 0.0;
  std::size_t n = 0;
  /// confusion[truth][prediction]
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> confusion{};
};

/// Throws DataError on length mismatch or empty input.
AccuracyReport accuracy(std::span<const Label> predictions, std::span<const Label> truth);

/// Percent scale, as in summarization tables.
struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// F1 from precision and recall; 0 when both are 0.
double f1_score(double precision, double recall);

/// Clipped n-gram overlap over corpus tokens. Throws DataError for n < 1.
RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n);

enum class RougeLVariant {
  /// Union-LCS per reference sentence against all candidate sentences; covered
  /// distinct words over distinct-word counts of each side.
  kSummaryLevel,
  /// Plain LCS of the two whole token streams.
  kWholeText,
};

RougeScore rouge_l(std::string_view candidate, std::string_view reference,
                   RougeLVariant variant = RougeLVariant::kSummaryLevel);

/// O(|a|*|b|) dynamic program.
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);
/// Positions in `a` of one longest common subsequence with `b`.
std::vector<std::size_t> lcs_positions(std::span<const std::string> a, std::span<const std::string> b);

struct RougeReport {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rouge_l;
};

RougeReport rouge_report(std::string_view candidate, std::string_view reference);

/// {rouge1:{p,r,f1}, rouge2:{...}, rougeL:{...}}
nlohmann::json to_json(const RougeReport& report);
nlohmann::json to_json(const AccuracyReport& report);

}  // namespace qb
