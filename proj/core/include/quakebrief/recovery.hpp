#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quakebrief/ingest.hpp"

namespace qb {

struct RecoveryFactor {
  std::string name;
  std::vector<std::string> keywords;  // lowercase
  double weight = 0.0;                // fraction of functionality
};

enum class ThresholdMode {
  /// threshold = fraction * max post-event count
  kMaxFraction,
  /// threshold = baseline + fraction * (max - baseline), baseline being the
  /// mean daily count before the event
  kBaseline,
};

struct RecoveryConfig {
  std::vector<RecoveryFactor> factors;
  double threshold_fraction = 0.15;
  int steady_days = 3;
  std::int64_t bin_ms = 86'400'000;
  ThresholdMode threshold_mode = ThresholdMode::kMaxFraction;

  /// schools, roads, houses, offices, collapse at 0.2 each.
  static RecoveryConfig defaults();
  /// Throws ConfigError on bad weights, fraction or steady_days.
  void validate() const;
  const RecoveryFactor* factor(std::string_view name) const;
};

/// Counts of posts per bin relative to t0; bin 0 holds t0.
struct FrequencySeries {
  std::string factor;
  std::int64_t t0_ms = 0;
  std::int64_t first_day = 0;  // offset of counts[0], negative for baseline bins
  std::vector<std::int64_t> counts;

  /// Counts for bins >= 0 (empty when there are none).
  std::vector<std::int64_t> post_event() const;
  std::vector<std::int64_t> pre_event() const;
  std::int64_t count_at(std::int64_t day) const;
};

struct RecoveryFactorResult {
  std::string factor;
  std::int64_t t0_ms = 0;
  std::int64_t t1_ms = 0;
  double t_r_days = 0.0;
  double threshold = 0.0;
};

struct CurvePoint {
  double day = 0.0;
  double q = 0.0;
};

/// Right-continuous step function Q(t) = 1 - sum of weights whose t_r > t.
struct RecoveryCurve {
  std::vector<RecoveryFactorResult> factors;
  std::vector<CurvePoint> steps;  // breakpoints, starting at day 0
  double aggregate_days = 0.0;    // weighted mean of t_r

  double q(double day) const;
};

/// A post counts once for a factor when any keyword is among its tokens.
FrequencySeries build_frequency_series(std::span<const Document> posts, const RecoveryFactor& factor,
                                       std::int64_t t0_ms, const RecoveryConfig& config);

/// t1 = start of the earliest day at or after the peak that opens
/// `steady_days` consecutive sub-threshold days. Zero activity gives t_r = 0.
/// Throws UnrecoveredError when the series ends before such a window.
RecoveryFactorResult detect_recovery_time(const FrequencySeries& series, const RecoveryConfig& config);

/// Throws DataError when a configured factor has no result.
RecoveryCurve build_recovery_curve(std::span<const RecoveryFactorResult> results, const RecoveryConfig& config);

/// Survey rows in long format: aspect,affected,duration,unit.
struct SurveyResponse {
  std::string aspect;
  bool affected = false;
  double duration_days = 0.0;
};

/// Throws RowError for unknown units or affected values.
std::vector<SurveyResponse> parse_survey(std::istream& in, const std::string& name);
std::vector<SurveyResponse> load_survey(const std::filesystem::path& path);

/// Mean duration per aspect over all respondents (unaffected = 0 days), then
/// mean over the aspects mapped to each factor. Aspects without responses or
/// without a mapping are skipped and reported through `warnings`.
std::vector<RecoveryFactorResult> aggregate_survey(std::span<const SurveyResponse> responses,
                                                   const std::map<std::string, std::string>& aspect_to_factor,
                                                   std::int64_t t0_ms, std::vector<std::string>* warnings = nullptr);

/// Equal-weight factors, one per aspect present in the responses (sorted by name).
RecoveryConfig survey_config(std::span<const SurveyResponse> responses);

nlohmann::json to_json(const RecoveryCurve& curve);

/// Step plot of Q(t) and a bar chart of one factor's daily counts.
std::string render_curve_svg(const RecoveryCurve& curve, const std::string& title);
std::string render_series_svg(const FrequencySeries& series, const RecoveryFactorResult* result);

}  // namespace qb
