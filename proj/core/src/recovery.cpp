#include "quakebrief/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>

#include "quakebrief/corpus.hpp"
#include "quakebrief/csv.hpp"
#include "quakebrief/error.hpp"
#include "quakebrief/timeutil.hpp"

namespace qb {

RecoveryConfig RecoveryConfig::defaults() {
  RecoveryConfig c;
  c.factors = {
      {"schools", {"school", "schools", "classes", "students"}, 0.2},
      {"roads", {"road", "roads", "highway", "traffic"}, 0.2},
      {"houses", {"house", "houses", "home", "homes"}, 0.2},
      {"offices", {"office", "offices", "work"}, 0.2},
      {"collapse", {"collapse", "collapsed", "collapsing"}, 0.2},
  };
  return c;
}

void RecoveryConfig::validate() const {
  if (factors.empty()) throw ConfigError("recovery config has no factors");
  double total = 0.0;
  std::set<std::string> names;
  for (const auto& f : factors) {
    if (f.name.empty()) throw ConfigError("recovery factor without a name");
    if (!names.insert(f.name).second) throw ConfigError("recovery factor '" + f.name + "' listed twice");
    if (!(f.weight > 0.0) || !std::isfinite(f.weight)) {
      throw ConfigError("recovery factor '" + f.name + "' needs a positive weight");
    }
    total += f.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ConfigError("recovery factor weights sum to " + std::to_string(total) + ", not 1");
  if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0)) throw ConfigError("threshold_fraction must lie in (0, 1)");
  if (steady_days < 1) throw ConfigError("steady_days must be at least 1");
  if (bin_ms <= 0) throw ConfigError("bin length must be positive");
}

const RecoveryFactor* RecoveryConfig::factor(std::string_view name) const {
  for (const auto& f : factors) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

// --- frequency series --------------------------------------------------------------

std::vector<std::int64_t> FrequencySeries::post_event() const {
  if (counts.empty() || first_day + static_cast<std::int64_t>(counts.size()) <= 0) return {};
  const auto skip = static_cast<std::size_t>(std::max<std::int64_t>(0, -first_day));
  return {counts.begin() + static_cast<std::ptrdiff_t>(skip), counts.end()};
}

std::vector<std::int64_t> FrequencySeries::pre_event() const {
  if (first_day >= 0) return {};
  const auto take = std::min(counts.size(), static_cast<std::size_t>(-first_day));
  return {counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(take)};
}

std::int64_t FrequencySeries::count_at(std::int64_t day) const {
  const std::int64_t i = day - first_day;
  if (i < 0 || i >= static_cast<std::int64_t>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(i)];
}

FrequencySeries build_frequency_series(std::span<const Document> posts, const RecoveryFactor& factor, std::int64_t t0_ms,
                                       const RecoveryConfig& config) {
  if (config.bin_ms <= 0) throw ConfigError("bin length must be positive");
  FrequencySeries series;
  series.factor = factor.name;
  series.t0_ms = t0_ms;
  if (posts.empty()) return series;

  auto bin_of = [&](std::int64_t t) {
    const std::int64_t diff = t - t0_ms;
    std::int64_t q = diff / config.bin_ms;
    if (diff % config.bin_ms != 0 && diff < 0) --q;
    return q;
  };
  // The series spans every bin that saw any post, so quiet days stay visible as zeros.
  std::int64_t lo = bin_of(posts.front().published_at_ms);
  std::int64_t hi = lo;
  for (const auto& p : posts) {
    lo = std::min(lo, bin_of(p.published_at_ms));
    hi = std::max(hi, bin_of(p.published_at_ms));
  }
  if (hi >= 0) lo = std::min<std::int64_t>(lo, 0);
  series.first_day = lo;
  series.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);

  const std::set<std::string> keywords(factor.keywords.begin(), factor.keywords.end());
  for (const auto& p : posts) {
    const auto tokens = tokenize(p.body);
    const bool hit = std::any_of(tokens.begin(), tokens.end(), [&](const std::string& t) { return keywords.contains(t); });
    if (hit) ++series.counts[static_cast<std::size_t>(bin_of(p.published_at_ms) - lo)];
  }
  return series;
}

// --- recovery time -----------------------------------------------------------------

RecoveryFactorResult detect_recovery_time(const FrequencySeries& series, const RecoveryConfig& config) {
  if (config.steady_days < 1) throw ConfigError("steady_days must be at least 1");
  const std::vector<std::int64_t> post = series.post_event();
  if (post.empty()) throw DataError("factor '" + series.factor + "' has no post-event days");

  RecoveryFactorResult result;
  result.factor = series.factor;
  result.t0_ms = series.t0_ms;
  result.t1_ms = series.t0_ms;

  const auto peak_it = std::max_element(post.begin(), post.end());
  const auto peak = static_cast<double>(*peak_it);
  if (peak == 0.0) return result;

  // below(c) decides c < threshold. In the default mode fma gives the sign of
  // fraction * max - c with a single rounding, so the comparison is exact and
  // scaling all counts by the same factor cannot flip it.
  std::function<bool(std::int64_t)> below;
  if (config.threshold_mode == ThresholdMode::kMaxFraction) {
    result.threshold = config.threshold_fraction * peak;
    below = [&config, peak](std::int64_t c) {
      return std::fma(config.threshold_fraction, peak, -static_cast<double>(c)) > 0.0;
    };
  } else {
    const auto pre = series.pre_event();
    const double baseline =
        pre.empty() ? 0.0
                    : static_cast<double>(std::accumulate(pre.begin(), pre.end(), std::int64_t{0})) /
                          static_cast<double>(pre.size());
    result.threshold = baseline + config.threshold_fraction * (peak - baseline);
    below = [threshold = result.threshold](std::int64_t c) { return static_cast<double>(c) < threshold; };
  }

  const auto steady = static_cast<std::size_t>(config.steady_days);
  for (auto d = static_cast<std::size_t>(peak_it - post.begin()); d + steady <= post.size(); ++d) {
    if (std::all_of(post.begin() + static_cast<std::ptrdiff_t>(d), post.begin() + static_cast<std::ptrdiff_t>(d + steady),
                    below)) {
      result.t1_ms = series.t0_ms + static_cast<std::int64_t>(d) * config.bin_ms;
      result.t_r_days = static_cast<double>(result.t1_ms - result.t0_ms) / static_cast<double>(kMillisPerDay);
      return result;
    }
  }
  throw UnrecoveredError(series.factor, static_cast<std::int64_t>(post.size()) - 1);
}

// --- recovery curve ----------------------------------------------------------------

double RecoveryCurve::q(double day) const {
  if (day < 0.0 || steps.empty()) return 1.0;
  double value = steps.front().q;
  for (const auto& s : steps) {
    if (s.day <= day) value = s.q;
  }
  return value;
}

RecoveryCurve build_recovery_curve(std::span<const RecoveryFactorResult> results, const RecoveryConfig& config) {
  config.validate();
  RecoveryCurve curve;
  for (const auto& f : config.factors) {
    const auto it = std::find_if(results.begin(), results.end(), [&](const auto& r) { return r.factor == f.name; });
    if (it == results.end()) throw DataError("no recovery result for factor '" + f.name + "'");
    if (!(it->t_r_days >= 0.0)) throw DataError("negative recovery time for factor '" + f.name + "'");
    curve.factors.push_back(*it);
    curve.aggregate_days += f.weight * it->t_r_days;
  }

  auto q_at = [&](double t) {
    double lost = 0.0;
    for (std::size_t i = 0; i < config.factors.size(); ++i) {
      if (curve.factors[i].t_r_days > t) lost += config.factors[i].weight;
    }
    return std::max(0.0, 1.0 - lost);
  };
  std::set<double> breaks{0.0};
  for (const auto& r : curve.factors) breaks.insert(r.t_r_days);
  for (double day : breaks) curve.steps.push_back({day, q_at(day)});
  curve.steps.back().q = 1.0;  // every factor has recovered at the last breakpoint
  return curve;
}

// --- survey --------------------------------------------------------------------------

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<SurveyResponse> parse_survey(std::istream& in, const std::string& name) {
  const auto records = read_csv(in);
  std::vector<SurveyResponse> out;
  if (records.empty()) return out;
  const auto& header = records.front().fields;
  if (header != std::vector<std::string>{"aspect", "affected", "duration", "unit"}) {
    throw RowError(name, records.front().line, "expected header 'aspect,affected,duration,unit'");
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != 4) throw RowError(name, rec.line, "expected 4 fields");
    SurveyResponse resp;
    resp.aspect = lower(trimmed(rec.fields[0]));
    if (resp.aspect.empty()) throw RowError(name, rec.line, "empty aspect");
    const std::string affected = lower(trimmed(rec.fields[1]));
    if (affected == "yes" || affected == "true" || affected == "1") {
      resp.affected = true;
    } else if (affected == "no" || affected == "false" || affected == "0") {
      resp.affected = false;
    } else {
      throw RowError(name, rec.line, "affected must be yes or no, got '" + rec.fields[1] + "'");
    }
    if (resp.affected) {
      const std::string unit = lower(trimmed(rec.fields[3]));
      double per_unit = 0.0;
      if (unit == "hours" || unit == "hour") {
        per_unit = 1.0 / 24.0;
      } else if (unit == "days" || unit == "day") {
        per_unit = 1.0;
      } else if (unit == "weeks" || unit == "week") {
        per_unit = 7.0;
      } else {
        throw RowError(name, rec.line, "unknown unit '" + rec.fields[3] + "'");
      }
      double value = 0.0;
      try {
        std::size_t used = 0;
        const std::string text = trimmed(rec.fields[2]);
        value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw RowError(name, rec.line, "duration '" + rec.fields[2] + "' is not a number");
      }
      if (!(value >= 0.0) || !std::isfinite(value)) throw RowError(name, rec.line, "duration must be non-negative");
      resp.duration_days = value * per_unit;
    }
    out.push_back(std::move(resp));
  }
  return out;
}

std::vector<SurveyResponse> load_survey(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open survey " + path.string());
  return parse_survey(in, path.filename().string());
}

std::vector<RecoveryFactorResult> aggregate_survey(std::span<const SurveyResponse> responses,
                                                   const std::map<std::string, std::string>& aspect_to_factor,
                                                   std::int64_t t0_ms, std::vector<std::string>* warnings) {
  std::map<std::string, std::pair<double, std::size_t>> per_aspect;  // sum, respondents
  for (const auto& r : responses) {
    auto& acc = per_aspect[r.aspect];
    acc.first += r.affected ? r.duration_days : 0.0;
    ++acc.second;
  }
  std::map<std::string, std::vector<double>> per_factor;
  for (const auto& [aspect, acc] : per_aspect) {
    const auto it = aspect_to_factor.find(aspect);
    if (it == aspect_to_factor.end()) {
      if (warnings) warnings->push_back("survey aspect '" + aspect + "' is not mapped to a factor; skipped");
      continue;
    }
    per_factor[it->second].push_back(acc.first / static_cast<double>(acc.second));
  }
  for (const auto& [aspect, factor] : aspect_to_factor) {
    if (!per_aspect.contains(aspect) && warnings) {
      warnings->push_back("survey aspect '" + aspect + "' has no responses; excluded from '" + factor + "'");
    }
  }
  std::vector<RecoveryFactorResult> out;
  for (const auto& [factor, means] : per_factor) {
    RecoveryFactorResult r;
    r.factor = factor;
    r.t0_ms = t0_ms;
    r.t_r_days = std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(means.size());
    r.t1_ms = t0_ms + std::llround(r.t_r_days * static_cast<double>(kMillisPerDay));
    out.push_back(std::move(r));
  }
  return out;
}

RecoveryConfig survey_config(std::span<const SurveyResponse> responses) {
  std::set<std::string> aspects;
  for (const auto& r : responses) aspects.insert(r.aspect);
  RecoveryConfig c;
  for (const auto& a : aspects) c.factors.push_back({a, {}, 1.0 / static_cast<double>(aspects.size())});
  return c;
}

// --- output --------------------------------------------------------------------------

nlohmann::json to_json(const RecoveryCurve& curve) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : curve.factors) {
    factors.push_back({{"name", f.factor},
                       {"t0", format_iso8601(f.t0_ms)},
                       {"t1", format_iso8601(f.t1_ms)},
                       {"t_r_days", f.t_r_days},
                       {"threshold", f.threshold}});
  }
  nlohmann::json points = nlohmann::json::array();
  for (const auto& s : curve.steps) points.push_back({{"day", s.day}, {"q", s.q}});
  return {{"factors", factors}, {"aggregate_days", curve.aggregate_days}, {"curve", points}};
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr double kWidth = 640;
constexpr double kHeight = 360;
constexpr double kLeft = 60;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

std::string svg_open(const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + "<text x=\"" + num(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" + escape_xml(title) + "</text>\n";
}

std::string axes(const std::string& x_label, const std::string& y_label) {
  const double x0 = kLeft;
  const double y0 = kHeight - kBottom;
  return "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(kWidth - kRight) + "\" y2=\"" + num(y0) +
         "\" stroke=\"black\"/>\n" + "<line x1=\"" + num(x0) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x0) +
         "\" y2=\"" + num(y0) + "\" stroke=\"black\"/>\n" + "<text x=\"" + num((x0 + kWidth - kRight) / 2) +
         "\" y=\"" + num(kHeight - 12) + "\" text-anchor=\"middle\">" + escape_xml(x_label) + "</text>\n" +
         "<text x=\"16\" y=\"" + num((kTop + y0) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num((kTop + y0) / 2) + ")\">" + escape_xml(y_label) + "</text>\n";
}

}  // namespace

std::string render_curve_svg(const RecoveryCurve& curve, const std::string& title) {
  const double last = curve.steps.empty() ? 0.0 : curve.steps.back().day;
  const double span = std::max(1.0, last * 1.25);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double day) { return kLeft + plot_w * day / span; };
  auto py = [&](double q) { return kHeight - kBottom - plot_h * q; };

  std::string svg = svg_open(title) + axes("days since event", "functionality Q(t)");
  for (double q : {0.0, 0.5, 1.0}) {
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(q) + 4) + "\" text-anchor=\"end\">" + num(q) + "</text>\n";
  }
  std::string path = "M " + num(px(0)) + " " + num(py(curve.steps.empty() ? 1.0 : curve.steps.front().q));
  for (std::size_t i = 1; i < curve.steps.size(); ++i) {
    path += " H " + num(px(curve.steps[i].day)) + " V " + num(py(curve.steps[i].q));
  }
  path += " H " + num(px(span));
  svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  for (const auto& s : curve.steps) {
    svg += "<text x=\"" + num(px(s.day)) + "\" y=\"" + num(kHeight - kBottom + 16) + "\" text-anchor=\"middle\">" +
           num(s.day) + "</text>\n";
  }
  svg += "<text x=\"" + num(kWidth - kRight) + "\" y=\"" + num(kTop) + "\" text-anchor=\"end\">aggregate " +
         num(curve.aggregate_days) + " days</text>\n";
  return svg + "</svg>\n";
}

std::string render_series_svg(const FrequencySeries& series, const RecoveryFactorResult* result) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t n = std::max<std::size_t>(series.counts.size(), 1);
  const double peak = series.counts.empty()
                          ? 1.0
                          : std::max(1.0, static_cast<double>(*std::max_element(series.counts.begin(), series.counts.end())));
  const double bar = plot_w / static_cast<double>(n);

  std::string svg = svg_open("posts mentioning " + series.factor) + axes("day relative to event", "posts per day");
  svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(kTop + 4) + "\" text-anchor=\"end\">" + num(peak) + "</text>\n";
  for (std::size_t i = 0; i < series.counts.size(); ++i) {
    const double h = plot_h * static_cast<double>(series.counts[i]) / peak;
    const std::int64_t day = series.first_day + static_cast<std::int64_t>(i);
    const char* fill = day < 0 ? "#bbbbbb" : "#ff7f0e";
    svg += "<rect x=\"" + num(kLeft + bar * static_cast<double>(i) + 1) + "\" y=\"" + num(kHeight - kBottom - h) +
           "\" width=\"" + num(std::max(1.0, bar - 2)) + "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
    svg += "<text x=\"" + num(kLeft + bar * (static_cast<double>(i) + 0.5)) + "\" y=\"" + num(kHeight - kBottom + 16) +
           "\" text-anchor=\"middle\">" + std::to_string(day) + "</text>\n";
  }
  if (result) {
    const double y = kHeight - kBottom - plot_h * result->threshold / peak;
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kWidth - kRight) + "\" y2=\"" + num(y) +
           "\" stroke=\"#d62728\" stroke-dasharray=\"4 3\"/>\n";
    const double recovered = static_cast<double>(-series.first_day) + result->t_r_days;
    const double x = kLeft + bar * recovered;
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x) + "\" y2=\"" + num(kHeight - kBottom) +
           "\" stroke=\"#2ca02c\" stroke-dasharray=\"4 3\"/>\n";
    svg += "<text x=\"" + num(x + 4) + "\" y=\"" + num(kTop + 12) + "\">t_r = " + num(result->t_r_days) + " d</text>\n";
  }
  return svg + "</svg>\n";
}

}  // namespace qb
