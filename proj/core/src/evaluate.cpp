#include "quakebrief/evaluate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quakebrief/corpus.hpp"
#include "quakebrief/error.hpp"

namespace qb {

AccuracyReport accuracy(std::span<const Label> predictions, std::span<const Label> truth) {
  if (predictions.size() != truth.size()) {
    throw DataError("accuracy: " + std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(truth.size()) + " labels");
  }
  if (truth.empty()) throw DataError("accuracy of an empty sample");
  AccuracyReport report;
  report.n = truth.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++report.confusion[index_of(truth[i])][index_of(predictions[i])];
    correct += predictions[i] == truth[i];
  }
  report.accuracy = static_cast<double>(correct) / static_cast<double>(report.n);
  return report;
}

double f1_score(double precision, double recall) {
  return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

namespace {

RougeScore score_of(double matches, double candidate_total, double reference_total) {
  RougeScore s;
  if (candidate_total == 0.0 || reference_total == 0.0) return s;
  s.precision = 100.0 * matches / candidate_total;
  s.recall = 100.0 * matches / reference_total;
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

std::map<std::vector<std::string>, std::size_t> ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
  std::map<std::vector<std::string>, std::size_t> counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

std::vector<std::vector<std::string>> sentence_tokens(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : segment_sentences(text)) out.push_back(tokenize(s.text));
  return out;
}

}  // namespace

RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n) {
  if (n < 1) throw DataError("ROUGE-N needs n >= 1");
  const auto size = static_cast<std::size_t>(n);
  const auto cand = ngram_counts(tokenize(candidate), size);
  const auto ref = ngram_counts(tokenize(reference), size);
  double matches = 0.0;
  double cand_total = 0.0;
  double ref_total = 0.0;
  for (const auto& [gram, count] : cand) {
    cand_total += static_cast<double>(count);
    if (const auto it = ref.find(gram); it != ref.end()) matches += static_cast<double>(std::min(count, it->second));
  }
  for (const auto& entry : ref) ref_total += static_cast<double>(entry.second);
  return score_of(matches, cand_total, ref_total);
}

namespace {

std::vector<std::vector<std::size_t>> lcs_table(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::vector<std::size_t>> dp(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      dp[i + 1][j + 1] = a[i] == b[j] ? dp[i][j] + 1 : std::max(dp[i][j + 1], dp[i + 1][j]);
    }
  }
  return dp;
}

}  // namespace

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      cur[j + 1] = a[i] == b[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
    }
    prev.swap(cur);
  }
  return prev[b.size()];
}

std::vector<std::size_t> lcs_positions(std::span<const std::string> a, std::span<const std::string> b) {
  const auto dp = lcs_table(a, b);
  std::vector<std::size_t> out;
  std::size_t i = a.size();
  std::size_t j = b.size();
  while (i > 0 && j > 0) {
    if (a[i - 1] == b[j - 1]) {
      out.push_back(i - 1);
      --i;
      --j;
    } else if (dp[i - 1][j] >= dp[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference, RougeLVariant variant) {
  if (variant == RougeLVariant::kWholeText) {
    const auto c = tokenize(candidate);
    const auto r = tokenize(reference);
    return score_of(static_cast<double>(lcs_length(c, r)), static_cast<double>(c.size()), static_cast<double>(r.size()));
  }
  const auto cand = sentence_tokens(candidate);
  const auto ref = sentence_tokens(reference);
  std::set<std::string> cand_words;
  std::set<std::string> ref_words;
  for (const auto& s : cand) cand_words.insert(s.begin(), s.end());
  for (const auto& s : ref) ref_words.insert(s.begin(), s.end());

  std::set<std::string> covered;
  for (const auto& r : ref) {
    for (const auto& c : cand) {
      for (std::size_t pos : lcs_positions(r, c)) covered.insert(r[pos]);
    }
  }
  return score_of(static_cast<double>(covered.size()), static_cast<double>(cand_words.size()),
                  static_cast<double>(ref_words.size()));
}

RougeReport rouge_report(std::string_view candidate, std::string_view reference) {
  return {rouge_n(candidate, reference, 1), rouge_n(candidate, reference, 2), rouge_l(candidate, reference)};
}

namespace {

nlohmann::json score_json(const RougeScore& s) { return {{"p", s.precision}, {"r", s.recall}, {"f1", s.f1}}; }

}  // namespace

nlohmann::json to_json(const RougeReport& report) {
  return {{"rouge1", score_json(report.rouge1)}, {"rouge2", score_json(report.rouge2)}, {"rougeL", score_json(report.rouge_l)}};
}

nlohmann::json to_json(const AccuracyReport& report) {
  nlohmann::json confusion = nlohmann::json::object();
  for (Label truth : kAllLabels) {
    nlohmann::json row = nlohmann::json::object();
    for (Label pred : kAllLabels) row[std::string(to_string(pred))] = report.confusion[index_of(truth)][index_of(pred)];
    confusion[std::string(to_string(truth))] = row;
  }
  return {{"accuracy", report.accuracy}, {"n", report.n}, {"confusion", confusion}};
}

}  // namespace qb
