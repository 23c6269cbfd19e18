#include "quakebrief/summarize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "quakebrief/error.hpp"

namespace qb {

void SimilarityGraph::set_weight(std::size_t i, std::size_t j, double w) {
  if (i >= nodes_ || j >= nodes_) throw DataError("similarity graph node out of range");
  if (i == j) throw DataError("similarity graph has no self-loops");
  if (!std::isfinite(w) || w < 0.0) throw DataError("similarity weights must be finite and non-negative");
  weights_[i * nodes_ + j] = w;
  weights_[j * nodes_ + i] = w;
}

double SimilarityGraph::out_weight(std::size_t i) const {
  double total = 0.0;
  for (std::size_t j = 0; j < nodes_; ++j) total += weights_[i * nodes_ + j];
  return total;
}

SimilarityGraph build_similarity_graph(std::span<const std::vector<std::string>> sentences) {
  if (sentences.empty()) throw DataError("cannot build a similarity graph without sentences");
  std::vector<std::set<std::string>> unique;
  unique.reserve(sentences.size());
  for (const auto& s : sentences) unique.emplace_back(s.begin(), s.end());

  SimilarityGraph graph(sentences.size());
  for (std::size_t i = 0; i < unique.size(); ++i) {
    for (std::size_t j = i + 1; j < unique.size(); ++j) {
      if (unique[i].empty() || unique[j].empty()) continue;
      std::size_t common = 0;
      for (const auto& t : unique[i]) common += unique[j].count(t);
      if (common == 0) continue;
      const double denom = std::log(static_cast<double>(unique[i].size())) + std::log(static_cast<double>(unique[j].size()));
      graph.set_weight(i, j, denom > 0.0 ? static_cast<double>(common) / denom : static_cast<double>(common));
    }
  }
  return graph;
}

std::vector<double> pagerank(const SimilarityGraph& graph, const PageRankOptions& options) {
  const std::size_t n = graph.size();
  if (!(options.damping > 0.0 && options.damping < 1.0)) throw ConfigError("damping must lie in (0, 1)");
  if (!(options.tolerance > 0.0) || options.max_iterations < 1) {
    throw ConfigError("pagerank needs a positive tolerance and at least one iteration");
  }
  if (n == 0) return {};

  const double d = options.damping;
  const double nn = static_cast<double>(n);
  std::vector<double> out_weight(n);
  for (std::size_t j = 0; j < n; ++j) out_weight[j] = graph.out_weight(j);

  std::vector<double> score(n, 1.0 / nn);
  std::vector<double> next(n);
  double residual = 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    double dangling = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (out_weight[j] == 0.0) dangling += score[j];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double incoming = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double w = graph.weight(j, i);
        if (w != 0.0) incoming += w * score[j] / out_weight[j];
      }
      next[i] = (1.0 - d) / nn + d * (incoming + dangling / nn);
    }
    // The update contracts by d in L1, so the new iterate lies within
    // d / (1 - d) * |next - score|_1 of the fixed point. Stopping on that bound
    // also bounds the largest per-node change.
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change += std::abs(next[i] - score[i]);
    residual = d / (1.0 - d) * change;
    score.swap(next);
    if (residual < options.tolerance) {
      const double total = std::accumulate(score.begin(), score.end(), 0.0);
      for (double& s : score) s /= total;
      return score;
    }
  }
  throw ConvergenceError("pagerank did not converge in " + std::to_string(options.max_iterations) + " iterations",
                         residual);
}

std::vector<std::size_t> summary_indices(std::span<const Sentence> sentences, const SummaryOptions& options) {
  if (!(options.ratio > 0.0 && options.ratio <= 1.0)) throw ConfigError("summary ratio must lie in (0, 1]");
  if (options.min_sentences > options.max_sentences) throw ConfigError("min_sentences exceeds max_sentences");
  if (sentences.empty()) return {};

  // Collapse sentences with identical token sets onto their first occurrence.
  std::vector<std::size_t> kept;
  std::vector<std::vector<std::string>> tokens;
  std::set<std::set<std::string>> seen;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    auto t = tokenize(sentences[i].text);
    if (!seen.emplace(t.begin(), t.end()).second) continue;
    kept.push_back(i);
    tokens.push_back(std::move(t));
  }

  const std::vector<double> score = pagerank(build_similarity_graph(tokens), options.pagerank);
  const std::size_t n = kept.size();
  // The small offset keeps ratio * n from rounding up on representation error (0.3 * 10).
  auto want = static_cast<std::size_t>(std::ceil(options.ratio * static_cast<double>(n) - 1e-9));
  want = std::clamp(want, options.min_sentences, options.max_sentences);
  want = std::min(want, n);

  // Scores equal up to rounding noise count as ties and go to the earlier sentence.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) { return std::llround(score[i] * 1e12); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
  order.resize(want);
  std::sort(order.begin(), order.end());

  std::vector<std::size_t> out;
  out.reserve(want);
  for (std::size_t k : order) out.push_back(kept[k]);
  return out;
}

std::vector<Sentence> extract_summary(std::span<const Sentence> sentences, const SummaryOptions& options) {
  std::vector<Sentence> out;
  for (std::size_t i : summary_indices(sentences, options)) out.push_back(sentences[i]);
  return out;
}

}  // namespace qb
