#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "quakebrief/corpus.hpp"

namespace qb {

/// Symmetric, zero-diagonal, non-negative sentence similarity graph.
class SimilarityGraph {
 public:
  explicit SimilarityGraph(std::size_t nodes = 0) : nodes_(nodes), weights_(nodes * nodes, 0.0) {}

  std::size_t size() const { return nodes_; }
  double weight(std::size_t i, std::size_t j) const { return weights_[i * nodes_ + j]; }
  /// Sets both (i, j) and (j, i). Throws DataError on negative, non-finite or diagonal weights.
  void set_weight(std::size_t i, std::size_t j, double w);
  double out_weight(std::size_t i) const;

 private:
  std::size_t nodes_;
  std::vector<double> weights_;
};

/// weight(i, j) = |common unique tokens| / (ln|S_i| + ln|S_j|) over unique-token
/// sets; when both sentences have a single token the weight is |common|.
/// Throws DataError on an empty sentence list.
SimilarityGraph build_similarity_graph(std::span<const std::vector<std::string>> sentences);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-6;
  int max_iterations = 200;
};

/// Weighted PageRank from a uniform start; nodes without edges spread their
/// score uniformly. Stops once the distance to the fixed point, bounded by
/// d / (1 - d) times the L1 change of the last step, is below the tolerance
/// and returns scores normalized to sum 1. Throws ConvergenceError (with that
/// bound as the residual) when the iteration cap is reached.
std::vector<double> pagerank(const SimilarityGraph& graph, const PageRankOptions& options = {});

struct SummaryOptions {
  double ratio = 0.3;
  std::size_t min_sentences = 1;
  std::size_t max_sentences = 15;
  PageRankOptions pagerank;
};

/// TextRank extractive summary. Sentences with identical token sets are
/// collapsed to their first occurrence, then the top ceil(ratio * N) by rank
/// (clamped to [min, max], ties to the earlier sentence) are returned verbatim
/// in input order.
std::vector<Sentence> extract_summary(std::span<const Sentence> sentences, const SummaryOptions& options = {});

/// Positions (into `sentences`) of the sentences extract_summary would return.
std::vector<std::size_t> summary_indices(std::span<const Sentence> sentences, const SummaryOptions& options = {});

}  // namespace qb
