#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include <Eigen/Dense>

namespace qbtest {

std::vector<double> dense_pagerank(const std::vector<std::vector<double>>& weights, double damping) {
  const auto n = static_cast<Eigen::Index>(weights.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double out = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) out += weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, j) = out > 0.0 ? weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] / out
                          : 1.0 / static_cast<double>(n);
    }
  }
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - damping * m;
  const Eigen::VectorXd b = Eigen::VectorXd::Constant(n, (1.0 - damping) / static_cast<double>(n));
  const Eigen::VectorXd x = a.fullPivLu().solve(b);
  std::vector<double> out(x.data(), x.data() + n);
  const double total = x.sum();
  for (double& v : out) v /= total;
  return out;
}

NgramCounts brute_force_ngrams(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
                               std::size_t n) {
  NgramCounts out;
  if (candidate.size() >= n) out.candidate = candidate.size() - n + 1;
  if (reference.size() >= n) out.reference = reference.size() - n + 1;
  std::vector<bool> used(out.reference, false);
  for (std::size_t i = 0; i < out.candidate; ++i) {
    for (std::size_t j = 0; j < out.reference; ++j) {
      if (used[j]) continue;
      bool same = true;
      for (std::size_t k = 0; k < n && same; ++k) same = candidate[i + k] == reference[j + k];
      if (same) {
        used[j] = true;
        ++out.matches;
        break;
      }
    }
  }
  return out;
}

namespace {

std::size_t lcs_rec(const std::vector<std::string>& a, const std::vector<std::string>& b, std::size_t i,
                    std::size_t j, std::map<std::pair<std::size_t, std::size_t>, std::size_t>& memo) {
  if (i == a.size() || j == b.size()) return 0;
  const auto key = std::make_pair(i, j);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const std::size_t best =
      a[i] == b[j] ? 1 + lcs_rec(a, b, i + 1, j + 1, memo)
                   : std::max(lcs_rec(a, b, i + 1, j, memo), lcs_rec(a, b, i, j + 1, memo));
  memo[key] = best;
  return best;
}

}  // namespace

std::size_t memo_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  return lcs_rec(a, b, 0, 0, memo);
}

bool is_ordered_extract(std::span<const qb::Sentence> picked, std::span<const qb::Sentence> source) {
  std::size_t j = 0;
  for (const auto& p : picked) {
    while (j < source.size() && !(source[j] == p)) ++j;
    if (j == source.size()) return false;
    ++j;
  }
  return true;
}

std::optional<std::int64_t> scan_recovery_day(const std::vector<std::int64_t>& counts, std::int64_t num,
                                              std::int64_t den, int steady_days) {
  const std::int64_t max = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  if (max == 0) return 0;
  std::size_t peak = 0;
  while (counts[peak] != max) ++peak;
  const auto below = [&](std::int64_t c) { return c * den < num * max; };
  for (std::size_t d = peak; d < counts.size(); ++d) {
    if (d + static_cast<std::size_t>(steady_days) > counts.size()) break;
    bool steady = true;
    for (int k = 0; k < steady_days; ++k) steady = steady && below(counts[d + static_cast<std::size_t>(k)]);
    if (steady) return static_cast<std::int64_t>(d);
  }
  return std::nullopt;
}

double relative_error(double analytic, double numeric) {
  const double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-6});
  return std::abs(analytic - numeric) / scale;
}

GradientCheck check_gradients(std::vector<qb::Tensor>& params, const qb::Gradients& analytic,
                              const std::function<double()>& loss, std::size_t samples, qb::Rng& rng, double h,
                              const std::function<std::uint64_t()>& region) {
  GradientCheck out;
  for (std::size_t t = 0; t < params.size(); ++t) {
    qb::Matrix& value = params[t].value;
    const auto size = static_cast<std::size_t>(value.size());
    std::vector<std::size_t> coords;
    if (size <= samples) {
      for (std::size_t i = 0; i < size; ++i) coords.push_back(i);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, size - 1);
      for (std::size_t i = 0; i < samples; ++i) coords.push_back(pick(rng));
    }
    for (std::size_t c : coords) {
      double& x = value.data()[c];
      const double saved = x;
      x = saved + h;
      const double up = loss();
      const std::uint64_t region_up = region ? region() : 0;
      x = saved - h;
      const double down = loss();
      const std::uint64_t region_down = region ? region() : 0;
      x = saved;
      if (region_up != region_down) {
        ++out.skipped;
        continue;
      }
      const double numeric = (up - down) / (2.0 * h);
      const double a = analytic[t].data()[c];
      const double err = relative_error(a, numeric);
      ++out.checked;
      if (err > out.max_relative_error || out.worst.empty()) {
        out.max_relative_error = std::max(out.max_relative_error, err);
        if (err >= out.max_relative_error) {
          char buf[256];
          const auto cols = static_cast<std::size_t>(value.cols());
          std::snprintf(buf, sizeof buf, "%s[%zu,%zu] analytic=%.9g numeric=%.9g", params[t].name.c_str(), c / cols,
                        c % cols, a, numeric);
          out.worst = buf;
        }
      }
    }
  }
  return out;
}

}  // namespace qbtest
