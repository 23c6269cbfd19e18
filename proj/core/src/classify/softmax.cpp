#include "quakebrief/classify/softmax.hpp"

#include <algorithm>
#include <cmath>

#include "quakebrief/error.hpp"

namespace qb {

std::vector<double> softmax(std::span<const double> logits) {
  if (logits.empty()) return {};
  for (double l : logits) {
    if (!std::isfinite(l)) throw DataError("softmax: non-finite logit");
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - top);
    total += out[i];
  }
  for (double& p : out) p /= total;
  return out;
}

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace qb
