#include "quakebrief/classify/ensemble.hpp"

#include <array>

#include "quakebrief/error.hpp"

namespace qb {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kKeyword: return "keyword";
    case Method::kLogistic: return "lr";
    case Method::kSvm: return "svm";
    case Method::kCnn: return "cnn";
    case Method::kGan: return "gan";
  }
  return "keyword";
}

std::optional<Method> parse_method(std::string_view text) {
  for (Method m : {Method::kKeyword, Method::kLogistic, Method::kSvm, Method::kCnn, Method::kGan}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

Label ensemble_vote(const std::map<Method, Label>& predictions) {
  std::array<int, kNumLabels> votes{};
  for (Method m : {Method::kLogistic, Method::kSvm, Method::kCnn, Method::kGan}) {
    const auto it = predictions.find(m);
    if (it == predictions.end()) throw DataError("ensemble vote is missing the " + std::string(to_string(m)) + " prediction");
    ++votes[index_of(it->second)];
  }
  std::size_t best = 0;
  bool tied = false;
  for (std::size_t i = 1; i < kNumLabels; ++i) {
    if (votes[i] > votes[best]) {
      best = i;
      tied = false;
    } else if (votes[i] == votes[best]) {
      tied = true;
    }
  }
  return tied ? predictions.at(Method::kCnn) : label_from_index(best);
}

}  // namespace qb
