#pragma once

#include <map>
#include <optional>
#include <string_view>

#include "quakebrief/labels.hpp"

namespace qb {

enum class Method { kKeyword, kLogistic, kSvm, kCnn, kGan };

std::string_view to_string(Method method);
/// Accepts "keyword", "lr", "svm", "cnn", "gan".
std::optional<Method> parse_method(std::string_view text);

/// Plurality over {LR, SVM, CNN, GAN}; any tie resolves to the CNN's label.
/// Throws DataError when one of the four methods is missing. Extra entries
/// (e.g. the keyword matcher) are ignored.
Label ensemble_vote(const std::map<Method, Label>& predictions);

}  // namespace qb
