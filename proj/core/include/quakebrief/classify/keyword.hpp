#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quakebrief/corpus.hpp"
#include "quakebrief/labels.hpp"

namespace qb {

/// Lowercase keywords per content class.
using KeywordLists = std::map<Label, std::vector<std::string>>;

/// JSON object mapping class name to an array of keywords.
KeywordLists load_keyword_lists(const std::filesystem::path& path);
KeywordLists parse_keyword_lists(std::string_view json_text);

/// The class whose keywords match the most tokens (every occurrence counts).
/// No match gives kOther; ties resolve building > infrastructure > resilience.
/// Throws ConfigError when every list is empty.
Label keyword_classify(std::span<const std::string> tokens, const KeywordLists& keywords);
Label keyword_classify(const Sentence& sentence, const KeywordLists& keywords);

}  // namespace qb
