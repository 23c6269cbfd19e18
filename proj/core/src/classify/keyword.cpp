#include "quakebrief/classify/keyword.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include <nlohmann/json.hpp>

#include "quakebrief/error.hpp"

namespace qb {

KeywordLists parse_keyword_lists(std::string_view json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("keyword lists: ") + e.what(), e.byte);
  }
  if (!root.is_object()) throw ConfigError("keyword lists must be a JSON object");
  KeywordLists lists;
  for (const auto& [name, words] : root.items()) {
    const auto label = parse_label(name);
    if (!label) throw ConfigError("keyword lists: unknown class '" + name + "'");
    if (!words.is_array()) throw ConfigError("keyword lists: '" + name + "' is not an array");
    auto& out = lists[*label];
    for (const auto& w : words) {
      if (!w.is_string()) throw ConfigError("keyword lists: non-string keyword under '" + name + "'");
      // keywords are matched against tokens, so normalize them the same way
      for (auto& t : tokenize(w.get<std::string>())) out.push_back(std::move(t));
    }
  }
  return lists;
}

KeywordLists load_keyword_lists(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open keyword lists " + path.string());
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_keyword_lists(text);
}

Label keyword_classify(std::span<const std::string> tokens, const KeywordLists& keywords) {
  const bool any = std::any_of(keywords.begin(), keywords.end(),
                               [](const auto& entry) { return entry.first != Label::kOther && !entry.second.empty(); });
  if (!any) throw ConfigError("keyword lists are empty for every content class");

  Label best = Label::kOther;
  std::size_t best_hits = 0;
  for (Label label : {Label::kBuilding, Label::kInfrastructure, Label::kResilience}) {
    const auto it = keywords.find(label);
    if (it == keywords.end()) continue;
    const auto& words = it->second;
    const auto hits = static_cast<std::size_t>(std::count_if(tokens.begin(), tokens.end(), [&](const std::string& t) {
      return std::find(words.begin(), words.end(), t) != words.end();
    }));
    if (hits > best_hits) {
      best = label;
      best_hits = hits;
    }
  }
  return best;
}

Label keyword_classify(const Sentence& sentence, const KeywordLists& keywords) {
  return keyword_classify(tokenize(sentence.text), keywords);
}

}  // namespace qb
