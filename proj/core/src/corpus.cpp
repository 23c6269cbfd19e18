#include "quakebrief/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "quakebrief/csv.hpp"
#include "quakebrief/error.hpp"

namespace qb {

namespace {

// --- UTF-8 helpers -------------------------------------------------------------

struct CodePoint {
  char32_t value;
  std::size_t length;  // bytes consumed; invalid bytes decode as themselves, length 1
  bool valid;
};

CodePoint decode(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1, true};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1, false};
  }
  if (i + len > s.size()) return {b0, 1, false};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {b0, 1, false};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len, true};
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80) return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (cp >= 0x80 && cp <= 0xBF) return false;  // C1 controls, NBSP, Latin-1 punctuation and symbols
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation, dashes, curly quotes
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;  // fullwidth punctuation
  if (cp == 0xFEFF) return false;
  return true;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  return cp;
}

bool is_upper(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

// --- segmentation ------------------------------------------------------------------

// Lowercased "word." forms that never end a sentence.
constexpr std::string_view kAbbreviations[] = {
    "mw.", "u.s.", "u.k.", "a.m.", "p.m.", "approx.", "mr.", "mrs.", "ms.", "dr.", "st.",
    "no.", "e.g.", "i.e.", "etc.", "vs.", "km.", "jan.", "feb.", "aug.", "sept.", "oct.", "nov.", "dec.",
};

bool is_closing(char32_t cp) { return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x201D || cp == 0x2019; }
bool is_opening(char32_t cp) { return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == 0x201C || cp == 0x2018; }

bool ends_with_abbreviation(std::string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0 && !is_space(text[start - 1])) --start;
  std::string word;
  for (std::size_t i = start; i <= dot; ++i) {
    const char c = text[i];
    word.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
  }
  const auto first = word.find_first_not_of("\"'([");
  if (first == std::string::npos) return false;
  const std::string_view bare = std::string_view(word).substr(first);
  return std::find(std::begin(kAbbreviations), std::end(kAbbreviations), bare) != std::end(kAbbreviations);
}

// Returns the end offset (exclusive) of the sentence whose terminator is at `i`,
// or npos when the terminator does not close a sentence.
std::size_t sentence_end(std::string_view text, std::size_t i) {
  std::size_t j = i + 1;
  while (j < text.size()) {
    const CodePoint cp = decode(text, j);
    if (!is_closing(cp.value)) break;
    j += cp.length;
  }
  if (j == text.size()) return j;
  if (!is_space(text[j])) return std::string_view::npos;
  std::size_t k = j;
  while (k < text.size() && is_space(text[k])) ++k;
  if (k == text.size()) return j;
  while (k < text.size()) {
    const CodePoint cp = decode(text, k);
    if (!is_opening(cp.value)) break;
    k += cp.length;
  }
  if (k == text.size() || !is_upper(decode(text, k).value)) return std::string_view::npos;
  if (text[i] == '.' && ends_with_abbreviation(text, i)) return std::string_view::npos;
  return j;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Paragraph boundaries: a newline, optional horizontal whitespace, another newline.
std::vector<std::string_view> split_paragraphs(std::string_view body) {
  std::vector<std::string_view> paragraphs;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == '\n') {
      std::size_t k = i + 1;
      while (k < body.size() && (body[k] == ' ' || body[k] == '\t' || body[k] == '\r')) ++k;
      if (k < body.size() && body[k] == '\n') {
        paragraphs.push_back(body.substr(start, i - start));
        while (k < body.size() && is_space(body[k])) ++k;
        start = i = k;
        continue;
      }
    }
    ++i;
  }
  paragraphs.push_back(body.substr(start));
  return paragraphs;
}

}  // namespace

std::vector<Sentence> segment_sentences(std::string_view body, std::string_view document_id) {
  std::vector<Sentence> out;
  auto emit = [&](std::string_view piece) {
    const std::string_view text = trim(piece);
    if (tokenize(text).size() < 2) return;
    out.push_back(Sentence{std::string(document_id), out.size(), std::string(text)});
  };
  for (const std::string_view paragraph : split_paragraphs(body)) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < paragraph.size(); ++i) {
      const char c = paragraph[i];
      if (c != '.' && c != '!' && c != '?') continue;
      const std::size_t end = sentence_end(paragraph, i);
      if (end == std::string_view::npos) continue;
      emit(paragraph.substr(start, end - start));
      start = end;
      i = end - 1;
    }
    if (start < paragraph.size()) emit(paragraph.substr(start));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    const CodePoint cp = decode(text, i);
    if (!cp.valid) {
      current.push_back(text[i]);
    } else if (is_word_char(cp.value)) {
      encode(to_lower(cp.value), current);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    i += cp.length;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

// --- vocabulary -----------------------------------------------------------------

Vocabulary::Vocabulary() : tokens_{"<pad>", "<unk>"}, doc_freq_{0, 0} {}

Vocabulary Vocabulary::build(std::span<const std::vector<std::string>> documents, std::size_t min_count) {
  if (min_count == 0) throw ConfigError("min_count must be at least 1");
  std::map<std::string, std::pair<std::size_t, std::size_t>> stats;  // token -> (count, doc freq)
  for (const auto& doc : documents) {
    std::vector<std::string> seen(doc);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (const auto& t : doc) ++stats[t].first;
    for (const auto& t : seen) ++stats[t].second;
  }
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> kept;
  for (auto& entry : stats) {
    if (entry.second.first >= min_count) kept.emplace_back(entry.first, entry.second);
  }
  // std::map iteration is lexicographic, so a stable sort on count keeps the tie-break.
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.second.first > b.second.first; });
  std::vector<std::string> tokens;
  std::vector<std::size_t> df;
  for (auto& [token, counts] : kept) {
    tokens.push_back(token);
    df.push_back(counts.second);
  }
  return from_parts(std::move(tokens), std::move(df), documents.size());
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> tokens, std::vector<std::size_t> doc_freq,
                                  std::size_t num_docs) {
  if (tokens.size() != doc_freq.size()) throw DataError("vocabulary tokens and document frequencies differ in length");
  Vocabulary v;
  v.num_docs_ = num_docs;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto id = static_cast<TokenId>(v.tokens_.size());
    if (tokens[i].empty() || !v.index_.emplace(tokens[i], id).second) {
      throw DataError("vocabulary token '" + tokens[i] + "' is empty or repeated");
    }
    v.tokens_.push_back(std::move(tokens[i]));
    v.doc_freq_.push_back(doc_freq[i]);
  }
  return v;
}

TokenId Vocabulary::id(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  return it == index_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(std::string_view token) const { return index_.contains(std::string(token)); }

const std::string& Vocabulary::token(TokenId id) const { return tokens_.at(static_cast<std::size_t>(id)); }

std::vector<std::string> Vocabulary::kept_tokens() const {
  return {tokens_.begin() + static_cast<std::ptrdiff_t>(kReserved), tokens_.end()};
}

std::vector<std::size_t> Vocabulary::kept_doc_freq() const {
  return {doc_freq_.begin() + static_cast<std::ptrdiff_t>(kReserved), doc_freq_.end()};
}

TokenSequence encode_sequence(std::span<const std::string> tokens, const Vocabulary& vocab) {
  TokenSequence seq;  // value-initialized to PAD
  const std::size_t n = std::min(tokens.size(), kSequenceLength);
  for (std::size_t i = 0; i < n; ++i) seq.ids[i] = vocab.id(tokens[i]);
  return seq;
}

// --- featurization ----------------------------------------------------------------

std::string_view to_string(Weighting weighting) { return weighting == Weighting::kCount ? "count" : "tfidf"; }

Weighting parse_weighting(std::string_view text) {
  if (text == "count") return Weighting::kCount;
  if (text == "tfidf" || text == "tf-idf") return Weighting::kTfIdf;
  throw ConfigError("unknown weighting '" + std::string(text) + "' (expected count or tfidf)");
}

double FeatureVector::weight(TokenId id) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), id,
                                   [](const auto& entry, TokenId key) { return entry.first < key; });
  return it != entries.end() && it->first == id ? it->second : 0.0;
}

FeatureVector vectorize(std::span<const std::string> tokens, const Vocabulary& vocab, Weighting scheme) {
  std::map<TokenId, double> counts;
  for (const auto& t : tokens) {
    if (vocab.contains(t)) counts[vocab.id(t)] += 1.0;
  }
  FeatureVector fv;
  fv.entries.assign(counts.begin(), counts.end());
  if (scheme == Weighting::kTfIdf && !fv.empty()) {
    const double d = static_cast<double>(vocab.num_docs());
    double norm2 = 0.0;
    for (auto& [id, w] : fv.entries) {
      const double df = static_cast<double>(vocab.doc_freq(id));
      w *= std::log((1.0 + d) / (1.0 + df)) + 1.0;
      norm2 += w * w;
    }
    const double norm = std::sqrt(norm2);
    for (auto& entry : fv.entries) entry.second /= norm;
  }
  return fv;
}

// --- labeled dataset ----------------------------------------------------------------

std::vector<LabeledSentence> parse_labeled_dataset(std::istream& in, const std::string& name,
                                                   std::vector<std::string>* warnings) {
  const auto records = read_csv(in);
  std::vector<LabeledSentence> out;
  if (records.empty()) return out;
  const auto& header = records.front();
  if (header.fields.size() != 2 || header.fields[0] != "text" || header.fields[1] != "label") {
    throw RowError(name, header.line, "expected header 'text,label'");
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != 2) {
      throw RowError(name, rec.line, "expected 2 fields, found " + std::to_string(rec.fields.size()));
    }
    const auto label = parse_label(trim(rec.fields[1]));
    if (!label) throw RowError(name, rec.line, "unknown label '" + rec.fields[1] + "'");
    const std::string_view text = trim(rec.fields[0]);
    if (text.empty()) {
      if (warnings) warnings->push_back(name + ":" + std::to_string(rec.line) + ": empty text, row skipped");
      continue;
    }
    out.push_back(LabeledSentence{Sentence{name, out.size(), std::string(text)}, *label});
  }
  return out;
}

std::vector<LabeledSentence> load_labeled_dataset(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset " + path.string());
  return parse_labeled_dataset(in, path.filename().string(), warnings);
}

}  // namespace qb
