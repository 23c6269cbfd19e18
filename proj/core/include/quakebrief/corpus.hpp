#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quakebrief/labels.hpp"

namespace qb {

struct Sentence {
  std::string document_id;
  std::size_t index = 0;  // position within the document, contiguous from 0
  std::string text;

  bool operator==(const Sentence&) const = default;
};

struct LabeledSentence {
  Sentence sentence;
  Label label = Label::kOther;
};

/// Splits on `.`, `!` or `?` (optionally followed by closing quotes or
/// brackets) when the next non-space character is uppercase or the text ends.
/// Abbreviations such as "U.S." or "a.m." never end a sentence and a blank
/// line always does. Segments with fewer than two tokens are dropped; every
/// returned text is a trimmed substring of `body`.
std::vector<Sentence> segment_sentences(std::string_view body, std::string_view document_id = {});

/// Lowercase word tokens; any run of non-alphanumeric characters separates.
/// Non-ASCII letters are word characters, Unicode punctuation is not.
std::vector<std::string> tokenize(std::string_view text);

/// Sequence length and embedding width of the neural classifiers.
inline constexpr std::size_t kSequenceLength = 64;
inline constexpr std::size_t kEmbeddingDim = 80;

using TokenId = std::int32_t;

class Vocabulary {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kUnk = 1;
  static constexpr std::size_t kReserved = 2;

  Vocabulary();

  /// Tokens seen at least `min_count` times get ids 2.. in order of
  /// descending frequency, ties broken lexicographically. Each inner vector is
  /// one document for document-frequency purposes.
  static Vocabulary build(std::span<const std::vector<std::string>> documents, std::size_t min_count = 1);

  /// Rebuilds a vocabulary from its serialized parts (tokens in id order from id 2).
  static Vocabulary from_parts(std::vector<std::string> tokens, std::vector<std::size_t> doc_freq,
                               std::size_t num_docs);

  std::size_t size() const { return tokens_.size(); }
  TokenId id(std::string_view token) const;  // kUnk when absent
  bool contains(std::string_view token) const;
  const std::string& token(TokenId id) const;
  std::size_t doc_freq(TokenId id) const { return doc_freq_.at(static_cast<std::size_t>(id)); }
  std::size_t num_docs() const { return num_docs_; }

  /// Tokens with id >= 2, in id order.
  std::vector<std::string> kept_tokens() const;
  std::vector<std::size_t> kept_doc_freq() const;

 private:
  std::vector<std::string> tokens_;
  std::vector<std::size_t> doc_freq_;
  std::unordered_map<std::string, TokenId> index_;
  std::size_t num_docs_ = 0;
};

struct TokenSequence {
  std::array<TokenId, kSequenceLength> ids{};

  bool operator==(const TokenSequence&) const = default;
};

/// Maps tokens to ids (UNK when unknown), right-pads with PAD, truncates to 64.
TokenSequence encode_sequence(std::span<const std::string> tokens, const Vocabulary& vocab);

enum class Weighting { kCount, kTfIdf };

std::string_view to_string(Weighting weighting);
Weighting parse_weighting(std::string_view text);

/// Sparse non-negative weights keyed by token id, sorted by id, no zeros.
struct FeatureVector {
  std::vector<std::pair<TokenId, double>> entries;

  double weight(TokenId id) const;
  bool empty() const { return entries.empty(); }
};

/// Out-of-vocabulary tokens are dropped. tf-idf weight is
/// count * (ln((1 + D) / (1 + df)) + 1), then L2-normalized.
FeatureVector vectorize(std::span<const std::string> tokens, const Vocabulary& vocab, Weighting scheme);

/// CSV with header `text,label`. Unknown labels throw RowError; rows with empty
/// text are skipped and reported through `warnings` when given.
std::vector<LabeledSentence> load_labeled_dataset(const std::filesystem::path& path,
                                                  std::vector<std::string>* warnings = nullptr);
std::vector<LabeledSentence> parse_labeled_dataset(std::istream& in, const std::string& name,
                                                   std::vector<std::string>* warnings = nullptr);

}  // namespace qb
