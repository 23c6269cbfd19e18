#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace qb {

/// USGS PAGER alert level. `kNone` stands for a null alert in the feed.
enum class Alert { kNone, kGreen, kYellow, kOrange, kRed };

std::string_view to_string(Alert alert);
std::optional<Alert> parse_alert(std::string_view text);

struct Epicenter {
  double longitude_deg = 0.0;
  double latitude_deg = 0.0;
  double depth_km = 0.0;  // feed may report small negatives for shallow events

  bool operator==(const Epicenter&) const = default;
};

struct HazardEvent {
  std::string id;
  double magnitude = 0.0;
  Alert alert = Alert::kNone;
  std::int64_t occurred_at_ms = 0;
  Epicenter epicenter;
  std::string place;

  std::int64_t occurred_at_seconds() const { return occurred_at_ms / 1000; }
  bool operator==(const HazardEvent&) const = default;
};

enum class SourceKind { kNews, kSocial, kFixture };

std::string_view to_string(SourceKind kind);
std::optional<SourceKind> parse_source_kind(std::string_view text);

struct Document {
  std::string id;
  std::string event_id;
  SourceKind source = SourceKind::kNews;
  std::optional<std::string> url;
  std::int64_t published_at_ms = 0;
  std::string language;
  std::optional<std::string> title;
  std::string body;

  bool operator==(const Document&) const = default;
};

struct CollectionWindow {
  int news_days = 7;
  int social_days = 90;

  void validate() const;
  /// Window length for documents from a source of the given kind.
  int days_for(SourceKind kind) const;
};

// --- USGS feed -------------------------------------------------------------

struct FeatureError {
  std::size_t feature_index = 0;
  std::string message;
};

struct FeedParseResult {
  std::vector<HazardEvent> events;   // feed order
  std::vector<FeatureError> errors;  // features that were skipped
};

/// Parses a USGS GeoJSON FeatureCollection. Malformed JSON throws ParseError
/// carrying the byte offset; per-feature problems are collected in `errors`.
FeedParseResult fetch_usgs_events(std::string_view feed_payload);

inline constexpr double kMinSignificantMagnitude = 5.0;

/// magnitude >= 5 and PAGER alert yellow, orange or red.
bool is_significant(const HazardEvent& event);
std::vector<HazardEvent> filter_events(std::span<const HazardEvent> events);

// --- document sources --------------------------------------------------------

struct SourceQuery {
  std::vector<std::string> keywords;
  std::int64_t since_ms = 0;
  std::int64_t until_ms = 0;
  std::string language;  // empty = any
};

/// Pluggable document provider. Implementations must be safe to query from
/// several threads at once.
class DocumentSource {
 public:
  virtual ~DocumentSource() = default;
  virtual std::string name() const = 0;
  virtual SourceKind kind() const = 0;
  /// Documents may come back without `event_id`; collect_documents assigns it.
  virtual std::vector<Document> query(const SourceQuery& query) const = 0;
};

/// Directory of JSON files, each holding one object or an array of objects
/// with fields {url, published_at, language, title, body}. `published_at` is
/// ISO-8601 or integer epoch milliseconds. Files are read in name order.
class FixtureSource : public DocumentSource {
 public:
  FixtureSource(std::filesystem::path directory, SourceKind kind);

  std::string name() const override;
  SourceKind kind() const override { return kind_; }
  /// Passthrough: keywords are ignored, language (if set) and time range filter.
  std::vector<Document> query(const SourceQuery& query) const override;

 private:
  std::filesystem::path directory_;
  SourceKind kind_;
};

/// "earthquake" plus the lowercase word tokens of the event's place.
std::vector<std::string> default_keywords(const HazardEvent& event);

/// Queries `source` for [event time, event time + window] and deduplicates by
/// (event_id, url). Documents without a url are never deduplicated.
std::vector<Document> collect_documents(const HazardEvent& event, const DocumentSource& source,
                                        const CollectionWindow& window,
                                        std::optional<std::vector<std::string>> keywords = std::nullopt,
                                        std::string language = {});

// --- JSON mapping --------------------------------------------------------------

nlohmann::json to_json(const HazardEvent& event);
nlohmann::json to_json(const Document& document);
HazardEvent event_from_json(const nlohmann::json& j);
Document document_from_json(const nlohmann::json& j);

// --- append-only store -----------------------------------------------------------

struct StoreReceipt {
  std::size_t events_written = 0;
  std::size_t events_skipped = 0;
  std::size_t documents_written = 0;
  std::size_t documents_skipped = 0;

  std::size_t written() const { return events_written + documents_written; }
  std::size_t skipped() const { return events_skipped + documents_skipped; }
};

/// `<dir>/events.jsonl` and `<dir>/documents/<event_id>.jsonl`, one compact
/// JSON object per line. Single writer; callers serialize concurrent persists.
class Store {
 public:
  explicit Store(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return directory_; }

  /// Appends records whose ids are not yet stored; existing ids count as skipped.
  StoreReceipt persist(std::span<const HazardEvent> events, std::span<const Document> documents);

  std::vector<HazardEvent> load_events() const;
  std::vector<Document> load_documents(std::string_view event_id) const;
  std::optional<HazardEvent> find_event(std::string_view event_id) const;

 private:
  std::filesystem::path events_path() const;
  std::filesystem::path documents_path(std::string_view event_id) const;

  std::filesystem::path directory_;
};

}  // namespace qb
