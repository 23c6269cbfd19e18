#include "quakebrief/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "quakebrief/corpus.hpp"
#include "quakebrief/error.hpp"
#include "quakebrief/timeutil.hpp"

namespace qb {

using nlohmann::json;

std::string_view to_string(Alert alert) {
  switch (alert) {
    case Alert::kNone: return "none";
    case Alert::kGreen: return "green";
    case Alert::kYellow: return "yellow";
    case Alert::kOrange: return "orange";
    case Alert::kRed: return "red";
  }
  return "none";
}

std::optional<Alert> parse_alert(std::string_view text) {
  for (Alert a : {Alert::kNone, Alert::kGreen, Alert::kYellow, Alert::kOrange, Alert::kRed}) {
    if (to_string(a) == text) return a;
  }
  return std::nullopt;
}

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::kNews: return "news";
    case SourceKind::kSocial: return "social";
    case SourceKind::kFixture: return "fixture";
  }
  return "fixture";
}

std::optional<SourceKind> parse_source_kind(std::string_view text) {
  for (SourceKind k : {SourceKind::kNews, SourceKind::kSocial, SourceKind::kFixture}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

void CollectionWindow::validate() const {
  if (news_days <= 0 || social_days <= 0) {
    throw ConfigError("collection window lengths must be positive (news_days=" + std::to_string(news_days) +
                      ", social_days=" + std::to_string(social_days) + ")");
  }
}

int CollectionWindow::days_for(SourceKind kind) const {
  return kind == SourceKind::kSocial ? social_days : news_days;
}

// --- USGS feed -----------------------------------------------------------------

namespace {

HazardEvent event_from_feature(const json& feature) {
  if (!feature.is_object()) throw DataError("feature is not an object");
  HazardEvent event;

  const auto id = feature.find("id");
  if (id == feature.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw DataError("missing feature id");
  }
  event.id = id->get<std::string>();

  const auto props = feature.find("properties");
  if (props == feature.end() || !props->is_object()) throw DataError("missing properties");

  const auto mag = props->find("mag");
  if (mag == props->end() || !mag->is_number()) throw DataError("missing properties.mag");
  event.magnitude = mag->get<double>();
  if (!std::isfinite(event.magnitude)) throw DataError("non-finite properties.mag");

  const auto alert = props->find("alert");
  if (alert == props->end()) throw DataError("missing properties.alert");
  if (alert->is_null()) {
    event.alert = Alert::kNone;
  } else if (alert->is_string()) {
    const auto parsed = parse_alert(alert->get<std::string>());
    if (!parsed) throw DataError("unknown properties.alert '" + alert->get<std::string>() + "'");
    event.alert = *parsed;
  } else {
    throw DataError("properties.alert is neither string nor null");
  }

  const auto time = props->find("time");
  if (time == props->end() || !time->is_number_integer()) throw DataError("missing properties.time");
  event.occurred_at_ms = time->get<std::int64_t>();

  const auto place = props->find("place");
  if (place == props->end() || !place->is_string()) throw DataError("missing properties.place");
  event.place = place->get<std::string>();

  const auto geometry = feature.find("geometry");
  if (geometry == feature.end() || !geometry->is_object()) throw DataError("missing geometry");
  const auto coords = geometry->find("coordinates");
  if (coords == geometry->end() || !coords->is_array() || coords->size() < 3) {
    throw DataError("geometry.coordinates must be [lon, lat, depth]");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(*coords)[i].is_number()) throw DataError("non-numeric geometry.coordinates");
  }
  event.epicenter.longitude_deg = (*coords)[0].get<double>();
  event.epicenter.latitude_deg = (*coords)[1].get<double>();
  event.epicenter.depth_km = (*coords)[2].get<double>();
  if (!std::isfinite(event.epicenter.longitude_deg) || !std::isfinite(event.epicenter.latitude_deg) ||
      !std::isfinite(event.epicenter.depth_km)) {
    throw DataError("non-finite geometry.coordinates");
  }
  return event;
}

}  // namespace

FeedParseResult fetch_usgs_events(std::string_view feed_payload) {
  json root;
  try {
    root = json::parse(feed_payload.begin(), feed_payload.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed feed JSON at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
  const auto features = root.find("features");
  if (!root.is_object() || features == root.end() || !features->is_array()) {
    throw ParseError("feed has no top-level 'features' array", 0);
  }

  FeedParseResult result;
  for (std::size_t i = 0; i < features->size(); ++i) {
    try {
      result.events.push_back(event_from_feature((*features)[i]));
    } catch (const DataError& e) {
      result.errors.push_back({i, e.what()});
    } catch (const json::exception& e) {
      result.errors.push_back({i, e.what()});
    }
  }
  return result;
}

bool is_significant(const HazardEvent& event) {
  const bool alerting = event.alert == Alert::kYellow || event.alert == Alert::kOrange || event.alert == Alert::kRed;
  return event.magnitude >= kMinSignificantMagnitude && alerting;
}

std::vector<HazardEvent> filter_events(std::span<const HazardEvent> events) {
  std::vector<HazardEvent> kept;
  std::copy_if(events.begin(), events.end(), std::back_inserter(kept), is_significant);
  return kept;
}

// --- JSON mapping ----------------------------------------------------------------

json to_json(const HazardEvent& event) {
  return json{
      {"id", event.id},
      {"magnitude", event.magnitude},
      {"alert", to_string(event.alert)},
      {"occurred_at_ms", event.occurred_at_ms},
      {"longitude", event.epicenter.longitude_deg},
      {"latitude", event.epicenter.latitude_deg},
      {"depth_km", event.epicenter.depth_km},
      {"place", event.place},
  };
}

json to_json(const Document& document) {
  json j{
      {"id", document.id},
      {"event_id", document.event_id},
      {"source", to_string(document.source)},
      {"url", document.url ? json(*document.url) : json(nullptr)},
      {"published_at_ms", document.published_at_ms},
      {"language", document.language},
      {"title", document.title ? json(*document.title) : json(nullptr)},
      {"body", document.body},
  };
  return j;
}

HazardEvent event_from_json(const json& j) {
  HazardEvent event;
  event.id = j.at("id").get<std::string>();
  event.magnitude = j.at("magnitude").get<double>();
  const auto alert = parse_alert(j.at("alert").get<std::string>());
  if (!alert) throw DataError("unknown alert '" + j.at("alert").get<std::string>() + "'");
  event.alert = *alert;
  event.occurred_at_ms = j.at("occurred_at_ms").get<std::int64_t>();
  event.epicenter.longitude_deg = j.at("longitude").get<double>();
  event.epicenter.latitude_deg = j.at("latitude").get<double>();
  event.epicenter.depth_km = j.at("depth_km").get<double>();
  event.place = j.at("place").get<std::string>();
  if (event.id.empty()) throw DataError("event id is empty");
  return event;
}

Document document_from_json(const json& j) {
  Document doc;
  doc.id = j.at("id").get<std::string>();
  doc.event_id = j.at("event_id").get<std::string>();
  const auto kind = parse_source_kind(j.at("source").get<std::string>());
  if (!kind) throw DataError("unknown document source '" + j.at("source").get<std::string>() + "'");
  doc.source = *kind;
  if (const auto& url = j.at("url"); !url.is_null()) doc.url = url.get<std::string>();
  doc.published_at_ms = j.at("published_at_ms").get<std::int64_t>();
  doc.language = j.at("language").get<std::string>();
  if (const auto& title = j.at("title"); !title.is_null()) doc.title = title.get<std::string>();
  doc.body = j.at("body").get<std::string>();
  return doc;
}

// --- fixture source -----------------------------------------------------------------

FixtureSource::FixtureSource(std::filesystem::path directory, SourceKind kind)
    : directory_(std::move(directory)), kind_(kind) {}

std::string FixtureSource::name() const {
  return "fixture:" + std::string(to_string(kind_)) + ":" + directory_.string();
}

namespace {

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::int64_t published_ms(const json& value) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_string()) return parse_iso8601_ms(value.get<std::string>());
  throw DataError("published_at must be ISO-8601 text or epoch milliseconds");
}

}  // namespace

std::vector<Document> FixtureSource::query(const SourceQuery& query) const {
  std::error_code ec;
  if (!std::filesystem::is_directory(directory_, ec)) {
    throw SourceError(name(), "fixture directory not readable");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory_, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) throw SourceError(name(), ec.message());
  std::sort(files.begin(), files.end());

  std::vector<Document> out;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw SourceError(name(), "cannot open " + file.string());
    json root;
    try {
      root = json::parse(in);
    } catch (const json::parse_error& e) {
      throw SourceError(name(), file.string() + ": malformed JSON at byte " + std::to_string(e.byte), false);
    }
    const bool many = root.is_array();
    const std::size_t count = many ? root.size() : 1;
    for (std::size_t k = 0; k < count; ++k) {
      const json& item = many ? root[k] : root;
      Document doc;
      doc.id = file.stem().string() + (many ? "-" + std::to_string(k) : "");
      doc.source = kind_;
      try {
        if (auto it = item.find("url"); it != item.end() && !it->is_null()) doc.url = it->get<std::string>();
        doc.published_at_ms = published_ms(item.at("published_at"));
        if (auto it = item.find("language"); it != item.end() && !it->is_null()) doc.language = it->get<std::string>();
        if (auto it = item.find("title"); it != item.end() && !it->is_null()) doc.title = it->get<std::string>();
        doc.body = item.at("body").get<std::string>();
      } catch (const json::exception& e) {
        throw SourceError(name(), file.string() + ": " + e.what(), false);
      } catch (const ParseError& e) {
        throw SourceError(name(), file.string() + ": " + e.what(), false);
      }
      if (blank(doc.body)) continue;
      if (!query.language.empty() && doc.language != query.language) continue;
      if (doc.published_at_ms < query.since_ms || doc.published_at_ms > query.until_ms) continue;
      out.push_back(std::move(doc));
    }
  }
  return out;
}

// --- collection --------------------------------------------------------------------

std::vector<std::string> default_keywords(const HazardEvent& event) {
  std::vector<std::string> keywords{"earthquake"};
  for (auto& token : tokenize(event.place)) {
    const bool numeric = std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); });
    if (numeric || token.size() < 3) continue;
    if (std::find(keywords.begin(), keywords.end(), token) == keywords.end()) keywords.push_back(std::move(token));
  }
  return keywords;
}

std::vector<Document> collect_documents(const HazardEvent& event, const DocumentSource& source,
                                        const CollectionWindow& window,
                                        std::optional<std::vector<std::string>> keywords, std::string language) {
  window.validate();
  SourceQuery query;
  query.keywords = keywords ? std::move(*keywords) : default_keywords(event);
  query.since_ms = event.occurred_at_ms;
  query.until_ms = event.occurred_at_ms + window.days_for(source.kind()) * kMillisPerDay;
  query.language = std::move(language);

  std::vector<Document> found = source.query(query);
  std::vector<Document> out;
  std::set<std::string> seen_urls;
  for (auto& doc : found) {
    doc.event_id = event.id;
    if (doc.published_at_ms < query.since_ms || doc.published_at_ms > query.until_ms) continue;
    if (blank(doc.body)) continue;
    if (doc.url && !seen_urls.insert(*doc.url).second) continue;
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace qb
