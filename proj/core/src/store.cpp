#include <fstream>
#include <map>
#include <set>
#include <string>

#include "quakebrief/error.hpp"
#include "quakebrief/ingest.hpp"

namespace qb {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void check_event_id(std::string_view id) {
  if (id.empty() || id == "." || id == ".." || id.find_first_of("/\\") != std::string_view::npos ||
      id.find('\0') != std::string_view::npos) {
    throw DataError("event id '" + std::string(id) + "' cannot be used as a file name");
  }
}

// Parses every non-empty line; corrupt lines throw RowError with the 1-based line number.
template <typename F>
void for_each_line(const fs::path& path, F&& visit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!fs::exists(path)) return;
    throw IoError("cannot read " + path.string());
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      visit(json::parse(line));
    } catch (const json::exception& e) {
      throw RowError(path.string(), number, std::string("corrupt record: ") + e.what());
    } catch (const DataError& e) {
      throw RowError(path.string(), number, e.what());
    }
  }
}

void append_lines(const fs::path& path, const std::vector<std::string>& lines) {
  if (lines.empty()) return;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot append to " + path.string());
  for (const auto& line : lines) out << line << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

Store::Store(fs::path directory) : directory_(std::move(directory)) {}

fs::path Store::events_path() const { return directory_ / "events.jsonl"; }

fs::path Store::documents_path(std::string_view event_id) const {
  check_event_id(event_id);
  return directory_ / "documents" / (std::string(event_id) + ".jsonl");
}

StoreReceipt Store::persist(std::span<const HazardEvent> events, std::span<const Document> documents) {
  std::error_code ec;
  fs::create_directories(directory_ / "documents", ec);
  if (ec) throw IoError("cannot create store at " + directory_.string() + ": " + ec.message());

  StoreReceipt receipt;

  std::set<std::string> event_ids;
  for (const auto& e : load_events()) event_ids.insert(e.id);
  std::vector<std::string> event_lines;
  for (const auto& event : events) {
    check_event_id(event.id);
    if (!event_ids.insert(event.id).second) {
      ++receipt.events_skipped;
      continue;
    }
    event_lines.push_back(to_json(event).dump());
    ++receipt.events_written;
  }
  append_lines(events_path(), event_lines);

  // Group by event so each documents file is read once.
  std::map<std::string, std::vector<const Document*>> by_event;
  for (const auto& doc : documents) by_event[doc.event_id].push_back(&doc);
  for (const auto& [event_id, docs] : by_event) {
    std::set<std::string> ids;
    std::set<std::string> urls;
    for (const auto& d : load_documents(event_id)) {
      ids.insert(d.id);
      if (d.url) urls.insert(*d.url);
    }
    std::vector<std::string> lines;
    for (const Document* doc : docs) {
      const bool duplicate_url = doc->url && urls.contains(*doc->url);
      if (ids.contains(doc->id) || duplicate_url) {
        ++receipt.documents_skipped;
        continue;
      }
      ids.insert(doc->id);
      if (doc->url) urls.insert(*doc->url);
      lines.push_back(to_json(*doc).dump());
      ++receipt.documents_written;
    }
    append_lines(documents_path(event_id), lines);
  }
  return receipt;
}

std::vector<HazardEvent> Store::load_events() const {
  std::vector<HazardEvent> events;
  for_each_line(events_path(), [&](const json& j) { events.push_back(event_from_json(j)); });
  return events;
}

std::vector<Document> Store::load_documents(std::string_view event_id) const {
  std::vector<Document> docs;
  for_each_line(documents_path(event_id), [&](const json& j) { docs.push_back(document_from_json(j)); });
  return docs;
}

std::optional<HazardEvent> Store::find_event(std::string_view event_id) const {
  for (auto& e : load_events()) {
    if (e.id == event_id) return std::move(e);
  }
  return std::nullopt;
}

}  // namespace qb
