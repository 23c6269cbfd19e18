#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "quakebrief/error.hpp"
#include "quakebrief/ingest.hpp"

namespace {

qb::HazardEvent make_event(const std::string& id, double mag) {
  qb::HazardEvent e;
  e.id = id;
  e.magnitude = mag;
  e.alert = qb::Alert::kOrange;
  e.occurred_at_ms = 1366416167000LL;
  e.epicenter = {102.888, 30.308, 14.0};
  e.place = "Lushan, Ya'an, Sichuan, China";
  return e;
}

qb::Document make_doc(const std::string& id, const std::string& event_id) {
  qb::Document d;
  d.id = id;
  d.event_id = event_id;
  d.source = qb::SourceKind::kNews;
  d.url = "https://example.org/" + id;
  d.published_at_ms = 1366416167000LL + 5000;
  d.language = "en";
  d.title = "Title \"quoted\"";
  d.body = "Line one.\nLine two with unicode: 芦山.";
  return d;
}

TEST(Store, EmptyStoreLoadsNothing) {
  qbtest::TempDir dir;
  const qb::Store store(dir / "store");
  EXPECT_TRUE(store.load_events().empty());
  EXPECT_TRUE(store.load_documents("x").empty());
  EXPECT_FALSE(store.find_event("x").has_value());
}

TEST(Store, RoundTripsEventsAndDocuments) {
  qbtest::TempDir dir;
  qb::Store store(dir.path());
  const std::vector<qb::HazardEvent> events{make_event("a", 6.6), make_event("b", 5.1)};
  const std::vector<qb::Document> docs{make_doc("d1", "a"), make_doc("d2", "a"), make_doc("d3", "b")};
  const auto receipt = store.persist(events, docs);
  EXPECT_EQ(receipt.events_written, 2u);
  EXPECT_EQ(receipt.documents_written, 3u);
  EXPECT_EQ(store.load_events(), events);
  EXPECT_EQ(store.load_documents("a"), (std::vector<qb::Document>{docs[0], docs[1]}));
  EXPECT_EQ(store.find_event("b"), events[1]);
}

TEST(Store, RepersistingIsCountedAsSkipped) {
  qbtest::TempDir dir;
  qb::Store store(dir.path());
  const std::vector<qb::HazardEvent> one{make_event("a", 6.6)};
  store.persist(one, {});
  const auto receipt = store.persist(one, {});
  EXPECT_EQ(receipt.written(), 0u);
  EXPECT_EQ(receipt.skipped(), 1u);
  EXPECT_EQ(store.load_events().size(), 1u);

  const std::vector<qb::HazardEvent> twice{make_event("c", 5.0), make_event("c", 5.0)};
  const auto r2 = store.persist(twice, {});
  EXPECT_EQ(r2.events_written, 1u);
  EXPECT_EQ(r2.events_skipped, 1u);
}

TEST(Store, LayoutIsOneCompactObjectPerLine) {
  qbtest::TempDir dir;
  qb::Store store(dir.path());
  const std::vector<qb::HazardEvent> events{make_event("a", 6.6), make_event("b", 5.1)};
  const std::vector<qb::Document> docs{make_doc("d1", "a")};
  store.persist(events, docs);
  const std::string text = qbtest::read_text(dir / "events.jsonl");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_TRUE(qbtest::fs::exists(dir.path() / "documents" / "a.jsonl"));
}

TEST(Store, CorruptLineNamesFileAndLine) {
  qbtest::TempDir dir;
  qb::Store store(dir.path());
  const std::vector<qb::HazardEvent> one{make_event("a", 6.6)};
  store.persist(one, {});
  {
    std::string text = qbtest::read_text(dir / "events.jsonl");
    qbtest::write_text(dir / "events.jsonl", text + "{\"id\": \"b\", broken\n");
  }
  try {
    store.load_events();
    FAIL() << "expected RowError";
  } catch (const qb::RowError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_NE(std::string(e.what()).find("events.jsonl"), std::string::npos);
  }
}

TEST(Store, RejectsIdsThatAreNotFileNames) {
  qbtest::TempDir dir;
  qb::Store store(dir.path());
  const std::vector<qb::HazardEvent> events{make_event("a", 6.6)};
  const std::vector<qb::Document> docs{make_doc("d1", "../escape")};
  EXPECT_THROW(store.persist(events, docs), qb::DataError);
  EXPECT_THROW(store.load_documents("a/b"), qb::DataError);
}

TEST(Store, FetchPersistLoadFilterPreservesOrder) {
  qbtest::TempDir dir;
  qb::Store store(dir.path());
  const auto parsed = qb::fetch_usgs_events(qbtest::read_text(qbtest::data_path("fixtures/usgs_feed.geojson")));
  store.persist(parsed.events, {});
  store.persist(parsed.events, {});
  EXPECT_EQ(store.load_events(), parsed.events);
  EXPECT_EQ(qb::filter_events(store.load_events()), qb::filter_events(parsed.events));
}

}  // namespace
