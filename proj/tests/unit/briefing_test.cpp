#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quakebrief/briefing.hpp"
#include "quakebrief/error.hpp"
#include "quakebrief/timeutil.hpp"

namespace {

using qb::Section;

qb::HazardEvent albania() { return qbtest::bundled_event("albania2019"); }

std::vector<qb::ClassifiedSentence> classify_randomly(qb::Rng& rng, const std::vector<qb::Sentence>& in) {
  std::uniform_int_distribution<std::size_t> label(0, 3);
  std::vector<qb::ClassifiedSentence> out;
  for (const auto& s : in) out.push_back({s, qb::label_from_index(label(rng))});
  return out;
}

TEST(Template, FillsPlaceholders) {
  const auto e = albania();
  EXPECT_EQ(qb::fill_template("M{magnitude} {place}", e), "M6.4 15 km WSW of Mamurras, Albania");
  EXPECT_EQ(qb::fill_template("{date_utc} {time_utc}", e), "2019-11-26 02:54:12");
  EXPECT_EQ(qb::fill_template("{datetime_utc}", e), "2019-11-26T02:54:12Z");
  EXPECT_EQ(qb::fill_template("{alert} {event_id}", e), "red albania2019");
  EXPECT_EQ(qb::fill_template("{longitude},{latitude},{depth_km}", e), "19.5223,41.5135,20.0");
  EXPECT_EQ(qb::fill_template("no fields", e), "no fields");
  EXPECT_EQ(qb::fill_template("", e), "");
}

TEST(Template, RejectsUnknownAndUnterminatedPlaceholders) {
  const auto e = albania();
  EXPECT_THROW(qb::fill_template("{casualties}", e), qb::DataError);
  EXPECT_THROW(qb::fill_template("M{magnitude", e), qb::DataError);
  try {
    qb::fill_template("x {nope} y", e);
    FAIL() << "expected DataError";
  } catch (const qb::DataError& err) {
    EXPECT_NE(std::string(err.what()).find("nope"), std::string::npos);
  }
}

TEST(Template, StandardHazardDescriptionMentionsTheEvent) {
  const auto text = qb::fill_hazard_description(albania(), qb::BriefingTemplate::standard());
  EXPECT_NE(text.find("magnitude 6.4"), std::string::npos);
  EXPECT_NE(text.find("Mamurras"), std::string::npos);
  EXPECT_NE(text.find("red"), std::string::npos);
  EXPECT_EQ(text.find('{'), std::string::npos);
}

TEST(Assemble, RoutesByLabelAndDropsOther) {
  const std::vector<qb::ClassifiedSentence> in{
      {{"d", 0, "Two apartment blocks collapsed in Durres."}, qb::Label::kBuilding},
      {{"d", 1, "The main highway to Tirana was closed."}, qb::Label::kInfrastructure},
      {{"d", 2, "Volunteers set up tents for displaced families."}, qb::Label::kResilience},
      {{"d", 3, "The prime minister spoke on television."}, qb::Label::kOther},
  };
  const auto b = qb::assemble_briefing(albania(), in, {}, 0);
  ASSERT_EQ(b.sections.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(b.sections[i].section, qb::kSectionOrder[i]);
  EXPECT_EQ(b.section(Section::kBuildings).text, in[0].sentence.text);
  EXPECT_EQ(b.section(Section::kInfrastructure).text, in[1].sentence.text);
  EXPECT_EQ(b.section(Section::kResilience).text, in[2].sentence.text);
  ASSERT_EQ(b.section(Section::kBuildings).sources.size(), 1u);
  EXPECT_EQ(b.section(Section::kBuildings).sources[0].index, 0u);
  EXPECT_TRUE(b.section(Section::kIntroduction).sources.empty());
  for (const auto& s : b.sections) EXPECT_EQ(s.text.find("prime minister"), std::string::npos);
}

TEST(Assemble, EmptyRoutesGetTheSentinel) {
  const std::vector<qb::ClassifiedSentence> in{{{"d", 0, "Schools reopened on Monday."}, qb::Label::kResilience}};
  const auto b = qb::assemble_briefing(albania(), in, {}, 0);
  EXPECT_EQ(b.section(Section::kBuildings).text, qb::kNoInformation);
  EXPECT_EQ(b.section(Section::kInfrastructure).text, qb::kNoInformation);
  EXPECT_TRUE(b.section(Section::kBuildings).sources.empty());
  const auto none = qb::assemble_briefing(albania(), {}, {}, 0);
  EXPECT_EQ(none.section(Section::kResilience).text, qb::kNoInformation);
}

TEST(Assemble, BadTemplateThrows) {
  auto tmpl = qb::BriefingTemplate::standard();
  tmpl.introduction = "About {unknown}.";
  EXPECT_THROW(qb::assemble_briefing(albania(), {}, {}, 0, tmpl), qb::DataError);
}

TEST(Assemble, ContentSectionsAreExtractiveOnRandomCorpora) {
  qb::Rng rng(21);
  std::uniform_int_distribution<std::size_t> count(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sentences = qbtest::random_sentences(rng, count(rng));
    const auto classified = classify_randomly(rng, sentences);
    const auto b = qb::assemble_briefing(albania(), classified, {}, 0);
    for (const auto& [section, label] : {std::pair{Section::kBuildings, qb::Label::kBuilding},
                                         std::pair{Section::kInfrastructure, qb::Label::kInfrastructure},
                                         std::pair{Section::kResilience, qb::Label::kResilience}}) {
      std::vector<qb::Sentence> routed;
      for (const auto& c : classified) {
        if (c.label == label) routed.push_back(c.sentence);
      }
      const auto& out = b.section(section);
      std::vector<qb::Sentence> picked;
      std::string joined;
      for (const auto& p : out.sources) {
        picked.push_back({p.document_id, p.index, p.text});
        joined += (joined.empty() ? "" : " ") + p.text;
      }
      EXPECT_TRUE(qbtest::is_ordered_extract(picked, routed));
      EXPECT_EQ(routed.empty(), picked.empty());
      EXPECT_EQ(out.text, picked.empty() ? std::string(qb::kNoInformation) : joined);
    }
  }
}

TEST(Render, MarkdownHasFiveSectionsInOrder) {
  qb::Rng rng(22);
  const auto b = qb::assemble_briefing(albania(), classify_randomly(rng, qbtest::random_sentences(rng, 20)), {},
                                       qb::parse_iso8601_ms("2019-11-27T08:00:00Z"));
  const auto md = qb::render(b, qb::RenderFormat::kMarkdown);
  EXPECT_EQ(md.rfind("# Earthquake briefing: M6.4 15 km WSW of Mamurras, Albania\n", 0), 0u);
  EXPECT_NE(md.find("generated 2019-11-27T08:00:00Z"), std::string::npos);
  std::size_t at = 0;
  for (Section s : qb::kSectionOrder) {
    const auto pos = md.find("\n## " + std::string(qb::section_title(s)) + "\n", at);
    ASSERT_NE(pos, std::string::npos) << qb::section_title(s);
    at = pos + 1;
  }
  std::size_t headers = 0;
  for (std::size_t p = md.find("\n## "); p != std::string::npos; p = md.find("\n## ", p + 1)) ++headers;
  EXPECT_EQ(headers, 5u);
  EXPECT_EQ(md, qb::render(b, qb::RenderFormat::kMarkdown));
}

TEST(Render, PlainUnderlinesMatchTitleWidth) {
  auto e = albania();
  e.place = "Durrës, Shqipëri";
  const auto b = qb::assemble_briefing(e, {}, {}, 0);
  const auto plain = qb::render(b, qb::RenderFormat::kPlain);
  EXPECT_EQ(plain.find("##"), std::string::npos);
  const std::string title = "Earthquake briefing: M6.4 Durrës, Shqipëri";
  EXPECT_EQ(plain.rfind(title + "\n" + std::string(title.size() - 2, '=') + "\n", 0), 0u);
  const std::string heading(qb::section_title(Section::kBuildings));
  EXPECT_NE(plain.find(heading + "\n" + std::string(heading.size(), '-') + "\n"), std::string::npos);
}

TEST(Render, SameInputsGiveIdenticalBytes) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    qb::Rng a(seed), b(seed);
    const auto ba = qb::assemble_briefing(albania(), classify_randomly(a, qbtest::random_sentences(a, 25)), {}, 5);
    const auto bb = qb::assemble_briefing(albania(), classify_randomly(b, qbtest::random_sentences(b, 25)), {}, 5);
    EXPECT_EQ(qb::render(ba, qb::RenderFormat::kMarkdown), qb::render(bb, qb::RenderFormat::kMarkdown));
    EXPECT_EQ(qb::provenance_json(ba).dump(), qb::provenance_json(bb).dump());
  }
}

TEST(Provenance, ListsSourcesPerSection) {
  const std::vector<qb::ClassifiedSentence> in{
      {{"a0", 4, "Houses cracked in Thumane."}, qb::Label::kBuilding},
      {{"a1", 0, "Power returned to most of Durres."}, qb::Label::kInfrastructure},
  };
  const auto j = qb::provenance_json(qb::assemble_briefing(albania(), in, {}, 0));
  EXPECT_EQ(j["event_id"], "albania2019");
  EXPECT_EQ(j["generated_at"], "1970-01-01T00:00:00Z");
  ASSERT_EQ(j["sections"].size(), 5u);
  EXPECT_EQ(j["sections"][2]["section"], "Damage to Buildings");
  EXPECT_EQ(j["sections"][2]["sentences"][0]["document_id"], "a0");
  EXPECT_EQ(j["sections"][2]["sentences"][0]["index"], 4);
  EXPECT_EQ(j["sections"][3]["sentences"][0]["text"], "Power returned to most of Durres.");
  EXPECT_TRUE(j["sections"][4]["sentences"].empty());
}

TEST(Briefing, MissingSectionLookupThrows) {
  qb::Briefing b;
  EXPECT_THROW(b.section(Section::kBuildings), qb::DataError);
}

}  // namespace
