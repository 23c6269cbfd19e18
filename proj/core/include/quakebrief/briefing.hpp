#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quakebrief/corpus.hpp"
#include "quakebrief/ingest.hpp"
#include "quakebrief/labels.hpp"
#include "quakebrief/summarize.hpp"

namespace qb {

enum class Section {
  kIntroduction,
  kHazardDescription,
  kBuildings,
  kInfrastructure,
  kResilience,
};

inline constexpr std::array<Section, 5> kSectionOrder{Section::kIntroduction, Section::kHazardDescription,
                                                      Section::kBuildings, Section::kInfrastructure,
                                                      Section::kResilience};

std::string_view section_title(Section section);

inline constexpr std::string_view kNoInformation = "No information collected for this section.";

/// Section texts with `{placeholder}` fields filled from a HazardEvent.
/// Known placeholders: event_id, place, magnitude, alert, date_utc, time_utc,
/// datetime_utc, longitude, latitude, depth_km.
struct BriefingTemplate {
  std::string introduction;
  std::string hazard_description;

  static BriefingTemplate standard();
};

/// Substitutes placeholders; throws DataError naming an unknown or unterminated one.
std::string fill_template(std::string_view text, const HazardEvent& event);
std::string fill_hazard_description(const HazardEvent& event, const BriefingTemplate& tmpl);

struct SentenceProvenance {
  std::string document_id;
  std::size_t index = 0;
  std::string text;
};

struct BriefingSection {
  Section section = Section::kIntroduction;
  std::string text;
  std::vector<SentenceProvenance> sources;  // empty for template-filled sections
};

struct Briefing {
  HazardEvent event;
  std::vector<BriefingSection> sections;  // kSectionOrder
  std::int64_t generated_at_ms = 0;

  const BriefingSection& section(Section which) const;
};

struct ClassifiedSentence {
  Sentence sentence;
  Label label = Label::kOther;
};

/// Routes building/infrastructure/resilience sentences to their sections,
/// drops `other`, and summarizes each route. Empty routes get kNoInformation.
Briefing assemble_briefing(const HazardEvent& event, std::span<const ClassifiedSentence> sentences,
                           const SummaryOptions& summary, std::int64_t generated_at_ms,
                           const BriefingTemplate& tmpl = BriefingTemplate::standard());

enum class RenderFormat { kMarkdown, kPlain };

std::string render(const Briefing& briefing, RenderFormat format);
nlohmann::json provenance_json(const Briefing& briefing);

}  // namespace qb
