#include "quakebrief/briefing.hpp"

#include <cstdio>

#include "quakebrief/error.hpp"
#include "quakebrief/timeutil.hpp"

namespace qb {

std::string_view section_title(Section section) {
  switch (section) {
    case Section::kIntroduction: return "Introduction";
    case Section::kHazardDescription: return "Hazard Description";
    case Section::kBuildings: return "Damage to Buildings";
    case Section::kInfrastructure: return "Damage to Other Infrastructure";
    case Section::kResilience: return "Resilience Aspects and Effects on Community";
  }
  return "";
}

BriefingTemplate BriefingTemplate::standard() {
  BriefingTemplate t;
  t.introduction =
      "This briefing collects early information on the M{magnitude} earthquake {place} (event {event_id}) of "
      "{date_utc}. It was compiled automatically from the USGS event feed and from public news and social media "
      "reports, to help plan reconnaissance before a field deployment. The damage and community sections quote "
      "source sentences verbatim; see the provenance file for their origin.";
  t.hazard_description =
      "On {date_utc} at {time_utc} UTC, a magnitude {magnitude} earthquake occurred {place}. The epicenter was at "
      "longitude {longitude}, latitude {latitude}, with a focal depth of {depth_km} km. The USGS PAGER alert level "
      "for the event is {alert}.";
  return t;
}

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string placeholder_value(std::string_view name, const HazardEvent& e) {
  if (name == "event_id") return e.id;
  if (name == "place") return e.place;
  if (name == "magnitude") return fixed(e.magnitude, 1);
  if (name == "alert") return std::string(to_string(e.alert));
  if (name == "date_utc") return format_date(e.occurred_at_ms);
  if (name == "time_utc") return format_time(e.occurred_at_ms);
  if (name == "datetime_utc") return format_iso8601(e.occurred_at_ms);
  if (name == "longitude") return fixed(e.epicenter.longitude_deg, 4);
  if (name == "latitude") return fixed(e.epicenter.latitude_deg, 4);
  if (name == "depth_km") return fixed(e.epicenter.depth_km, 1);
  throw DataError("unknown template placeholder '{" + std::string(name) + "}'");
}

std::string join_sentences(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s.text;
  }
  return out;
}

}  // namespace

std::string fill_template(std::string_view text, const HazardEvent& event) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t open = text.find('{', i);
    if (open == std::string_view::npos) {
      out.append(text.substr(i));
      break;
    }
    out.append(text.substr(i, open - i));
    const std::size_t close = text.find('}', open + 1);
    if (close == std::string_view::npos) {
      throw DataError("unterminated template placeholder at offset " + std::to_string(open));
    }
    out += placeholder_value(text.substr(open + 1, close - open - 1), event);
    i = close + 1;
  }
  return out;
}

std::string fill_hazard_description(const HazardEvent& event, const BriefingTemplate& tmpl) {
  return fill_template(tmpl.hazard_description, event);
}

const BriefingSection& Briefing::section(Section which) const {
  for (const auto& s : sections) {
    if (s.section == which) return s;
  }
  throw DataError("briefing has no '" + std::string(section_title(which)) + "' section");
}

Briefing assemble_briefing(const HazardEvent& event, std::span<const ClassifiedSentence> sentences,
                           const SummaryOptions& summary, std::int64_t generated_at_ms, const BriefingTemplate& tmpl) {
  Briefing b;
  b.event = event;
  b.generated_at_ms = generated_at_ms;
  b.sections.push_back({Section::kIntroduction, fill_template(tmpl.introduction, event), {}});
  b.sections.push_back({Section::kHazardDescription, fill_hazard_description(event, tmpl), {}});

  const std::pair<Section, Label> routes[] = {
      {Section::kBuildings, Label::kBuilding},
      {Section::kInfrastructure, Label::kInfrastructure},
      {Section::kResilience, Label::kResilience},
  };
  for (const auto& [section, label] : routes) {
    std::vector<Sentence> routed;
    for (const auto& s : sentences) {
      if (s.label == label) routed.push_back(s.sentence);
    }
    BriefingSection out{section, std::string(kNoInformation), {}};
    const auto chosen = extract_summary(routed, summary);
    if (!chosen.empty()) {
      out.text = join_sentences(chosen);
      for (const auto& s : chosen) out.sources.push_back({s.document_id, s.index, s.text});
    }
    b.sections.push_back(std::move(out));
  }
  return b;
}

std::string render(const Briefing& briefing, RenderFormat format) {
  const HazardEvent& e = briefing.event;
  const std::string title = "Earthquake briefing: M" + fixed(e.magnitude, 1) + " " + e.place;
  const std::string byline = "Event " + e.id + ", generated " + format_iso8601(briefing.generated_at_ms);
  std::string out;
  if (format == RenderFormat::kMarkdown) {
    out += "# " + title + "\n\n_" + byline + "_\n";
    for (const auto& s : briefing.sections) {
      out += "\n## " + std::string(section_title(s.section)) + "\n\n" + s.text + "\n";
    }
  } else {
    auto underline = [](const std::string& text, char c) {
      // Underline by code points so multi-byte titles line up.
      std::size_t width = 0;
      for (unsigned char ch : text) width += (ch & 0xC0) != 0x80;
      return text + "\n" + std::string(width, c) + "\n";
    };
    out += underline(title, '=') + "\n" + byline + "\n";
    for (const auto& s : briefing.sections) {
      out += "\n" + underline(std::string(section_title(s.section)), '-') + "\n" + s.text + "\n";
    }
  }
  return out;
}

nlohmann::json provenance_json(const Briefing& briefing) {
  nlohmann::json sections = nlohmann::json::array();
  for (const auto& s : briefing.sections) {
    nlohmann::json sources = nlohmann::json::array();
    for (const auto& p : s.sources) sources.push_back({{"document_id", p.document_id}, {"index", p.index}, {"text", p.text}});
    sections.push_back({{"section", section_title(s.section)}, {"sentences", sources}});
  }
  return {{"event_id", briefing.event.id},
          {"generated_at", format_iso8601(briefing.generated_at_ms)},
          {"sections", sections}};
}

}  // namespace qb
