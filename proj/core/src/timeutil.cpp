#include "quakebrief/timeutil.hpp"

#include <charconv>
#include <cstdio>

#include "quakebrief/error.hpp"

namespace qb {
namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (H. Hinnant's algorithm).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

Civil civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int read_int(std::string_view text, std::size_t pos, std::size_t len) {
  if (pos + len > text.size()) throw ParseError("truncated timestamp '" + std::string(text) + "'", pos);
  int value = 0;
  const auto* first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc{} || ptr != first + len) {
    throw ParseError("bad digits in timestamp '" + std::string(text) + "'", pos);
  }
  return value;
}

void expect(std::string_view text, std::size_t pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError("expected '" + std::string(1, c) + "' in timestamp '" + std::string(text) + "'", pos);
  }
}

}  // namespace

std::int64_t parse_iso8601_ms(std::string_view text) {
  const int year = read_int(text, 0, 4);
  expect(text, 4, '-');
  const int month = read_int(text, 5, 2);
  expect(text, 7, '-');
  const int day = read_int(text, 8, 2);
  if (text.size() <= 10 || (text[10] != 'T' && text[10] != ' ')) {
    throw ParseError("expected 'T' in timestamp '" + std::string(text) + "'", 10);
  }
  const int hour = read_int(text, 11, 2);
  expect(text, 13, ':');
  const int minute = read_int(text, 14, 2);
  expect(text, 16, ':');
  const int second = read_int(text, 17, 2);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60) {
    throw ParseError("timestamp field out of range '" + std::string(text) + "'", 0);
  }

  std::size_t pos = 19;
  std::int64_t millis = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (digits < 3) millis = millis * 10 + (text[pos] - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0) throw ParseError("empty fraction in timestamp '" + std::string(text) + "'", pos);
    for (; digits < 3; ++digits) millis *= 10;
  }

  std::int64_t offset_minutes = 0;
  if (pos < text.size() && (text[pos] == 'Z' || text[pos] == 'z')) {
    ++pos;
  } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    const int sign = text[pos] == '-' ? -1 : 1;
    const int oh = read_int(text, pos + 1, 2);
    expect(text, pos + 3, ':');
    const int om = read_int(text, pos + 4, 2);
    offset_minutes = sign * (oh * 60 + om);
    pos += 6;
  } else {
    throw ParseError("missing UTC designator in timestamp '" + std::string(text) + "'", pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters in timestamp '" + std::string(text) + "'", pos);

  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
  const std::int64_t seconds = days * 86400 + hour * 3600 + minute * 60 + second - offset_minutes * 60;
  return seconds * 1000 + millis;
}

std::string format_date(std::int64_t epoch_ms) {
  const Civil c = civil_from_days(floor_div(epoch_ms, kMillisPerDay));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02u", static_cast<long long>(c.year), c.month, c.day);
  return buf;
}

std::string format_time(std::int64_t epoch_ms) {
  const std::int64_t in_day = epoch_ms - floor_div(epoch_ms, kMillisPerDay) * kMillisPerDay;
  const std::int64_t secs = in_day / 1000;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld", static_cast<long long>(secs / 3600),
                static_cast<long long>(secs / 60 % 60), static_cast<long long>(secs % 60));
  return buf;
}

std::string format_iso8601(std::int64_t epoch_ms) { return format_date(epoch_ms) + "T" + format_time(epoch_ms) + "Z"; }

std::int64_t day_offset(std::int64_t t_ms, std::int64_t origin_ms) { return floor_div(t_ms - origin_ms, kMillisPerDay); }

}  // namespace qb
