#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qb {

inline constexpr std::int64_t kMillisPerSecond = 1000;
inline constexpr std::int64_t kMillisPerDay = 86'400'000;

/// Parses `YYYY-MM-DDTHH:MM:SS[.fff](Z|+HH:MM|-HH:MM)` into epoch milliseconds.
std::int64_t parse_iso8601_ms(std::string_view text);

/// Formats epoch milliseconds as `YYYY-MM-DDTHH:MM:SSZ` (UTC, milliseconds dropped).
std::string format_iso8601(std::int64_t epoch_ms);

/// `YYYY-MM-DD` and `HH:MM:SS` parts in UTC.
std::string format_date(std::int64_t epoch_ms);
std::string format_time(std::int64_t epoch_ms);

/// floor((t - origin) / 1 day) for any sign.
std::int64_t day_offset(std::int64_t t_ms, std::int64_t origin_ms);

}  // namespace qb
