#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace tweetsent {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

/// RFC-3339 with `Z` or `+hh:mm` offset; fractional seconds are truncated.
/// A bare `YYYY-MM-DD` is midnight UTC. Rejects years outside [1970, 2100).
std::optional<Timestamp> parse_timestamp(std::string_view s);

/// `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_timestamp(Timestamp t);

std::optional<Date> parse_date(std::string_view s);
std::string format_date(Date d);

/// Calendar day of `t` after shifting by `utc_offset`.
inline Date day_of(Timestamp t, std::chrono::minutes utc_offset = {}) {
    return std::chrono::floor<std::chrono::days>(t + utc_offset);
}

}  // namespace tweetsent
