#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace epf {

/// Calendar date plus hour of day, in local market time. No timezone
/// handling: timestamps are taken as given.
struct Timestamp {
    std::chrono::sys_days day{};
    int hour = 0; // 0..23

    auto operator<=>(const Timestamp&) const = default;

    Timestamp prev_day() const { return {day - std::chrono::days{1}, hour}; }

    /// Hours since the civil epoch; unique integer key per hour.
    std::int64_t hour_key() const {
        return static_cast<std::int64_t>(day.time_since_epoch().count()) * 24 + hour;
    }
};

/// Accepts `YYYY-MM-DDTHH:MM` and `YYYY-MM-DD HH:MM`; minutes are parsed
/// and discarded (the data is hourly). Throws ParseError on anything else.
Timestamp parse_timestamp(std::string_view text);

/// Formats as `YYYY-MM-DDTHH:MM` with minutes fixed at 00.
std::string format_timestamp(const Timestamp& ts);

std::chrono::sys_days make_date(int year, int month, int day);

int year_of(const Timestamp& ts);
int month_of(const Timestamp& ts);
int day_of_month(const Timestamp& ts);
int day_of_week(const Timestamp& ts); // Monday = 1 .. Sunday = 7
int day_of_year(const Timestamp& ts); // 1..366

} // namespace epf
