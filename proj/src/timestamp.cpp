#include "epf/timestamp.hpp"

#include <charconv>
#include <cstdio>

#include "epf/error.hpp"

namespace epf {

namespace {

int parse_int_field(std::string_view text, std::size_t pos, std::size_t len,
                    std::string_view what) {
    if (pos + len > text.size())
        throw ParseError("timestamp too short: '" + std::string(text) + "'");
    int value = 0;
    const char* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc{} || ptr != first + len)
        throw ParseError("bad " + std::string(what) + " in timestamp '" +
                         std::string(text) + "'");
    return value;
}

} // namespace

std::chrono::sys_days make_date(int year, int month, int day) {
    using namespace std::chrono;
    const year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                             std::chrono::day{static_cast<unsigned>(day)}};
    if (!ymd.ok())
        throw ParseError("invalid calendar date " + std::to_string(year) + "-" +
                         std::to_string(month) + "-" + std::to_string(day));
    return sys_days{ymd};
}

Timestamp parse_timestamp(std::string_view text) {
    // YYYY-MM-DD[T ]HH:MM
    if (text.size() < 16 || text[4] != '-' || text[7] != '-' ||
        (text[10] != 'T' && text[10] != ' ') || text[13] != ':')
        throw ParseError("unrecognized timestamp format: '" + std::string(text) + "'");
    const int y = parse_int_field(text, 0, 4, "year");
    const int mo = parse_int_field(text, 5, 2, "month");
    const int d = parse_int_field(text, 8, 2, "day");
    const int h = parse_int_field(text, 11, 2, "hour");
    parse_int_field(text, 14, 2, "minute"); // validated, then dropped
    if (h < 0 || h > 23)
        throw ParseError("hour out of range in timestamp '" + std::string(text) + "'");
    return Timestamp{make_date(y, mo, d), h};
}

std::string format_timestamp(const Timestamp& ts) {
    using namespace std::chrono;
    const year_month_day ymd{ts.day};
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:00", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  ts.hour);
    return std::string(buf);
}

int year_of(const Timestamp& ts) {
    return static_cast<int>(std::chrono::year_month_day{ts.day}.year());
}

int month_of(const Timestamp& ts) {
    return static_cast<int>(static_cast<unsigned>(std::chrono::year_month_day{ts.day}.month()));
}

int day_of_month(const Timestamp& ts) {
    return static_cast<int>(static_cast<unsigned>(std::chrono::year_month_day{ts.day}.day()));
}

int day_of_week(const Timestamp& ts) {
    return static_cast<int>(std::chrono::weekday{ts.day}.iso_encoding());
}

int day_of_year(const Timestamp& ts) {
    using namespace std::chrono;
    const year_month_day ymd{ts.day};
    const sys_days jan1{ymd.year() / January / 1};
    return static_cast<int>((ts.day - jan1).count()) + 1;
}

} // namespace epf
