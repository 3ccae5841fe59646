#include "epf/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "epf/error.hpp"

namespace epf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void strip_bom(std::string& s) {
    if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF &&
        static_cast<unsigned char>(s[1]) == 0xBB && static_cast<unsigned char>(s[2]) == 0xBF)
        s.erase(0, 3);
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        const char* role) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw SchemaError(std::string("missing ") + role + " column '" + name + "' in header");
}

} // namespace

std::vector<std::string> split_csv_line(std::string_view line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (char c : line) {
        if (c == '"') {
            in_quotes = !in_quotes;
        } else if (c == delimiter && !in_quotes) {
            fields.emplace_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.emplace_back(trim(current));
    return fields;
}

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw IoError("to_chars failed");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::string_view what) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("cannot parse " + std::string(what) + " from '" +
                         std::string(text) + "'");
    return value;
}

ParseResult parse_hourly_csv(std::istream& in, const CsvSchema& schema) {
    std::string line;
    if (!std::getline(in, line)) throw EmptyInputError("empty input: no header row");
    strip_bom(line);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_csv_line(line, schema.delimiter);
    const std::size_t ts_col = find_column(header, schema.timestamp, "timestamp");
    const std::size_t price_col = find_column(header, schema.price, "price");
    const std::size_t load_col = find_column(header, schema.load, "load");

    std::vector<HourlyObservation> obs;
    std::vector<RejectedRow> rejected;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line, schema.delimiter);
        const std::size_t need = std::max({ts_col, price_col, load_col}) + 1;
        if (fields.size() < need)
            throw ParseError("line " + std::to_string(line_no) + ": expected at least " +
                             std::to_string(need) + " fields, got " +
                             std::to_string(fields.size()));

        HourlyObservation o;
        try {
            o.time = parse_timestamp(fields[ts_col]);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        try {
            o.price = parse_double(fields[price_col], "price");
        } catch (const ParseError& e) {
            rejected.push_back({line_no, e.what()});
            continue;
        }
        if (!fields[load_col].empty()) {
            try {
                o.load = parse_double(fields[load_col], "load");
            } catch (const ParseError&) {
                // missing load is tolerable; price is what we forecast
            }
        }
        obs.push_back(o);
    }
    if (obs.empty() && rejected.empty())
        throw EmptyInputError("empty input: no data rows after header");
    return ParseResult{SeriesTable::from_observations(std::move(obs)), std::move(rejected)};
}

void write_series_csv(std::ostream& out, const SeriesTable& series, const CsvSchema& schema) {
    const char d = schema.delimiter;
    out << schema.timestamp << d << schema.price << d << schema.load << '\n';
    for (const auto& o : series) {
        out << format_timestamp(o.time) << d << format_double(o.price) << d;
        if (o.has_load()) out << format_double(o.load);
        out << '\n';
    }
}

} // namespace epf
