#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "epf/series.hpp"

namespace epf {

/// Column names and delimiter of the hourly input file. Configurable so
/// that market data exports can be read without renaming headers.
struct CsvSchema {
    std::string timestamp = "timestamp";
    std::string price = "price";
    std::string load = "load";
    char delimiter = ',';

    bool operator==(const CsvSchema&) const = default;
};

/// A data row skipped during parsing, with its 1-based line number.
struct RejectedRow {
    std::size_t line = 0;
    std::string reason;
};

struct ParseResult {
    SeriesTable series;
    std::vector<RejectedRow> rejected;
};

/// Parses delimiter-separated hourly data with a header row. Rows whose
/// price does not parse are skipped and reported in `rejected`; a malformed
/// timestamp is a hard ParseError naming the line. An unparseable or empty
/// load becomes NaN (missing).
ParseResult parse_hourly_csv(std::istream& in, const CsvSchema& schema = {});

/// Inverse of parse_hourly_csv: values round-trip bit-exactly. Missing
/// loads are written as empty fields.
void write_series_csv(std::ostream& out, const SeriesTable& series,
                      const CsvSchema& schema = {});

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

/// Strict full-field double parse; throws ParseError.
double parse_double(std::string_view text, std::string_view what = "number");

std::vector<std::string> split_csv_line(std::string_view line, char delimiter);

} // namespace epf
