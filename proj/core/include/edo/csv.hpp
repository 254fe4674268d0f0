#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edo {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

void write_csv_row(std::ostream& out, std::span<const std::string> cells);
void write_csv_row(std::ostream& out, std::span<const double> cells);

struct CsvRow {
    std::vector<std::string> cells;
    std::size_t line = 0;
};

/// Minimal comma-separated reader: first non-empty line is the header, no quoting.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    /// Column index of `name`, or npos.
    std::size_t column(std::string_view name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// Throws ParseError carrying `line` when `text` is not a complete floating-point number.
double parse_double(std::string_view text, std::size_t line);

} // namespace edo
