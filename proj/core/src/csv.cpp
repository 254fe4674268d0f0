#include "edo/csv.hpp"

#include "edo/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace edo {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_csv_row(std::ostream& out, std::span<const std::string> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

void write_csv_row(std::ostream& out, std::span<const double> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << format_double(cells[i]);
    }
    out << '\n';
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return npos;
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty()) continue;
        if (!have_header) {
            table.header = split(t);
            have_header = true;
            continue;
        }
        table.rows.push_back(CsvRow{split(t), lineno});
    }
    if (!have_header) throw ParseError("empty CSV input", lineno == 0 ? 1 : lineno);
    return table;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_csv(in);
}

double parse_double(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text == "nan") return std::nan("");
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != last) {
        throw ParseError("invalid number '" + std::string(text) + "'", line);
    }
    return v;
}

} // namespace edo
