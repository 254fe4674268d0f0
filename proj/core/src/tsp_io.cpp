#include "edo/csv.hpp"
#include "edo/error.hpp"
#include "edo/tsp.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace edo::tsp {

namespace {

std::string upper(std::string_view s) {
    std::string out;
    for (char c : s) out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Maps the cities into [0,1]^2 with one scale for both axes when any coordinate is outside.
void rescale_into_unit_square(LoadedInstance& li) {
    auto& cities = li.instance.cities;
    if (cities.empty()) return;
    const bool inside = std::all_of(cities.begin(), cities.end(), [](const City& c) {
        return c.x >= 0.0 && c.x <= 1.0 && c.y >= 0.0 && c.y <= 1.0;
    });
    if (inside) return;
    double min_x = cities.front().x, max_x = min_x, min_y = cities.front().y, max_y = min_y;
    for (const auto& c : cities) {
        min_x = std::min(min_x, c.x);
        max_x = std::max(max_x, c.x);
        min_y = std::min(min_y, c.y);
        max_y = std::max(max_y, c.y);
    }
    const double scale = std::max(max_x - min_x, max_y - min_y);
    if (!(scale > 0.0)) throw ConfigurationError("instance has no spatial extent");
    for (auto& c : cities) {
        c.x = std::clamp((c.x - min_x) / scale, 0.0, 1.0);
        c.y = std::clamp((c.y - min_y) / scale, 0.0, 1.0);
    }
    li.scale = scale;
    li.offset_x = min_x;
    li.offset_y = min_y;
}

} // namespace

InstanceFormat parse_format(std::string_view name) {
    const auto s = upper(name);
    if (s == "TSPLIB" || s == "TSP") return InstanceFormat::Tsplib;
    if (s == "CSV") return InstanceFormat::Csv;
    throw ConfigurationError("unknown instance format '" + std::string(name) + "' (expected tsplib or csv)");
}

LoadedInstance read_tsplib(std::istream& in) {
    LoadedInstance li;
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> dimension;
    std::optional<std::string> edge_type;
    bool in_coords = false;
    std::size_t coords_line = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (upper(t) == "EOF") break;

        if (in_coords) {
            std::istringstream ss(t);
            std::string id_text, x_text, y_text, extra;
            if (!(ss >> id_text >> x_text >> y_text) || (ss >> extra)) {
                // A new keyword section ends the coordinates.
                if (std::isalpha(static_cast<unsigned char>(t.front()))) {
                    in_coords = false;
                } else {
                    throw ParseError("malformed NODE_COORD_SECTION entry", lineno);
                }
            } else {
                li.instance.cities.push_back({parse_double(x_text, lineno), parse_double(y_text, lineno)});
                continue;
            }
        }

        const auto colon = t.find(':');
        const std::string key = upper(trim(t.substr(0, colon)));
        const std::string value = colon == std::string::npos ? std::string{} : trim(t.substr(colon + 1));
        if (key == "NODE_COORD_SECTION") {
            if (!edge_type) throw UnsupportedFormatError("TSPLIB: EDGE_WEIGHT_TYPE must precede NODE_COORD_SECTION");
            in_coords = true;
            coords_line = lineno;
        } else if (key == "NAME") {
            li.name = value;
        } else if (key == "TYPE") {
            if (upper(value) != "TSP") throw UnsupportedFormatError("TSPLIB: unsupported TYPE " + value);
        } else if (key == "DIMENSION") {
            const double v = parse_double(value, lineno);
            if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) {
                throw ParseError("invalid DIMENSION", lineno);
            }
            dimension = static_cast<std::size_t>(v);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (upper(value) != "EUC_2D") {
                throw UnsupportedFormatError("TSPLIB: unsupported EDGE_WEIGHT_TYPE " + value + " (only EUC_2D)");
            }
            edge_type = value;
        } else if (key == "COMMENT" || key == "EDGE_WEIGHT_FORMAT" || key == "DISPLAY_DATA_TYPE") {
            // informational
        } else {
            throw ParseError("unexpected TSPLIB entry '" + key + "'", lineno);
        }
    }

    if (!edge_type) throw UnsupportedFormatError("TSPLIB: missing EDGE_WEIGHT_TYPE");
    if (coords_line == 0) throw ParseError("TSPLIB: missing NODE_COORD_SECTION", lineno);
    if (dimension && *dimension != li.instance.size()) {
        throw ParseError("TSPLIB: DIMENSION " + std::to_string(*dimension) + " but " +
                             std::to_string(li.instance.size()) + " coordinates",
                         coords_line);
    }
    rescale_into_unit_square(li);
    return li;
}

LoadedInstance read_csv_instance(std::istream& in) {
    const CsvTable table = read_csv(in);
    if (table.header.size() != 2 || table.header[0] != "x" || table.header[1] != "y") {
        throw ParseError("CSV instance header must be 'x,y'", 1);
    }
    LoadedInstance li;
    for (const auto& row : table.rows) {
        if (row.cells.size() != 2) {
            throw ParseError("expected 2 coordinates, got " + std::to_string(row.cells.size()), row.line);
        }
        li.instance.cities.push_back({parse_double(row.cells[0], row.line), parse_double(row.cells[1], row.line)});
    }
    rescale_into_unit_square(li);
    return li;
}

LoadedInstance read_instance(const std::string& path, InstanceFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    LoadedInstance li = format == InstanceFormat::Tsplib ? read_tsplib(in) : read_csv_instance(in);
    if (li.name.empty()) li.name = std::filesystem::path(path).stem().string();

    const std::string sidecar = path + ".opt";
    if (std::filesystem::exists(sidecar)) {
        const CsvTable t = read_csv_file(sidecar);
        const std::size_t col = t.column("opt_length");
        if (col == CsvTable::npos || t.rows.empty()) throw ParseError("sidecar needs an opt_length value", 1);
        const auto& row = t.rows.front();
        if (col >= row.cells.size()) throw ParseError("missing opt_length value", row.line);
        li.opt_length = parse_double(row.cells[col], row.line) / li.scale;
    }
    return li;
}

void write_tsplib(std::ostream& out, const TspInstance& inst, std::string_view name) {
    out << "NAME : " << name << '\n'
        << "TYPE : TSP\n"
        << "DIMENSION : " << inst.size() << '\n'
        << "EDGE_WEIGHT_TYPE : EUC_2D\n"
        << "NODE_COORD_SECTION\n";
    for (std::size_t i = 0; i < inst.size(); ++i) {
        out << (i + 1) << ' ' << format_double(inst.cities[i].x) << ' ' << format_double(inst.cities[i].y) << '\n';
    }
    out << "EOF\n";
}

void write_csv_instance(std::ostream& out, const TspInstance& inst) {
    out << "x,y\n";
    for (const auto& c : inst.cities) out << format_double(c.x) << ',' << format_double(c.y) << '\n';
}

void write_instance(const std::string& path, const TspInstance& inst, InstanceFormat format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    if (format == InstanceFormat::Tsplib) {
        write_tsplib(out, inst, std::filesystem::path(path).stem().string());
    } else {
        write_csv_instance(out, inst);
    }
}

void write_opt_sidecar(const std::string& instance_path, double opt_length) {
    std::ofstream out(instance_path + ".opt");
    if (!out) throw Error("cannot open " + instance_path + ".opt for writing");
    out << "opt_length\n" << format_double(opt_length) << '\n';
}

} // namespace edo::tsp
