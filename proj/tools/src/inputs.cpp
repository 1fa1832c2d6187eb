// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent_cli/inputs.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

namespace sqent::cli {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) {
            return cells;
        }
        start = comma + 1;
    }
}

double parse_double(std::string_view cell, int line_no) {
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    double value = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ValidationError("line " + std::to_string(line_no) + ": '" + std::string(cell) + "' is not a number");
    }
    return value;
}

/// Rows of numbers under an exact header.
std::vector<std::vector<double>> parse_table(std::istream& in, const std::vector<std::string_view>& header) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(line);
        if (!have_header) {
            if (cells != header) {
                std::string expected;
                for (std::size_t i = 0; i < header.size(); ++i) {
                    expected += (i ? "," : "") + std::string(header[i]);
                }
                throw ValidationError("line " + std::to_string(line_no) + ": expected header '" + expected + "'");
            }
            have_header = true;
            continue;
        }
        if (cells.size() != header.size()) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                                  " columns, found " + std::to_string(cells.size()));
        }
        std::vector<double> row;
        for (auto cell : cells) {
            row.push_back(parse_double(cell, line_no));
        }
        rows.push_back(std::move(row));
    }
    if (!have_header) {
        throw ValidationError("input is empty; a header row is required");
    }
    if (rows.empty()) {
        throw ValidationError("input has a header but no data rows");
    }
    return rows;
}

Complex parse_entry(const json& e) {
    if (e.is_number()) {
        return {e.get<double>(), 0.0};
    }
    if (e.is_object() && e.contains("re")) {
        const double im = e.contains("im") ? e.at("im").get<double>() : 0.0;
        if (e.size() != (e.contains("im") ? 2u : 1u)) {
            throw ValidationError("matrix entry objects take only 're' and 'im'");
        }
        return {e.at("re").get<double>(), im};
    }
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        return {e[0].get<double>(), e[1].get<double>()};
    }
    throw ValidationError("matrix entry must be {\"re\": x, \"im\": y}, [x, y] or a number; got " + e.dump());
}

ComplexMatrix parse_matrix(const json& doc, const char* name, int modes) {
    if (!doc.contains(name) || !doc.at(name).is_array()) {
        throw ValidationError(std::string("'") + name + "' must be an array");
    }
    const json& a = doc.at(name);
    std::vector<const json*> entries;
    const auto rows = static_cast<std::size_t>(modes);
    // M rows of M entries; a flat list has M*M entries, which differs unless
    // M = 1, where a pair [re, im] has the wrong row length.
    const bool nested = a.size() == rows && std::all_of(a.begin(), a.end(), [rows](const json& row) {
                            return row.is_array() && row.size() == rows;
                        });
    if (nested) {
        for (const json& row : a) {
            for (const json& e : row) {
                entries.push_back(&e);
            }
        }
    } else {
        for (const json& e : a) {
            entries.push_back(&e);
        }
    }
    if (entries.size() != static_cast<std::size_t>(modes) * static_cast<std::size_t>(modes)) {
        throw ValidationError(std::string("'") + name + "' needs " + std::to_string(modes * modes) +
                              " entries, found " + std::to_string(entries.size()));
    }
    ComplexMatrix m(modes, modes);
    for (int i = 0; i < modes; ++i) {
        for (int j = 0; j < modes; ++j) {
            m(i, j) = parse_entry(*entries[static_cast<std::size_t>(i * modes + j)]);
        }
    }
    return m;
}

} // namespace

modes::BogoliubovMap parse_bogoliubov_map(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("modes") || !doc.at("modes").is_number_integer()) {
            throw ValidationError("'modes' must be a positive integer");
        }
        const int modes = doc.at("modes").get<int>();
        if (modes <= 0) {
            throw ValidationError("'modes' must be a positive integer");
        }
        return modes::BogoliubovMap(parse_matrix(doc, "alpha", modes), parse_matrix(doc, "beta", modes));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad Bogoliubov map: ") + e.what());
    }
}

std::vector<modes::CondensatePair> parse_condensate_pairs(std::istream& in) {
    std::vector<modes::CondensatePair> pairs;
    for (const auto& row : parse_table(in, {"u", "v"})) {
        pairs.push_back({row[0], row[1]});
    }
    return pairs;
}

std::vector<fermi::Vec3> parse_positions(std::istream& in) {
    std::vector<fermi::Vec3> positions;
    for (const auto& row : parse_table(in, {"x", "y", "z"})) {
        positions.push_back({row[0], row[1], row[2]});
    }
    return positions;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace sqent::cli
