// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent_cli/record.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <string_view>

namespace sqent::cli {

namespace {

constexpr std::string_view kNats = "_nats";

bool is_nats(std::string_view key) { return key.size() > kNats.size() && key.ends_with(kNats); }

std::string display_key(std::string_view key, const FormatOptions& options) {
    if (options.bits && is_nats(key)) {
        return std::string(key.substr(0, key.size() - kNats.size())) + "_bits";
    }
    return std::string(key);
}

Scalar converted(std::string_view key, const Scalar& value, const FormatOptions& options) {
    if (options.bits && is_nats(key)) {
        if (const double* d = std::get_if<double>(&value)) {
            return *d / std::numbers::ln2;
        }
    }
    return value;
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                static constexpr char hex[] = "0123456789abcdef";
                out += "\\u00";
                out += hex[(c >> 4) & 0xf];
                out += hex[c & 0xf];
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::string render(const Scalar& value, bool json) {
    return std::visit(
        [json](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (json && !std::isfinite(v)) {
                    return "null";
                }
                return format_number(v, json ? kJsonDigits : kTextDigits);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return json ? json_string(v) : v;
            }
        },
        value);
}

void write_text_section(std::ostream& out, std::string_view name, const std::vector<Field>& fields,
                        const FormatOptions& options) {
    if (fields.empty()) {
        return;
    }
    out << name << ":\n";
    for (const auto& [key, value] : fields) {
        out << "  " << display_key(key, options) << ": " << render(converted(key, value, options), false) << '\n';
    }
}

void write_json_section(std::ostream& out, std::string_view name, const std::vector<Field>& fields,
                        const FormatOptions& options, bool& first) {
    if (fields.empty()) {
        return;
    }
    out << (first ? "" : ",\n") << "  " << json_string(name) << ": {";
    first = false;
    bool first_field = true;
    for (const auto& [key, value] : fields) {
        out << (first_field ? "\n" : ",\n") << "    " << json_string(display_key(key, options)) << ": "
            << render(converted(key, value, options), true);
        first_field = false;
    }
    out << "\n  }";
}

void write_csv(std::ostream& out, const Table& table, const FormatOptions& options) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << display_key(table.columns[c], options);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << render(converted(table.columns[c], row[c], options), false);
        }
        out << '\n';
    }
}

void write_json_rows(std::ostream& out, const Table& table, const FormatOptions& options, std::string_view indent) {
    out << "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n" : "\n") << indent << "  {";
        const auto& row = table.rows[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? ", " : "") << json_string(display_key(table.columns[c], options)) << ": "
                << render(converted(table.columns[c], row[c], options), true);
        }
        out << "}";
    }
    out << (table.rows.empty() ? "]" : "\n" + std::string(indent) + "]");
}

} // namespace

std::string format_number(double value, int digits) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

void write_record(std::ostream& out, const Record& record, const FormatOptions& options) {
    if (!options.json) {
        out << "command: " << record.command << '\n';
        write_text_section(out, "parameters", record.parameters, options);
        write_text_section(out, "results", record.results, options);
        write_text_section(out, "oracle", record.oracle, options);
        write_text_section(out, "diagnostics", record.diagnostics, options);
        for (const auto& [name, m] : record.matrices) {
            out << name << " (" << m.rows() << "x" << m.cols() << ", re,im per entry):\n";
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                for (Eigen::Index j = 0; j < m.cols(); ++j) {
                    out << (j ? " " : "") << format_number(m(i, j).real(), kTextDigits) << ','
                        << format_number(m(i, j).imag(), kTextDigits);
                }
                out << '\n';
            }
        }
        for (const auto& [name, table] : record.tables) {
            out << name << ":\n";
            write_csv(out, table, options);
        }
        return;
    }

    out << "{\n  \"command\": " << json_string(record.command);
    bool first = false;
    write_json_section(out, "parameters", record.parameters, options, first);
    write_json_section(out, "results", record.results, options, first);
    write_json_section(out, "oracle", record.oracle, options, first);
    write_json_section(out, "diagnostics", record.diagnostics, options, first);
    if (!record.matrices.empty()) {
        out << ",\n  \"matrices\": {";
        for (std::size_t k = 0; k < record.matrices.size(); ++k) {
            const auto& [name, m] = record.matrices[k];
            out << (k ? ",\n" : "\n") << "    " << json_string(name) << ": {\"rows\": " << m.rows()
                << ", \"cols\": " << m.cols() << ", \"data\": [";
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                out << (i ? ",\n" : "\n") << "      ";
                for (Eigen::Index j = 0; j < m.cols(); ++j) {
                    out << (j ? ", " : "") << "{\"re\": " << render(m(i, j).real(), true)
                        << ", \"im\": " << render(m(i, j).imag(), true) << "}";
                }
            }
            out << "\n    ]}";
        }
        out << "\n  }";
    }
    if (!record.tables.empty()) {
        out << ",\n  \"tables\": {";
        for (std::size_t k = 0; k < record.tables.size(); ++k) {
            out << (k ? ",\n" : "\n") << "    " << json_string(record.tables[k].first) << ": ";
            write_json_rows(out, record.tables[k].second, options, "    ");
        }
        out << "\n  }";
    }
    out << "\n}\n";
}

void write_table(std::ostream& out, const Table& table, const FormatOptions& options) {
    if (options.json) {
        write_json_rows(out, table, options, "");
        out << '\n';
    } else {
        write_csv(out, table, options);
    }
}

} // namespace sqent::cli
