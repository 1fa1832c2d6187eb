// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <sqent/density_matrix.hpp>

namespace sqent::cli {

using Scalar = std::variant<double, std::int64_t, bool, std::string>;
using Field = std::pair<std::string, Scalar>;

struct Table {
    std::vector<std::string> columns{};
    std::vector<std::vector<Scalar>> rows{};
};

/// One subcommand result. Sections keep insertion order.
struct Record {
    std::string command;
    std::vector<Field> parameters{};
    std::vector<Field> results{};
    std::vector<Field> oracle{};
    std::vector<Field> diagnostics{};
    std::vector<std::pair<std::string, ComplexMatrix>> matrices{};
    std::vector<std::pair<std::string, Table>> tables{};
};

struct FormatOptions {
    bool json = false;
    /// Rename *_nats fields to *_bits and divide by ln 2.
    bool bits = false;
};

inline constexpr int kTextDigits = 9;
inline constexpr int kJsonDigits = 17;

/// Shortest %g-style rendering at `digits` significant digits; "nan", "inf",
/// "-inf" for non-finite values and "0" for negative zero.
[[nodiscard]] std::string format_number(double value, int digits);

void write_record(std::ostream& out, const Record& record, const FormatOptions& options);

/// Bare table as CSV (header plus rows), or as a JSON array of row objects.
void write_table(std::ostream& out, const Table& table, const FormatOptions& options);

} // namespace sqent::cli
