// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <string>
#include <vector>

#include <sqent/fermi_gas.hpp>
#include <sqent/mode_transform.hpp>

namespace sqent::cli {

/// JSON document {"modes": M, "alpha": [...], "beta": [...]}. Each matrix is
/// a row-major list of M*M entries (or M rows of M entries); an entry is
/// {"re": x, "im": y}, a pair [x, y] or a plain real number.
[[nodiscard]] modes::BogoliubovMap parse_bogoliubov_map(std::istream& in);

/// Delimited text with header "u,v".
[[nodiscard]] std::vector<modes::CondensatePair> parse_condensate_pairs(std::istream& in);

/// Delimited text with header "x,y,z".
[[nodiscard]] std::vector<fermi::Vec3> parse_positions(std::istream& in);

/// Opens `path` for reading; throws sqent::ValidationError when it cannot.
[[nodiscard]] std::string read_file(const std::string& path);

} // namespace sqent::cli
