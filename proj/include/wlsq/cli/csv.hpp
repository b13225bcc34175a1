// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wlsq::cli {

// Shortest round-trip decimal, '.' separator, no grouping, independent of locale.
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);

// Quotes a field only if it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Each line is prefixed with "# ".
void write_provenance(std::ostream& out, const std::vector<std::string>& lines);

}  // namespace wlsq::cli
