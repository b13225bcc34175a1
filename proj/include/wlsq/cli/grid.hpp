// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wlsq::cli {

// "start:stop:step" (stop exclusive, so 8:256:8 has 31 points) or "a,b,c".
std::vector<double> parse_grid(std::string_view spec);

// Strict decimal parse of one number; throws ConfigError naming `what`.
double parse_number(std::string_view text, std::string_view what);

}  // namespace wlsq::cli
