// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <istream>
#include <map>
#include <string>

namespace wlsq::cli {

// Flat "key = value" file. '#' starts a comment; blank lines are ignored. Keys are the
// long flag names without dashes (n, mu, p, alpha, beta, gamma, sigma, seed, ...).
// Throws ConfigError with the line number on malformed input or a repeated key.
std::map<std::string, std::string> parse_config_stream(std::istream& in, const std::string& origin);
std::map<std::string, std::string> load_config_file(const std::string& path);

}  // namespace wlsq::cli
