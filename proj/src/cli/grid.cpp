// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/cli/grid.hpp"

#include <charconv>
#include <cmath>

#include "wlsq/errors.hpp"

namespace wlsq::cli {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

constexpr std::size_t kMaxGridPoints = 1'000'000;

}  // namespace

double parse_number(std::string_view text, std::string_view what) {
  text = strip(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ConfigError("invalid number '" + std::string(text) + "' for " + std::string(what));
  return v;
}

std::vector<double> parse_grid(std::string_view spec) {
  spec = strip(spec);
  if (spec.empty()) throw ConfigError("grid: empty specification");
  std::vector<double> values;

  if (spec.find(':') != std::string_view::npos) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos)
      throw ConfigError("grid: expected start:stop:step, got '" + std::string(spec) + "'");
    const double start = parse_number(spec.substr(0, c1), "grid start");
    const double stop = parse_number(spec.substr(c1 + 1, c2 - c1 - 1), "grid stop");
    const double step = parse_number(spec.substr(c2 + 1), "grid step");
    if (!(step > 0.0)) throw ConfigError("grid: step must be > 0");
    // Index-based so long grids do not accumulate drift; the stop is exclusive.
    for (std::size_t i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (v >= stop - 1e-9 * step) break;
      if (values.size() >= kMaxGridPoints) throw ConfigError("grid: too many points");
      values.push_back(v);
    }
  } else {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      const auto comma = spec.find(',', pos);
      const auto item = spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos);
      values.push_back(parse_number(item, "grid value"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (values.empty()) throw ConfigError("grid '" + std::string(spec) + "' has no points");
  return values;
}

}  // namespace wlsq::cli
