// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace wlsq {

enum class Regime { Under, FormallyDetermined, Over };

std::string_view to_string(Regime r) noexcept;

// All scalar knobs of one experiment. The regime is derived from (p, N).
//   N  number of samples on the grid x_j = 2 pi j / N
//   P  width of the true model, a multiple of N
//   p  width of the learned model
struct ExperimentConfig {
  std::size_t N = 16;
  std::size_t P = 32;
  std::size_t p = 16;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;

  std::size_t mu() const noexcept { return N ? P / N : 0; }
  // Only meaningful when p is a multiple of N.
  std::size_t nu() const noexcept { return N ? p / N : 0; }

  Regime regime() const noexcept;
  bool overparameterized() const noexcept { return p > N; }

  // Throws ConfigError naming the violated constraint.
  void validate() const;
};

// Convenience for the (N, mu, p) parameterization used throughout.
ExperimentConfig make_config(std::size_t N, std::size_t mu, std::size_t p, double alpha = 0.0,
                             double beta = 0.0, double gamma = 0.0, double sigma = 0.0,
                             std::uint64_t seed = 0);

}  // namespace wlsq
