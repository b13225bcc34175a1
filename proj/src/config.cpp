// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/config.hpp"

#include <cmath>
#include <string>

#include "wlsq/errors.hpp"

namespace wlsq {

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Under:
      return "under";
    case Regime::FormallyDetermined:
      return "determined";
    case Regime::Over:
      return "over";
  }
  return "unknown";
}

Regime ExperimentConfig::regime() const noexcept {
  if (p > N) return Regime::Over;
  if (p < N) return Regime::Under;
  return Regime::FormallyDetermined;
}

void ExperimentConfig::validate() const {
  if (N == 0) throw ConfigError("N must be positive");
  if (P == 0) throw ConfigError("P must be positive");
  if (P % N != 0)
    throw ConfigError("P = " + std::to_string(P) + " is not a multiple of N = " +
                      std::to_string(N) + " (require P = mu*N)");
  if (p == 0 || p > P)
    throw ConfigError("p = " + std::to_string(p) + " outside 1 <= p <= P = " + std::to_string(P));
  if (p > N && p % N != 0)
    throw ConfigError("p = " + std::to_string(p) +
                      " is neither <= N (underparameterized) nor a multiple of N = " +
                      std::to_string(N) + " (overparameterized, p = nu*N)");
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
      !std::isfinite(sigma))
    throw ConfigError("alpha, beta, gamma and sigma must be finite");
  if (gamma < 0.0) throw ConfigError("gamma must be >= 0");
  if (sigma < 0.0) throw ConfigError("sigma must be >= 0");
}

ExperimentConfig make_config(std::size_t N, std::size_t mu, std::size_t p, double alpha,
                             double beta, double gamma, double sigma, std::uint64_t seed) {
  ExperimentConfig c;
  c.N = N;
  c.P = mu * N;
  c.p = p;
  c.alpha = alpha;
  c.beta = beta;
  c.gamma = gamma;
  c.sigma = sigma;
  c.seed = seed;
  return c;
}

}  // namespace wlsq
