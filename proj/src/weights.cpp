// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/weights.hpp"

#include <cmath>

#include "wlsq/errors.hpp"

namespace wlsq {

Eigen::ArrayXd weight_powers(std::size_t m, double s) {
  Eigen::ArrayXd w(static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) w[static_cast<Eigen::Index>(k)] = std::pow(mode_weight(k), -s);
  return w;
}

long double folded_power_sum(std::size_t k, std::size_t N, std::size_t eta_begin,
                             std::size_t eta_end, long double s) {
  long double acc = 0.0L;
  for (std::size_t eta = eta_begin; eta < eta_end; ++eta)
    acc += std::pow(1.0L + static_cast<long double>(k + N * eta), -s);
  return acc;
}

long double power_sum(std::size_t begin, std::size_t end, long double s) {
  long double acc = 0.0L;
  for (std::size_t k = begin; k < end; ++k) acc += std::pow(1.0L + static_cast<long double>(k), -s);
  return acc;
}

CoefficientPrior::CoefficientPrior(double gamma, std::size_t P) : gamma_(gamma), P_(P) {
  if (P == 0) throw ConfigError("prior needs P >= 1");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be finite and >= 0");
  c_gamma_ld_ = 1.0L / power_sum(0, P, 2.0L * gamma);
  c_gamma_ = static_cast<double>(c_gamma_ld_);
}

double CoefficientPrior::variance(std::size_t k) const {
  return static_cast<double>(c_gamma_ld_ * std::pow(1.0L + static_cast<long double>(k), -2.0L * gamma_));
}

Eigen::ArrayXd CoefficientPrior::covariance_diagonal() const {
  Eigen::ArrayXd d(static_cast<Eigen::Index>(P_));
  for (std::size_t k = 0; k < P_; ++k) d[static_cast<Eigen::Index>(k)] = variance(k);
  return d;
}

}  // namespace wlsq
