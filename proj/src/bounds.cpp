// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/bounds.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wlsq/errors.hpp"
#include "wlsq/weights.hpp"

namespace wlsq {

BoundInputs bound_inputs(const ExperimentConfig& c, double zeta) {
  c.validate();
  BoundInputs in;
  in.e_delta_weighted =
      static_cast<double>(static_cast<long double>(c.sigma) * c.sigma * power_sum(0, c.N, 2.0L * c.alpha));
  const long double cg = 1.0L / power_sum(0, c.P, 2.0L * c.gamma);
  in.e_theta_weighted =
      static_cast<double>(cg * power_sum(0, c.p, 2.0L * c.beta + 2.0L * c.gamma));
  in.alpha_hat = c.p > c.N ? c.alpha + 0.5 : c.alpha;
  in.zeta = zeta;
  return in;
}

BoundResult minimize_two_term_bound(const TwoTermBound& b, std::size_t p_max) {
  if (p_max == 0) throw ConfigError("bound: p range is empty");
  if (b.delta_exp == b.theta_exp)
    throw ConfigError("bound: the two exponents coincide, so the minimizer is undefined");

  BoundResult r;
  r.bound = b;
  const double d = b.delta_exp, t = b.theta_exp;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  if (b.delta_coef > 0.0 && b.theta_coef > 0.0) {
    r.scaling_p = std::pow(b.theta_coef / b.delta_coef, 1.0 / (d - t));
    r.optimized_bound = std::pow(b.theta_coef, d / (d - t)) * std::pow(b.delta_coef, -t / (d - t));
  } else {
    r.scaling_p = nan;
    r.optimized_bound = nan;
  }

  // Effective exponents of the terms that are actually present.
  const bool has_d = b.delta_coef > 0.0, has_t = b.theta_coef > 0.0;
  const bool never_up = (!has_d || d <= 0.0) && (!has_t || t <= 0.0);
  const bool never_down = (!has_d || d >= 0.0) && (!has_t || t >= 0.0);

  const double pmax = static_cast<double>(p_max);
  if (never_up) {
    r.monotone = true;
    r.continuous_minimizer = nan;
    r.p_star = p_max;
  } else if (never_down) {
    r.continuous_minimizer = nan;
    r.p_star = 1;
  } else {
    // d/dq: delta_coef d q^{d-1} + theta_coef t q^{t-1} = 0
    const double q = std::pow(-b.theta_coef * t / (b.delta_coef * d), 1.0 / (d - t));
    r.continuous_minimizer = q;
    const double clamped = std::min(std::max(q, 1.0), pmax);
    const double lo = std::floor(clamped), hi = std::ceil(clamped);
    r.p_star = static_cast<std::size_t>(b(hi) < b(lo) ? hi : lo);
  }
  r.bound_at_p_star = b(static_cast<double>(r.p_star));
  return r;
}

BoundResult bound_noisy_training(const BoundInputs& in, double beta, std::size_t P) {
  if (beta == in.alpha_hat)
    throw ConfigError("bound_noisy_training: beta equals alpha_hat, the optimal-p exponent is undefined");
  return minimize_two_term_bound({in.e_delta_weighted, -2.0 * in.alpha_hat, in.e_theta_weighted, -2.0 * beta}, P);
}

BoundResult bound_noisy_training(const ExperimentConfig& c) {
  return bound_noisy_training(bound_inputs(c), c.beta, c.P);
}

BoundResult bound_general_feature(const BoundInputs& in, double alpha, double beta, std::size_t P) {
  if (!(in.zeta >= 0.0)) throw ConfigError("bound_general_feature: zeta must be >= 0");
  if (in.zeta + beta - alpha == 0.0)
    throw ConfigError("bound_general_feature: zeta + beta - alpha = 0, the optimal-p exponent is undefined");
  return minimize_two_term_bound(
      {in.e_delta_weighted, 2.0 * (in.zeta - alpha), in.e_theta_weighted, -2.0 * beta}, P);
}

BoundResult bound_general_feature(const ExperimentConfig& c, double zeta) {
  return bound_general_feature(bound_inputs(c, zeta), c.alpha, c.beta, c.P);
}

}  // namespace wlsq
