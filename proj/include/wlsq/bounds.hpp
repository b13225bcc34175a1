// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cmath>
#include <cstddef>

#include "wlsq/config.hpp"

namespace wlsq {

struct BoundInputs {
  double e_delta_weighted = 0.0;  // sigma^2 sum_{k<N} t_k^{-2 alpha}
  double e_theta_weighted = 0.0;  // c_gamma sum_{k<p} t_k^{-2 beta - 2 gamma}, at the config's p
  double alpha_hat = 0.0;         // alpha + 1/2 (p > N) or alpha (p <= N)
  double zeta = 0.0;
};

BoundInputs bound_inputs(const ExperimentConfig& config, double zeta = 0.0);

// q -> delta_coef * q^delta_exp + theta_coef * q^theta_exp, constant fixed to 1.
struct TwoTermBound {
  double delta_coef = 0.0;
  double delta_exp = 0.0;
  double theta_coef = 0.0;
  double theta_exp = 0.0;

  double operator()(double q) const {
    return delta_coef * std::pow(q, delta_exp) + theta_coef * std::pow(q, theta_exp);
  }
};

struct BoundResult {
  TwoTermBound bound;
  std::size_t p_star = 1;
  // Both exponents <= 0: the bound never increases with p and p_star = P.
  bool monotone = false;
  // Stationary point of the bound over the reals (NaN when there is none).
  double continuous_minimizer = 0.0;
  // (E_theta / E_delta)^{1/(d - t)} with d, t the delta and theta exponents: the
  // leading-order scaling, which drops the exponent prefactors of the exact minimizer.
  double scaling_p = 0.0;
  // E_theta^{d/(d-t)} E_delta^{-t/(d-t)} with d, t the two exponents.
  double optimized_bound = 0.0;
  double bound_at_p_star = 0.0;
};

// Minimizes a two-term bound over integers in [1, p_max].
BoundResult minimize_two_term_bound(const TwoTermBound& b, std::size_t p_max);

// p^{-2 alpha_hat} E_delta + p^{-2 beta} E_theta
BoundResult bound_noisy_training(const ExperimentConfig& config);
BoundResult bound_noisy_training(const BoundInputs& in, double beta, std::size_t P);

// p^{2 (zeta - alpha)} E_delta + p^{-2 beta} E_theta
BoundResult bound_general_feature(const ExperimentConfig& config, double zeta);
BoundResult bound_general_feature(const BoundInputs& in, double alpha, double beta, std::size_t P);

}  // namespace wlsq
