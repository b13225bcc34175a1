// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "wlsq/config.hpp"

namespace wlsq {

struct NoiseError {
  double mean = 0.0;
  double variance = 0.0;
};

struct TheoryError {
  double e_clean = 0.0;
  double e_noise = 0.0;
  double var_noise = 0.0;
  Regime regime = Regime::Under;

  double total() const noexcept { return e_clean + e_noise; }
};

// SVD of Lambda_N^{alpha} Psi_{[N] \ [p]} and the two congruences built on it.
struct UnderparamSpectral {
  Eigen::MatrixXcd U;          // N x (N-p)
  Eigen::VectorXd Sigma;       // N-p, descending
  Eigen::MatrixXcd V;          // (N-p) x (N-p)
  Eigen::MatrixXcd e_tilde;    // U^* Lambda_N^{2 alpha} U
  Eigen::MatrixXcd e_hat;      // V^* diag(c_gamma t_{p+k}^{-2 gamma} + chi_{p+k}) V
  Eigen::VectorXd chi;         // length N, includes c_gamma
};

// chi_m = c_gamma * sum_{eta=1}^{mu-1} t_{m + N eta}^{-2 gamma}, m < N.
Eigen::VectorXd aliasing_mass(const ExperimentConfig& config);

UnderparamSpectral underparam_spectral(const ExperimentConfig& config);

// Singular values of Lambda_N^{alpha} Psi_{[N] \ [p]}, descending.
Eigen::VectorXd weighted_tail_singular_values(std::size_t N, std::size_t p, double alpha);

// Noise-free error, p = nu N with N <= p <= P.
double error_clean_over(const ExperimentConfig& config);
// Noise-free error, p <= N.
double error_clean_under(const ExperimentConfig& config);

// Closed forms for special parameter choices, evaluated independently of the general paths.
// alpha = beta = 0, p a multiple of N:  1 + N/p - (2N/p) c_gamma sum_{j<p} t_j^{-2 gamma}
double error_clean_unweighted_over(const ExperimentConfig& config);
// p = N:  2 c_gamma sum_{j=N}^{P-1} t_j^{-2 gamma}
double error_clean_at_threshold(const ExperimentConfig& config);

NoiseError error_noise_over(const ExperimentConfig& config);
// Requires N/2 < p <= N.
NoiseError error_noise_under(const ExperimentConfig& config);

// Dispatches on the regime. p == N goes through the overparameterized formulas; sigma == 0
// short-circuits the noise terms to zero.
TheoryError evaluate_theory(const ExperimentConfig& config);

}  // namespace wlsq
