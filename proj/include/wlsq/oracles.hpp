// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "wlsq/config.hpp"
#include "wlsq/feature_matrix.hpp"
#include "wlsq/weights.hpp"

namespace wlsq {

// Dense reference evaluations. They form every matrix explicitly and use a complete
// orthogonal decomposition for pseudoinverses, so they share no code path with the
// estimator or the closed forms.
inline constexpr std::size_t kOracleMaxN = 64;

// tr(K) + P_{alpha,beta} + Q_{alpha,beta} of the noise-free error.
double trace_oracle_clean(const FeatureMatrix& psi, const WeightScheme& weights,
                          const CoefficientPrior& prior, std::size_t p);

struct NoiseTrace {
  double mean = 0.0;      // sigma^2 tr(A)
  double variance = 0.0;  // 2 sigma^4 tr(A^2)
  // Exact variance of delta^T A delta for real Gaussian delta: 2 sigma^4 tr(Re(A)^2).
  // Equal to `variance` when A is real.
  double variance_real_noise = 0.0;
};

// A = Lambda_N^{-alpha} (Phi_T^+)^* Lambda_T^{-2 beta} Phi_T^+ Lambda_N^{-alpha}
NoiseTrace trace_oracle_noise(const FeatureMatrix& psi, const WeightScheme& weights,
                              std::size_t p, double sigma);

enum class CirculantPart { Pi1, Pi2 };

// lambda^{(m)} = sum_eta t_{m + N eta}^{-zeta}, eta in [0, nu) for Pi1 and [nu, mu) for Pi2.
Eigen::VectorXd circulant_eigendecomposition(double zeta, const ExperimentConfig& config,
                                             CirculantPart which);

// || Psi_S Lambda_S^{-zeta} Psi_S^* - Psi_N diag(lambda) Psi_N^* ||_F for the column block S.
double circulant_reconstruction_error(double zeta, const ExperimentConfig& config,
                                      CirculantPart which);

// || Xi^* Xi - (N X^{-*} Psi_c^* Lambda^{4 alpha} Psi_c X^{-1} - I) ||_F with
// X = Psi_c^* Lambda^{2 alpha} Psi_c, Psi_c = Psi_{[N] \ [p]}, Xi formed from its definition.
double xi_identity_check(const ExperimentConfig& config);

}  // namespace wlsq
