// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "wlsq/feature_matrix.hpp"
#include "wlsq/weights.hpp"

namespace wlsq {

inline constexpr double kPinvRelTol = 1e-12;

struct EstimationResult {
  Eigen::VectorXcd theta_hat;  // length P, zero beyond p
  double residual_norm = 0.0;  // || Lambda_N^{-alpha} (Psi_p theta_hat_p - y) ||
  std::size_t rank_used = 0;
};

// Moore-Penrose pseudoinverse by SVD, singular values <= rel_tol * sigma_max dropped.
Eigen::MatrixXcd pseudo_inverse(const Eigen::MatrixXcd& a, double rel_tol = kPinvRelTol,
                                std::size_t* rank = nullptr);

// Precomputes the linear map y -> theta_hat_p for a fixed (Psi, weights, p):
//   G = Lambda_p^{-beta} (Lambda_N^{-alpha} Psi_{N x p} Lambda_p^{-beta})^+ Lambda_N^{-alpha}
// so repeated solves cost one mat-vec.
class WeightedSolver {
 public:
  WeightedSolver(const FeatureMatrix& psi, const WeightScheme& weights, std::size_t p,
                 double rel_tol = kPinvRelTol);

  std::size_t p() const noexcept { return p_; }
  std::size_t model_size() const noexcept { return P_; }
  std::size_t rank() const noexcept { return rank_; }
  const Eigen::MatrixXcd& gain() const noexcept { return gain_; }

  // Learned coefficients only (length p).
  Eigen::VectorXcd solve_learned(const Eigen::VectorXcd& y) const;
  EstimationResult solve(const Eigen::VectorXcd& y) const;

 private:
  void check_input(const Eigen::VectorXcd& y) const;

  std::size_t p_;
  std::size_t P_;
  std::size_t rank_ = 0;
  Eigen::ArrayXd data_w_;
  Eigen::MatrixXcd psi_p_;
  Eigen::MatrixXcd gain_;
};

EstimationResult weighted_ls_solve(const FeatureMatrix& psi, const WeightScheme& weights,
                                   const Eigen::VectorXcd& y_delta, std::size_t p);

double empirical_sq_error(const Eigen::VectorXcd& theta_hat, const Eigen::VectorXcd& theta);

}  // namespace wlsq
