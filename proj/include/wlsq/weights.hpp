// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>

#include <Eigen/Core>

namespace wlsq {

// t_k = 1 + k. Every weight matrix in the model is diag(t_k^{-s}).
inline double mode_weight(std::size_t k) noexcept { return 1.0 + static_cast<double>(k); }

// diag(t_k^{-s}) for k < m, as a vector.
Eigen::ArrayXd weight_powers(std::size_t m, double s);

// sum_{eta = eta_begin}^{eta_end - 1} t_{k + N eta}^{-s}, accumulated in long double.
long double folded_power_sum(std::size_t k, std::size_t N, std::size_t eta_begin,
                             std::size_t eta_end, long double s);

// sum_{k = begin}^{end - 1} t_k^{-s}, ascending, long double.
long double power_sum(std::size_t begin, std::size_t end, long double s);

struct WeightScheme {
  double alpha = 0.0;  // data side: Lambda_[N]^{-alpha}
  double beta = 0.0;   // parameter side: Lambda_[p]^{-beta}

  Eigen::ArrayXd data_weights(std::size_t N) const { return weight_powers(N, alpha); }
  Eigen::ArrayXd param_weights(std::size_t p) const { return weight_powers(p, beta); }
};

// Mean-zero prior on theta with covariance c_gamma * Lambda_[P]^{-2 gamma}.
class CoefficientPrior {
 public:
  CoefficientPrior(double gamma, std::size_t P);

  double gamma() const noexcept { return gamma_; }
  std::size_t size() const noexcept { return P_; }
  double c_gamma() const noexcept { return c_gamma_; }
  long double c_gamma_ld() const noexcept { return c_gamma_ld_; }

  double variance(std::size_t k) const;
  Eigen::ArrayXd covariance_diagonal() const;

 private:
  double gamma_;
  std::size_t P_;
  long double c_gamma_ld_;
  double c_gamma_;
};

}  // namespace wlsq
