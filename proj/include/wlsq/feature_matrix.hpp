// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Core>

#include "wlsq/config.hpp"

namespace wlsq {

enum class FeatureKind { Rff, DiagonalDecay, Custom };

struct FeatureMatrix {
  Eigen::MatrixXcd entries;
  FeatureKind kind = FeatureKind::Custom;
  double zeta = 0.0;                     // DiagonalDecay only
  std::complex<double> omega{1.0, 0.0};  // exp(2 pi i / N), Rff only

  Eigen::Index rows() const noexcept { return entries.rows(); }
  Eigen::Index cols() const noexcept { return entries.cols(); }
};

// Psi_jk = omega_N^{jk}; exponents are reduced mod N so periodic columns are bit-identical.
FeatureMatrix build_rff_matrix(std::size_t N, std::size_t P);
FeatureMatrix build_rff_matrix(const ExperimentConfig& config);

FeatureMatrix build_diagonal_decay_matrix(std::size_t m, double zeta);

FeatureMatrix make_custom_feature_matrix(Eigen::MatrixXcd entries);

}  // namespace wlsq
