// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/feature_matrix.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "wlsq/errors.hpp"
#include "wlsq/weights.hpp"

namespace wlsq {

FeatureMatrix build_rff_matrix(std::size_t N, std::size_t P) {
  if (N == 0 || P == 0) throw DimensionError("feature matrix needs N >= 1 and P >= 1");

  // One table of the N roots of unity, then index by (j*k) mod N.
  std::vector<std::complex<double>> roots(N);
  for (std::size_t r = 0; r < N; ++r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(N);
    roots[r] = {std::cos(angle), std::sin(angle)};
  }
  roots[0] = {1.0, 0.0};

  FeatureMatrix f;
  f.kind = FeatureKind::Rff;
  f.omega = N > 1 ? roots[1] : std::complex<double>{1.0, 0.0};
  f.entries.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(P));
  for (std::size_t k = 0; k < P; ++k) {
    const std::size_t kr = k % N;
    for (std::size_t j = 0; j < N; ++j)
      f.entries(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = roots[(j * kr) % N];
  }
  return f;
}

FeatureMatrix build_rff_matrix(const ExperimentConfig& config) {
  return build_rff_matrix(config.N, config.P);
}

FeatureMatrix build_diagonal_decay_matrix(std::size_t m, double zeta) {
  if (m == 0) throw DimensionError("diagonal decay matrix needs m >= 1");
  if (!(zeta >= 0.0)) throw ConfigError("zeta must be >= 0");
  FeatureMatrix f;
  f.kind = FeatureKind::DiagonalDecay;
  f.zeta = zeta;
  const auto m_ = static_cast<Eigen::Index>(m);
  f.entries = Eigen::MatrixXcd::Zero(m_, m_);
  f.entries.diagonal() = weight_powers(m, zeta).matrix().cast<std::complex<double>>();
  return f;
}

FeatureMatrix make_custom_feature_matrix(Eigen::MatrixXcd entries) {
  if (entries.size() == 0) throw DimensionError("empty feature matrix");
  if (!entries.allFinite()) throw NumericalError("feature matrix has non-finite entries");
  FeatureMatrix f;
  f.kind = FeatureKind::Custom;
  f.entries = std::move(entries);
  return f;
}

}  // namespace wlsq
