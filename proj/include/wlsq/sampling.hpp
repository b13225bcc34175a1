// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include <Eigen/Core>

#include "wlsq/feature_matrix.hpp"
#include "wlsq/weights.hpp"

namespace wlsq {

// splitmix64 finalizer over (master, stream); used to derive per-replicate seeds.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) noexcept;

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}
  RngStream(std::uint64_t master, std::uint64_t stream)
      : engine_(derive_stream_seed(master, stream)) {}

  double normal() { return normal_(engine_); }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

// theta_k = sqrt(K_k / 2) (g1 + i g2).
Eigen::VectorXcd sample_theta(const CoefficientPrior& prior, RngStream& rng);
// Same, writing into caller storage; scale[k] must hold sqrt(K_k / 2).
void sample_theta_into(std::span<const double> scale, RngStream& rng,
                       std::span<std::complex<double>> out);

Eigen::VectorXd sample_noise(std::size_t N, double sigma, RngStream& rng);

// y = Psi theta + delta
Eigen::VectorXcd synthesize_data(const FeatureMatrix& psi, const Eigen::VectorXcd& theta,
                                 const Eigen::VectorXd& delta);

}  // namespace wlsq
