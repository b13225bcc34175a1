// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/sampling.hpp"

#include <cmath>

#include "wlsq/errors.hpp"

namespace wlsq {

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void sample_theta_into(std::span<const double> scale, RngStream& rng,
                       std::span<std::complex<double>> out) {
  if (scale.size() != out.size()) throw DimensionError("sample_theta: size mismatch");
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double re = rng.normal();
    const double im = rng.normal();
    out[k] = {scale[k] * re, scale[k] * im};
  }
}

Eigen::VectorXcd sample_theta(const CoefficientPrior& prior, RngStream& rng) {
  const Eigen::ArrayXd scale = (prior.covariance_diagonal() * 0.5).sqrt();
  Eigen::VectorXcd theta(scale.size());
  sample_theta_into({scale.data(), static_cast<std::size_t>(scale.size())}, rng,
                    {theta.data(), static_cast<std::size_t>(theta.size())});
  return theta;
}

Eigen::VectorXd sample_noise(std::size_t N, double sigma, RngStream& rng) {
  if (!(sigma >= 0.0)) throw ConfigError("sigma must be >= 0");
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N));
  if (sigma == 0.0) return delta;
  for (Eigen::Index j = 0; j < delta.size(); ++j) delta[j] = sigma * rng.normal();
  return delta;
}

Eigen::VectorXcd synthesize_data(const FeatureMatrix& psi, const Eigen::VectorXcd& theta,
                                 const Eigen::VectorXd& delta) {
  if (theta.size() != psi.cols())
    throw DimensionError("synthesize_data: theta has length " + std::to_string(theta.size()) +
                         ", expected " + std::to_string(psi.cols()));
  if (delta.size() != psi.rows())
    throw DimensionError("synthesize_data: delta has length " + std::to_string(delta.size()) +
                         ", expected " + std::to_string(psi.rows()));
  Eigen::VectorXcd y = psi.entries * theta;
  y += delta.cast<std::complex<double>>();
  return y;
}

}  // namespace wlsq
