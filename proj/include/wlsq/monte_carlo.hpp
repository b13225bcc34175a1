// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "wlsq/config.hpp"
#include "wlsq/feature_matrix.hpp"

namespace wlsq {

struct SimulationOptions {
  std::size_t workers = 1;  // 0 = hardware concurrency
  // The paired (theta, delta) stream drives the mean estimate; the variance-only entry
  // point switches it off.
  bool paired = true;
};

struct SimulationReport {
  double mean_error = 0.0;  // paired design
  double std_error = 0.0;   // sample sd / sqrt(n_theta * n_noise)
  // Var_delta of the theta-averaged error from the nested design, after subtracting the
  // inner-sampling term (mean inner variance / n_theta). Can dip below zero by chance.
  double noise_var_estimate = 0.0;
  double inner_bias_correction = 0.0;

  // Split of the paired error into ||theta_hat - theta||^2 and ||theta_hat^delta - theta_hat||^2.
  double clean_mean = 0.0;
  double clean_std_error = 0.0;
  double noise_mean = 0.0;
  double noise_std_error = 0.0;
  // mean - clean_mean - noise_mean, with its own standard error (the cross term).
  double cross_mean = 0.0;
  double cross_std_error = 0.0;

  std::size_t n_theta = 0;
  std::size_t n_noise = 0;
  std::uint64_t seed = 0;

  std::optional<double> theory_total;
  std::optional<double> z_score;  // undefined when std_error == 0 or theory == 0
  bool exact_match = false;       // theory == 0 and the estimate is zero to rounding

  void attach_theory(double total);
};

SimulationReport simulate_generalization(const ExperimentConfig& config, std::size_t n_theta,
                                         std::size_t n_noise, const SimulationOptions& opts = {});

// Same, with an arbitrary N x P feature matrix in place of the RFF one.
SimulationReport simulate_generalization(const ExperimentConfig& config, const FeatureMatrix& psi,
                                         std::size_t n_theta, std::size_t n_noise,
                                         const SimulationOptions& opts = {});

double simulate_noise_variance(const ExperimentConfig& config, std::size_t n_theta,
                               std::size_t n_noise, const SimulationOptions& opts = {});

}  // namespace wlsq
