// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "wlsq/errors.hpp"
#include "wlsq/estimator.hpp"
#include "wlsq/sampling.hpp"
#include "wlsq/simd/kernels.hpp"
#include "wlsq/weights.hpp"

namespace wlsq {

namespace {

using cplx = std::complex<double>;
using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Running (count, mean, M2); merged with Chan's update.
struct Moments {
  double n = 0.0, mean = 0.0, m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    const double total = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / total;
    m2 += o.m2 + d * d * n * o.n / total;
    n = total;
  }

  double variance() const { return n > 1.0 ? m2 / (n - 1.0) : 0.0; }
  double std_error() const { return n > 0.0 ? std::sqrt(variance() / n) : 0.0; }
};

struct ReplicateResult {
  Moments paired, clean, noise, cross, nested;
};

struct Engine {
  std::size_t N, P, p;
  double sigma;
  bool paired;
  std::uint64_t seed;
  std::size_t n_theta;
  RowMat psi;
  RowMat gain;
  std::vector<double> theta_scale;
  const simd::KernelTable* k;

  ReplicateResult run(std::size_t r) const {
    RngStream rng(seed, r);
    const bool noisy = sigma > 0.0;

    std::vector<cplx> delta_outer(N), delta(N), theta(P), y0(N), y(N), g0(p), g(p);
    if (noisy)
      for (auto& d : delta_outer) d = {sigma * rng.normal(), 0.0};

    ReplicateResult out;
    for (std::size_t i = 0; i < n_theta; ++i) {
      sample_theta_into(theta_scale, rng, theta);
      k->cmatvec(psi.data(), N, P, theta.data(), y0.data());
      k->cmatvec(gain.data(), p, N, y0.data(), g0.data());
      const double tail = k->sq_norm(theta.data() + p, P - p);
      const double clean = k->sq_dist(g0.data(), theta.data(), p) + tail;

      if (paired) {
        double err = clean, noise = 0.0;
        if (noisy) {
          for (std::size_t j = 0; j < N; ++j) {
            delta[j] = {sigma * rng.normal(), 0.0};
            y[j] = y0[j] + delta[j];
          }
          k->cmatvec(gain.data(), p, N, y.data(), g.data());
          err = k->sq_dist(g.data(), theta.data(), p) + tail;
          noise = k->sq_dist(g.data(), g0.data(), p);
        }
        if (!std::isfinite(err)) throw SimulationError(r, "non-finite squared error");
        out.paired.add(err);
        out.clean.add(clean);
        out.noise.add(noise);
        out.cross.add(err - clean - noise);
      }

      double nested = clean;
      if (noisy) {
        for (std::size_t j = 0; j < N; ++j) y[j] = y0[j] + delta_outer[j];
        k->cmatvec(gain.data(), p, N, y.data(), g.data());
        nested = k->sq_dist(g.data(), theta.data(), p) + tail;
      }
      if (!std::isfinite(nested)) throw SimulationError(r, "non-finite squared error");
      out.nested.add(nested);
    }
    return out;
  }
};

std::vector<ReplicateResult> run_replicates(const Engine& e, std::size_t n_noise,
                                            std::size_t workers) {
  std::vector<ReplicateResult> results(n_noise);
  std::vector<std::exception_ptr> errors(n_noise);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t r = next++; r < n_noise; r = next++) {
      try {
        results[r] = e.run(r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n_noise);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return results;
}

}  // namespace

void SimulationReport::attach_theory(double total) {
  theory_total = total;
  z_score.reset();
  exact_match = false;
  if (total == 0.0) {
    exact_match = std::abs(mean_error) <= 1e-20;
    return;
  }
  if (std_error > 0.0) z_score = (mean_error - total) / std_error;
}

SimulationReport simulate_generalization(const ExperimentConfig& config, const FeatureMatrix& psi,
                                         std::size_t n_theta, std::size_t n_noise,
                                         const SimulationOptions& opts) {
  config.validate();
  if (n_theta == 0 || n_noise == 0) throw ConfigError("n_theta and n_noise must be >= 1");
  if (psi.rows() != static_cast<Eigen::Index>(config.N) ||
      psi.cols() != static_cast<Eigen::Index>(config.P))
    throw DimensionError("feature matrix is " + std::to_string(psi.rows()) + "x" +
                         std::to_string(psi.cols()) + ", config expects " +
                         std::to_string(config.N) + "x" + std::to_string(config.P));

  const CoefficientPrior prior(config.gamma, config.P);
  const WeightedSolver solver(psi, WeightScheme{config.alpha, config.beta}, config.p);

  Engine e{config.N, config.P, config.p, config.sigma, opts.paired, config.seed, n_theta,
           psi.entries, solver.gain(), {}, &simd::active_kernels()};
  const Eigen::ArrayXd scale = (prior.covariance_diagonal() * 0.5).sqrt();
  e.theta_scale.assign(scale.data(), scale.data() + scale.size());

  const std::vector<ReplicateResult> parts = run_replicates(e, n_noise, opts.workers);

  ReplicateResult total;
  Moments outer;  // theta-averaged nested error, one value per noise replicate
  double inner_var_sum = 0.0;
  for (const auto& part : parts) {
    total.paired.merge(part.paired);
    total.clean.merge(part.clean);
    total.noise.merge(part.noise);
    total.cross.merge(part.cross);
    outer.add(part.nested.mean);
    inner_var_sum += part.nested.variance();
  }

  SimulationReport rep;
  rep.n_theta = n_theta;
  rep.n_noise = n_noise;
  rep.seed = config.seed;
  rep.mean_error = total.paired.mean;
  rep.std_error = total.paired.std_error();
  rep.clean_mean = total.clean.mean;
  rep.clean_std_error = total.clean.std_error();
  rep.noise_mean = total.noise.mean;
  rep.noise_std_error = total.noise.std_error();
  rep.cross_mean = total.cross.mean;
  rep.cross_std_error = total.cross.std_error();

  if (config.sigma > 0.0 && n_noise >= 2) {
    rep.inner_bias_correction = inner_var_sum / static_cast<double>(n_noise) / static_cast<double>(n_theta);
    rep.noise_var_estimate = outer.variance() - rep.inner_bias_correction;
  }
  return rep;
}

SimulationReport simulate_generalization(const ExperimentConfig& config, std::size_t n_theta,
                                         std::size_t n_noise, const SimulationOptions& opts) {
  config.validate();
  return simulate_generalization(config, build_rff_matrix(config), n_theta, n_noise, opts);
}

double simulate_noise_variance(const ExperimentConfig& config, std::size_t n_theta,
                               std::size_t n_noise, const SimulationOptions& opts) {
  if (n_noise < 2) throw ConfigError("noise variance needs n_noise >= 2");
  if (config.sigma == 0.0) {
    config.validate();
    return 0.0;
  }
  SimulationOptions o = opts;
  o.paired = false;
  return simulate_generalization(config, n_theta, n_noise, o).noise_var_estimate;
}

}  // namespace wlsq
