// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/closed_form.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "wlsq/errors.hpp"
#include "wlsq/feature_matrix.hpp"
#include "wlsq/weights.hpp"

namespace wlsq {

namespace {

using ld = long double;

void require_over(const ExperimentConfig& c, const char* what) {
  c.validate();
  if (c.p < c.N || c.p % c.N != 0)
    throw ConfigError(std::string(what) + ": requires p = nu*N with N <= p <= P (got p = " +
                      std::to_string(c.p) + ", N = " + std::to_string(c.N) + ")");
}

void require_under(const ExperimentConfig& c, const char* what) {
  c.validate();
  if (c.p > c.N)
    throw ConfigError(std::string(what) + ": requires p <= N (got p = " + std::to_string(c.p) +
                      ", N = " + std::to_string(c.N) + ")");
}

ld c_gamma_of(const ExperimentConfig& c) { return 1.0L / power_sum(0, c.P, 2.0L * c.gamma); }

}  // namespace

Eigen::VectorXd aliasing_mass(const ExperimentConfig& c) {
  c.validate();
  const ld cg = c_gamma_of(c);
  Eigen::VectorXd chi(static_cast<Eigen::Index>(c.N));
  for (std::size_t m = 0; m < c.N; ++m)
    chi[static_cast<Eigen::Index>(m)] =
        static_cast<double>(cg * folded_power_sum(m, c.N, 1, c.mu(), 2.0L * c.gamma));
  return chi;
}

Eigen::VectorXd weighted_tail_singular_values(std::size_t N, std::size_t p, double alpha) {
  if (N == 0 || p >= N) throw ConfigError("tail singular values need p < N");
  const FeatureMatrix psi = build_rff_matrix(N, N);
  const auto tail = static_cast<Eigen::Index>(N - p);
  const Eigen::MatrixXcd m =
      weight_powers(N, -alpha).matrix().asDiagonal() * psi.entries.rightCols(tail);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  if (svd.info() != Eigen::Success) throw NumericalError("tail SVD did not converge");
  return svd.singularValues();
}

UnderparamSpectral underparam_spectral(const ExperimentConfig& c) {
  require_under(c, "underparam_spectral");
  if (c.p == c.N) throw ConfigError("underparam_spectral: empty tail at p = N");

  const auto tail = static_cast<Eigen::Index>(c.N - c.p);
  const FeatureMatrix psi = build_rff_matrix(c.N, c.N);
  const Eigen::ArrayXd up = weight_powers(c.N, -c.alpha);  // t^{alpha}

  const Eigen::MatrixXcd m = up.matrix().asDiagonal() * psi.entries.rightCols(tail);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalError("underparam SVD did not converge");

  UnderparamSpectral s;
  s.U = svd.matrixU();
  s.Sigma = svd.singularValues();
  s.V = svd.matrixV();
  if (!(s.Sigma.minCoeff() > 0.0))
    throw NumericalError("Lambda^alpha Psi_tail is rank deficient");

  s.chi = aliasing_mass(c);
  const ld cg = c_gamma_of(c);
  Eigen::VectorXd khat(tail);
  for (Eigen::Index k = 0; k < tail; ++k) {
    const auto m_idx = c.p + static_cast<std::size_t>(k);
    khat[k] = static_cast<double>(cg * std::pow(1.0L + m_idx, -2.0L * c.gamma)) +
              s.chi[static_cast<Eigen::Index>(m_idx)];
  }
  const Eigen::ArrayXd t2a = up.square();
  s.e_tilde = s.U.adjoint() * t2a.matrix().asDiagonal() * s.U;
  s.e_hat = s.V.adjoint() * khat.asDiagonal() * s.V;
  return s;
}

double error_clean_over(const ExperimentConfig& c) {
  require_over(c, "error_clean_over");
  const std::size_t nu = c.nu(), mu = c.mu();
  const ld b = c.beta, g = c.gamma;
  const ld cg = c_gamma_of(c);

  ld cross = 0.0L, quad = 0.0L;
  for (std::size_t k = 0; k < c.N; ++k) {
    const ld s2b = folded_power_sum(k, c.N, 0, nu, 2 * b);
    const ld s4b = folded_power_sum(k, c.N, 0, nu, 4 * b);
    const ld s2bg = folded_power_sum(k, c.N, 0, nu, 2 * b + 2 * g);
    const ld s2g = folded_power_sum(k, c.N, 0, mu, 2 * g);
    cross += s2bg / s2b;
    quad += s4b * s2g / (s2b * s2b);
  }
  return static_cast<double>(1.0L - 2.0L * cg * cross + cg * quad);
}

double error_clean_under(const ExperimentConfig& c) {
  require_under(c, "error_clean_under");
  const ld cg = c_gamma_of(c);
  const ld g2 = 2.0L * c.gamma;

  ld e = cg * power_sum(c.N, c.P, g2);
  for (std::size_t k = 0; k < c.N; ++k) {
    const ld chi = cg * folded_power_sum(k, c.N, 1, c.mu(), g2);
    e += k < c.p ? chi : -chi;
  }
  if (c.p == c.N) return static_cast<double>(e);

  const UnderparamSpectral s = underparam_spectral(c);
  ld svd_term = 0.0L;
  const Eigen::Index m = s.Sigma.size();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      svd_term += static_cast<ld>((s.e_tilde(i, j) * s.e_hat(j, i)).real()) /
                  (static_cast<ld>(s.Sigma[i]) * s.Sigma[j]);
  return static_cast<double>(e + static_cast<ld>(c.N) * svd_term);
}

double error_clean_unweighted_over(const ExperimentConfig& c) {
  require_over(c, "error_clean_unweighted_over");
  const ld ratio = static_cast<ld>(c.N) / static_cast<ld>(c.p);
  return static_cast<double>(1.0L + ratio -
                             2.0L * ratio * c_gamma_of(c) * power_sum(0, c.p, 2.0L * c.gamma));
}

double error_clean_at_threshold(const ExperimentConfig& c) {
  c.validate();
  if (c.p != c.N) throw ConfigError("error_clean_at_threshold: requires p = N");
  return static_cast<double>(2.0L * c_gamma_of(c) * power_sum(c.N, c.P, 2.0L * c.gamma));
}

NoiseError error_noise_over(const ExperimentConfig& c) {
  require_over(c, "error_noise_over");
  const ld b = c.beta;
  ld mean = 0.0L, var = 0.0L;
  for (std::size_t k = 0; k < c.N; ++k) {
    const ld s2b = folded_power_sum(k, c.N, 0, c.nu(), 2 * b);
    const ld s4b = folded_power_sum(k, c.N, 0, c.nu(), 4 * b);
    const ld r = s4b / (s2b * s2b);
    mean += r;
    var += r * r;
  }
  const ld s2 = static_cast<ld>(c.sigma) * c.sigma;
  const ld n = c.N;
  return {static_cast<double>(s2 / n * mean), static_cast<double>(2.0L * s2 * s2 / (n * n) * var)};
}

NoiseError error_noise_under(const ExperimentConfig& c) {
  require_under(c, "error_noise_under");
  if (2 * c.p <= c.N)
    throw ConfigError("error_noise_under: p = " + std::to_string(c.p) +
                      " is outside the stated validity p > N/2 (N = " + std::to_string(c.N) + ")");
  const ld s2 = static_cast<ld>(c.sigma) * c.sigma;
  const ld n = c.N;
  const ld excess = 2.0L * c.p - n;
  ld mean = excess / n, var = excess / (n * n);

  if (c.p < c.N) {
    const UnderparamSpectral s = underparam_spectral(c);
    const Eigen::Index m = s.Sigma.size();
    for (Eigen::Index i = 0; i < m; ++i) {
      const ld si2 = static_cast<ld>(s.Sigma[i]) * s.Sigma[i];
      mean += static_cast<ld>(s.e_tilde(i, i).real()) / si2;
      for (Eigen::Index j = 0; j < m; ++j) {
        const ld sj2 = static_cast<ld>(s.Sigma[j]) * s.Sigma[j];
        var += static_cast<ld>((s.e_tilde(i, j) * s.e_tilde(j, i)).real()) / (si2 * sj2);
      }
    }
  }
  return {static_cast<double>(s2 * mean), static_cast<double>(2.0L * s2 * s2 * var)};
}

TheoryError evaluate_theory(const ExperimentConfig& c) {
  c.validate();
  TheoryError t;
  t.regime = c.regime();
  const bool over_path = c.p >= c.N;
  t.e_clean = over_path ? error_clean_over(c) : error_clean_under(c);
  if (c.sigma > 0.0) {
    const NoiseError n = over_path ? error_noise_over(c) : error_noise_under(c);
    t.e_noise = n.mean;
    t.var_noise = n.variance;
  }
  if (!std::isfinite(t.e_clean) || !std::isfinite(t.e_noise) || !std::isfinite(t.var_noise))
    throw NumericalError("theory evaluation produced a non-finite value");
  return t;
}

}  // namespace wlsq
