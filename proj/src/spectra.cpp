// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wlsq/errors.hpp"

namespace wlsq {

namespace {

constexpr double kBesselMaxArg = 1e3;
constexpr int kBesselMaxTerms = 100000;

void check_sphere(unsigned n) {
  if (n < 2) throw ConfigError("sphere dimension n must be >= 2");
}

}  // namespace

double bessel_i_scaled(double nu, double x) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ConfigError("bessel: order must be finite and >= 0");
  if (!(x >= 0.0)) throw ConfigError("bessel: argument must be >= 0");
  if (x > kBesselMaxArg)
    throw NumericalError("bessel: argument " + std::to_string(x) + " exceeds the series guard 1e3");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;

  // t_0 = (x/2)^nu / Gamma(nu+1) e^{-x};  t_{m+1} = t_m (x/2)^2 / ((m+1)(m+nu+1))
  const double half = 0.5 * x;
  const double q = half * half;
  double log_t = nu * std::log(half) - std::lgamma(nu + 1.0) - x;

  // Multiply term ratios directly while t_0 is representable; otherwise carry the log.
  const bool log_domain = log_t < -700.0;
  double term = log_domain ? 0.0 : std::exp(log_t);
  double sum = 0.0;
  for (int m = 0; m < kBesselMaxTerms; ++m) {
    if (log_domain) term = std::exp(log_t);
    sum += term;
    // Past the peak (terms shrinking) and below the relative floor.
    if (m + nu + 1.0 > half && term <= 1e-16 * sum) return sum;
    const double ratio = q / ((m + 1.0) * (m + nu + 1.0));
    if (log_domain)
      log_t += std::log(ratio);
    else
      term *= ratio;
  }
  throw NumericalError("bessel: series did not converge");
}

double bessel_i(double nu, double x) { return std::exp(x) * bessel_i_scaled(nu, x); }

std::uint64_t sphere_harmonic_multiplicity(unsigned n, std::size_t k) {
  check_sphere(n);
  if (k == 0) return 1;
  // binom(k+n-3, k-1) = binom(k+n-3, n-2), exact in 128-bit.
  const unsigned __int128 top = k + n - 3;
  const unsigned __int128 r = std::min<std::size_t>(k - 1, n - 2);
  unsigned __int128 c = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 100;
  for (unsigned __int128 i = 0; i < r; ++i) {
    c = c * (top - i) / (i + 1);
    if (c > limit) throw NumericalError("spherical harmonic multiplicity overflows");
  }
  const unsigned __int128 value = (static_cast<unsigned __int128>(2 * k + n - 2) * c) / k;
  if (value > std::numeric_limits<std::uint64_t>::max())
    throw NumericalError("spherical harmonic multiplicity overflows");
  return static_cast<std::uint64_t>(value);
}

std::string_view to_string(SpectrumKind kind) noexcept {
  switch (kind) {
    case SpectrumKind::GaussianSphere:
      return "gaussian";
    case SpectrumKind::PolynomialSphere:
      return "polynomial";
    case SpectrumKind::NtkDecay:
      return "ntk";
    case SpectrumKind::AlgebraicDecay:
      return "algebraic";
  }
  return "unknown";
}

std::vector<double> KernelSpectrum::expanded(std::size_t max_count) const {
  std::vector<double> out;
  for (const auto& e : entries) {
    for (std::uint64_t i = 0; i < e.multiplicity && out.size() < max_count; ++i)
      out.push_back(e.eigenvalue);
    if (out.size() >= max_count) break;
  }
  std::stable_sort(out.begin(), out.end(), [](double a, double b) { return a > b; });
  return out;
}

KernelSpectrum gaussian_sphere_spectrum(unsigned n, double sigma_k, std::size_t k_max) {
  check_sphere(n);
  if (!(sigma_k > 0.0)) throw ConfigError("gaussian spectrum: sigma_k must be > 0");
  KernelSpectrum s;
  s.kind = SpectrumKind::GaussianSphere;
  s.n = n;
  s.sigma_k = sigma_k;
  const double x = 2.0 / (sigma_k * sigma_k);
  const double prefactor = std::pow(sigma_k, static_cast<double>(n) - 2.0) * std::tgamma(0.5 * n);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double nu = static_cast<double>(k) + 0.5 * n - 1.0;
    s.entries.push_back({k, sphere_harmonic_multiplicity(n, k), prefactor * bessel_i_scaled(nu, x)});
  }
  return s;
}

KernelSpectrum polynomial_sphere_spectrum(unsigned n, unsigned d, std::size_t k_max) {
  check_sphere(n);
  KernelSpectrum s;
  s.kind = SpectrumKind::PolynomialSphere;
  s.n = n;
  s.degree = d;
  const double dn = d, nn = n;
  // log of 2^{d+n-2} Gamma(d + (n-1)/2) Gamma(n/2) / sqrt(pi)
  const double log_base = (dn + nn - 2.0) * std::numbers::ln2 + std::lgamma(dn + 0.5 * (nn - 1.0)) +
                          std::lgamma(0.5 * nn) - 0.5 * std::log(std::numbers::pi);
  for (std::size_t k = 0; k <= k_max; ++k) {
    double value = 0.0;
    if (k <= d) {
      const double kk = static_cast<double>(k);
      // d!/(d-k)! / Gamma(d+k+n-1)
      value = std::exp(log_base + std::lgamma(dn + 1.0) - std::lgamma(dn - kk + 1.0) -
                       std::lgamma(dn + kk + nn - 1.0));
    }
    s.entries.push_back({k, sphere_harmonic_multiplicity(n, k), value});
  }
  return s;
}

KernelSpectrum polynomial_sphere_spectrum(unsigned n, unsigned d) {
  return polynomial_sphere_spectrum(n, d, static_cast<std::size_t>(d) + 3);
}

KernelSpectrum ntk_decay_spectrum(unsigned n, std::size_t k_max) {
  check_sphere(n);
  KernelSpectrum s;
  s.kind = SpectrumKind::NtkDecay;
  s.n = n;
  for (std::size_t k = 0; k <= k_max; ++k) {
    double mu = 0.0;
    if (k <= 1)
      mu = 1.0;
    else if (k % 2 == 0)
      mu = std::pow(static_cast<double>(k), -static_cast<double>(n));
    s.entries.push_back({k, sphere_harmonic_multiplicity(n, k), mu});
  }
  return s;
}

KernelSpectrum algebraic_decay_spectrum(double zeta, std::size_t k_max) {
  if (!(zeta >= 0.0)) throw ConfigError("algebraic spectrum: zeta must be >= 0");
  KernelSpectrum s;
  s.kind = SpectrumKind::AlgebraicDecay;
  s.zeta = zeta;
  for (std::size_t k = 0; k <= k_max; ++k)
    s.entries.push_back({k, 1, std::pow(1.0 + static_cast<double>(k), -zeta)});
  return s;
}

double gaussian_bound_shape(unsigned n, double sigma_k, std::size_t k) {
  const double kk = static_cast<double>(k);
  const double log_v = kk * std::log(2.0 * std::numbers::e / (sigma_k * sigma_k)) -
                       (kk + 0.5 * (n - 1.0)) * std::log(2.0 * kk + n - 2.0);
  return std::exp(log_v);
}

}  // namespace wlsq
