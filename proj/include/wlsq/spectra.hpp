// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace wlsq {

// e^{-x} I_nu(x) by the ascending series, nu >= 0, 0 <= x <= 1e3.
double bessel_i_scaled(double nu, double x);
// I_nu(x); overflows to +inf for large x.
double bessel_i(double nu, double x);

// Dimension of the degree-k spherical harmonics on S^{n-1}.
std::uint64_t sphere_harmonic_multiplicity(unsigned n, std::size_t k);

enum class SpectrumKind { GaussianSphere, PolynomialSphere, NtkDecay, AlgebraicDecay };

std::string_view to_string(SpectrumKind kind) noexcept;

struct SpectrumEntry {
  std::size_t order = 0;
  std::uint64_t multiplicity = 1;
  double eigenvalue = 0.0;
};

struct KernelSpectrum {
  SpectrumKind kind = SpectrumKind::AlgebraicDecay;
  unsigned n = 0;        // sphere S^{n-1}; unused for AlgebraicDecay
  double sigma_k = 0.0;  // GaussianSphere
  unsigned degree = 0;   // PolynomialSphere
  double zeta = 0.0;     // AlgebraicDecay
  std::vector<SpectrumEntry> entries;  // one per order k

  // Eigenvalues repeated by multiplicity, sorted nonincreasing, truncated to max_count.
  std::vector<double> expanded(std::size_t max_count = std::numeric_limits<std::size_t>::max()) const;
};

// lambda_k = e^{-2/s^2} s^{n-2} I_{k+n/2-1}(2/s^2) Gamma(n/2), k = 0..k_max.
KernelSpectrum gaussian_sphere_spectrum(unsigned n, double sigma_k, std::size_t k_max);

// Nonzero for k <= d; orders up to k_max are listed (default d + 3) so the zero tail shows.
KernelSpectrum polynomial_sphere_spectrum(unsigned n, unsigned d);
KernelSpectrum polynomial_sphere_spectrum(unsigned n, unsigned d, std::size_t k_max);

// Shape generator: mu_0 = mu_1 = 1, mu_k = k^{-n} for even k >= 2, 0 for odd k >= 3.
KernelSpectrum ntk_decay_spectrum(unsigned n, std::size_t k_max);

// lambda_k = t_k^{-zeta}, multiplicity 1.
KernelSpectrum algebraic_decay_spectrum(double zeta, std::size_t k_max);

// (2e/s^2)^k / (2k+n-2)^{k+(n-1)/2}: the k-dependence of the Gaussian two-sided bound.
double gaussian_bound_shape(unsigned n, double sigma_k, std::size_t k);

}  // namespace wlsq
