// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wlsq/errors.hpp"
#include "wlsq/spectra.hpp"

namespace wlsq {
namespace {

// Direct ascending series, each term from tgamma and pow.
double bessel_series_oracle(double nu, double x, int terms = 40) {
  double s = 0.0;
  for (int m = 0; m < terms; ++m)
    s += std::pow(x / 2.0, 2.0 * m + nu) / (std::tgamma(m + 1.0) * std::tgamma(m + nu + 1.0));
  return s;
}

TEST(Bessel, MatchesSeriesOracle) {
  EXPECT_NEAR(bessel_i(1.5, 2.0), bessel_series_oracle(1.5, 2.0), 1e-12 * bessel_series_oracle(1.5, 2.0));
  for (double nu : {0.0, 0.5, 2.5, 7.0})
    for (double x : {0.1, 1.0, 4.0, 10.0}) {
      const double want = bessel_series_oracle(nu, x, 80);
      EXPECT_NEAR(bessel_i(nu, x), want, 1e-12 * want) << nu << " " << x;
    }
}

TEST(Bessel, HalfIntegerClosedForm) {
  // I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh x / x)
  for (double x : {0.5, 2.0, 9.0}) {
    const double want = std::sqrt(2.0 / (std::numbers::pi * x)) * (std::cosh(x) - std::sinh(x) / x);
    EXPECT_NEAR(bessel_i(1.5, x), want, 1e-13 * want);
  }
  EXPECT_NEAR(bessel_i(0.0, 1.0), 1.2660658777520082, 1e-15);
  EXPECT_EQ(bessel_i(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_i(2.0, 0.0), 0.0);
}

TEST(Bessel, ScaledStaysFiniteForLargeArguments) {
  // e^{-x} I_0(x) ~ 1/sqrt(2 pi x)
  const double x = 800.0;
  const double v = bessel_i_scaled(0.0, x);
  EXPECT_NEAR(v, 1.0 / std::sqrt(2.0 * std::numbers::pi * x) * (1.0 + 1.0 / (8.0 * x)), 1e-6 * v);
  // High order: tiny but representable, checked against a log-domain series.
  double want = 0.0;
  for (int m = 0; m < 40; ++m)
    want += std::exp((2.0 * m + 50.0) * std::log(0.5) - std::lgamma(m + 1.0) - std::lgamma(m + 51.0) - 1.0);
  EXPECT_NEAR(bessel_i_scaled(50.0, 1.0), want, 1e-12 * want);
  EXPECT_THROW(bessel_i_scaled(0.0, 1e3 + 1.0), NumericalError);
  EXPECT_THROW(bessel_i_scaled(-1.0, 1.0), ConfigError);
}

TEST(Multiplicity, DimensionFormula) {
  for (std::size_t K = 0; K <= 30; ++K) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k <= K; ++k) s += sphere_harmonic_multiplicity(3, k);
    EXPECT_EQ(s, (K + 1) * (K + 1));
  }
  for (std::size_t k = 1; k < 10; ++k) EXPECT_EQ(sphere_harmonic_multiplicity(2, k), 2u);
  EXPECT_EQ(sphere_harmonic_multiplicity(2, 0), 1u);
  EXPECT_EQ(sphere_harmonic_multiplicity(4, 2), 9u);  // (k+1)^2 on S^3
  EXPECT_EQ(sphere_harmonic_multiplicity(5, 1), 5u);
}

TEST(GaussianSpectrum, DecreasingAboveThreshold) {
  const KernelSpectrum s = gaussian_sphere_spectrum(3, 1.0, 20);
  ASSERT_EQ(s.entries.size(), 21u);
  for (std::size_t k = 0; k + 1 < s.entries.size(); ++k)
    EXPECT_GT(s.entries[k].eigenvalue, s.entries[k + 1].eigenvalue) << k;
  for (const auto& e : s.entries) EXPECT_GT(e.eigenvalue, 0.0);
}

TEST(GaussianSpectrum, Formula) {
  const double sig = 1.3, x = 2.0 / (sig * sig);
  const KernelSpectrum s = gaussian_sphere_spectrum(5, sig, 4);
  for (const auto& e : s.entries) {
    const double nu = e.order + 5 / 2.0 - 1.0;
    const double want = std::exp(-x) * std::pow(sig, 3.0) * bessel_series_oracle(nu, x, 80) * std::tgamma(2.5);
    EXPECT_NEAR(e.eigenvalue, want, 1e-12 * want);
    EXPECT_EQ(e.multiplicity, sphere_harmonic_multiplicity(5, e.order));
  }
}

TEST(GaussianSpectrum, SandwichedByBoundShape) {
  const unsigned n = 3;
  const double sig = 1.0;
  const KernelSpectrum s = gaussian_sphere_spectrum(n, sig, 20);
  const double r5 = s.entries[5].eigenvalue / gaussian_bound_shape(n, sig, 5);
  const double a1 = r5 / 1.25, a2 = r5 * 1.25;
  for (std::size_t k = 5; k <= 20; ++k) {
    const double shape = gaussian_bound_shape(n, sig, k);
    EXPECT_GE(s.entries[k].eigenvalue, a1 * shape) << k;
    EXPECT_LE(s.entries[k].eigenvalue, a2 * shape) << k;
  }
}

TEST(GaussianSpectrum, Guards) {
  EXPECT_THROW(gaussian_sphere_spectrum(1, 1.0, 3), ConfigError);
  EXPECT_THROW(gaussian_sphere_spectrum(3, 0.0, 3), ConfigError);
  EXPECT_THROW(gaussian_sphere_spectrum(3, 0.04, 3), NumericalError);  // 2/s^2 = 1250
}

TEST(PolynomialSpectrum, SupportAndOrder) {
  const KernelSpectrum s = polynomial_sphere_spectrum(3, 5);
  ASSERT_EQ(s.entries.size(), 9u);
  for (const auto& e : s.entries) {
    if (e.order > 5) EXPECT_EQ(e.eigenvalue, 0.0);
    else EXPECT_GT(e.eigenvalue, 0.0);
  }
  for (std::size_t k = 0; k < 5; ++k) EXPECT_GT(s.entries[k].eigenvalue, s.entries[k + 1].eigenvalue);
}

TEST(PolynomialSpectrum, RatioRecurrence) {
  for (unsigned n : {2u, 3u, 6u})
    for (unsigned d : {1u, 4u, 9u}) {
      const KernelSpectrum s = polynomial_sphere_spectrum(n, d);
      for (unsigned k = 0; k < d; ++k) {
        const double ratio = s.entries[k + 1].eigenvalue / s.entries[k].eigenvalue;
        const double want = static_cast<double>(d - k) / (d + k + n - 1.0);
        EXPECT_NEAR(ratio, want, 1e-12 * want) << n << " " << d << " " << k;
      }
    }
}

TEST(PolynomialSpectrum, LeadingValue) {
  const unsigned n = 3, d = 2;
  const double want = std::pow(2.0, d + n - 2.0) * std::tgamma(d + (n - 1) / 2.0) * std::tgamma(n / 2.0) /
                      (std::sqrt(std::numbers::pi) * std::tgamma(d + n - 1.0));
  EXPECT_NEAR(polynomial_sphere_spectrum(n, d).entries[0].eigenvalue, want, 1e-14 * want);
}

TEST(NtkSpectrum, Structure) {
  const KernelSpectrum s = ntk_decay_spectrum(4, 120);
  EXPECT_GT(s.entries[0].eigenvalue, 0.0);
  EXPECT_GT(s.entries[1].eigenvalue, 0.0);
  for (std::size_t k = 3; k <= 120; k += 2) EXPECT_EQ(s.entries[k].eigenvalue, 0.0) << k;
}

TEST(NtkSpectrum, PowerLawSlope) {
  for (unsigned n : {2u, 3u, 5u}) {
    const KernelSpectrum s = ntk_decay_spectrum(n, 100);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t k = 10; k <= 100; k += 2) {
      const double x = std::log(static_cast<double>(k)), y = std::log(s.entries[k].eigenvalue);
      sx += x; sy += y; sxx += x * x; sxy += x * y; ++m;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    EXPECT_NEAR(slope, -static_cast<double>(n), 0.01);
  }
}

TEST(Spectrum, ExpandedIsSortedAndNonnegative) {
  for (const KernelSpectrum& s :
       {gaussian_sphere_spectrum(3, 0.8, 12), polynomial_sphere_spectrum(4, 3), ntk_decay_spectrum(3, 30),
        algebraic_decay_spectrum(1.5, 20)}) {
    const auto v = s.expanded();
    std::size_t total = 0;
    for (const auto& e : s.entries) total += e.multiplicity;
    EXPECT_EQ(v.size(), total) << to_string(s.kind);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_GE(v[i], 0.0);
      if (i) EXPECT_LE(v[i], v[i - 1]);
    }
  }
  EXPECT_EQ(gaussian_sphere_spectrum(3, 1.0, 10).expanded(7).size(), 7u);
}

TEST(AlgebraicSpectrum, Values) {
  const KernelSpectrum s = algebraic_decay_spectrum(2.0, 5);
  for (const auto& e : s.entries) EXPECT_DOUBLE_EQ(e.eigenvalue, std::pow(1.0 + e.order, -2.0));
  EXPECT_THROW(algebraic_decay_spectrum(-1.0, 5), ConfigError);
}

}  // namespace
}  // namespace wlsq
