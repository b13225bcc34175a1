// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

// Compiled with -mavx2 -mfma; only reached after a runtime cpuid check.

#include <immintrin.h>

#include "wlsq/simd/kernels.hpp"

namespace wlsq::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void cmatvec(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const std::size_t pairs = cols / 2;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto* ad = reinterpret_cast<const double*>(a + r * cols);
    // direct:  (ar xr, ai xi, ...)   swapped: (ar xi, ai xr, ...)
    __m256d direct = _mm256_setzero_pd();
    __m256d swapped = _mm256_setzero_pd();
    for (std::size_t k = 0; k < pairs; ++k) {
      const __m256d av = _mm256_loadu_pd(ad + 4 * k);
      const __m256d xv = _mm256_loadu_pd(xd + 4 * k);
      direct = _mm256_fmadd_pd(av, xv, direct);
      swapped = _mm256_fmadd_pd(av, _mm256_permute_pd(xv, 0b0101), swapped);
    }
    alignas(32) double d[4], s[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(s, swapped);
    double re = (d[0] - d[1]) + (d[2] - d[3]);
    double im = (s[0] + s[1]) + (s[2] + s[3]);
    if (cols % 2) {
      const cplx av = a[r * cols + cols - 1], xv = x[cols - 1];
      re += av.real() * xv.real() - av.imag() * xv.imag();
      im += av.real() * xv.imag() + av.imag() * xv.real();
    }
    y[r] = {re, im};
  }
}

double sq_dist(const cplx* a, const cplx* b, std::size_t n) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const auto* bd = reinterpret_cast<const double*>(b);
  const std::size_t len = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ad + i), _mm256_loadu_pd(bd + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double tail = 0.0;
  for (; i < len; ++i) tail += (ad[i] - bd[i]) * (ad[i] - bd[i]);
  return hsum(acc) + tail;
}

double sq_norm(const cplx* a, std::size_t n) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const std::size_t len = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d v = _mm256_loadu_pd(ad + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double tail = 0.0;
  for (; i < len; ++i) tail += ad[i] * ad[i];
  return hsum(acc) + tail;
}

}  // namespace wlsq::simd::avx2
