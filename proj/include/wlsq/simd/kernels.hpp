// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace wlsq::simd {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

// Inner-loop kernels of the Monte Carlo engine. Complex arrays are interleaved (re, im);
// matrices are row-major.
struct KernelTable {
  Isa isa;
  // y = A x, A is rows x cols
  void (*cmatvec)(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y);
  // sum |a_i - b_i|^2
  double (*sq_dist)(const cplx* a, const cplx* b, std::size_t n);
  // sum |a_i|^2
  double (*sq_norm)(const cplx* a, std::size_t n);
};

bool isa_supported(Isa isa) noexcept;

// Throws std::invalid_argument if the ISA was not compiled in or the CPU lacks it.
const KernelTable& kernels_for(Isa isa);

// Best supported table. Setting WLSQ_SIMD=scalar in the environment forces the reference path.
const KernelTable& active_kernels();

namespace scalar {
void cmatvec(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y);
double sq_dist(const cplx* a, const cplx* b, std::size_t n);
double sq_norm(const cplx* a, std::size_t n);
}  // namespace scalar

#if defined(WLSQ_HAVE_AVX2)
namespace avx2 {
void cmatvec(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y);
double sq_dist(const cplx* a, const cplx* b, std::size_t n);
double sq_norm(const cplx* a, std::size_t n);
}  // namespace avx2
#endif

}  // namespace wlsq::simd
