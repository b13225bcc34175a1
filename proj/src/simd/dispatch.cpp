// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "wlsq/simd/kernels.hpp"

namespace wlsq::simd {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::cmatvec, &scalar::sq_dist, &scalar::sq_norm};
#if defined(WLSQ_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::cmatvec, &avx2::sq_dist, &avx2::sq_norm};
#endif

bool scalar_forced() {
  const char* env = std::getenv("WLSQ_SIMD");
  return env && std::string(env) == "scalar";
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(WLSQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa))
    throw std::invalid_argument("kernel ISA not available: " + std::string(to_string(isa)));
#if defined(WLSQ_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [&]() -> const KernelTable& {
    if (!scalar_forced() && isa_supported(Isa::Avx2)) return kernels_for(Isa::Avx2);
    return kScalar;
  }();
  return table;
}

}  // namespace wlsq::simd
