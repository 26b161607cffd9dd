#include <cstdlib>
#include <cstring>

#include "valzeta/errors.hpp"
#include "valzeta/kernels/point_count.hpp"

namespace valzeta::kernels {

std::string_view to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar: return "scalar";
    case SimdLevel::Avx2: return "avx2";
  }
  return "scalar";
}

SimdLevel detected_simd_level() {
#if defined(VALZETA_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return SimdLevel::Avx2;
#endif
  return SimdLevel::Scalar;
}

SimdLevel active_simd_level() {
  const char* forced = std::getenv("VALZETA_SIMD");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return SimdLevel::Scalar;
  return detected_simd_level();
}

bool simd_level_available(SimdLevel level) {
  return level == SimdLevel::Scalar || detected_simd_level() == SimdLevel::Avx2;
}

std::vector<std::int32_t> legendre_table(std::uint32_t p) {
  std::vector<std::int32_t> table(p, -1);
  table[0] = 0;
  for (std::uint64_t y = 1; 2 * y < p; ++y) table[y * y % p] = 1;
  return table;
}

std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, std::span<const std::int32_t> table,
                                SimdLevel level) {
  if (p < 3 || p % 2 == 0 || p > kMaxKernelPrime) {
    throw DomainError("residue-sum kernel needs an odd prime below 2^26");
  }
  if (table.size() != p) throw DomainError("Legendre table size must equal p");
  for (std::uint32_t c : f) {
    if (c >= p) throw DomainError("cubic coefficients must be reduced mod p");
  }
  if (level == SimdLevel::Avx2 && simd_level_available(SimdLevel::Avx2)) {
    return avx2::cubic_legendre_sum(p, f, table);
  }
  return scalar::cubic_legendre_sum(p, f, table);
}

std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, SimdLevel level) {
  if (p < 3 || p % 2 == 0 || p > kMaxKernelPrime) {
    throw DomainError("residue-sum kernel needs an odd prime below 2^26");
  }
  const auto table = legendre_table(p);
  return cubic_legendre_sum(p, f, table, level);
}

}  // namespace valzeta::kernels
