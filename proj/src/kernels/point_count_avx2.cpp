// Built with -mavx2; only reached when the CPU reports AVX2.
#include "valzeta/kernels/point_count.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

#include <stdexcept>

namespace valzeta::kernels::avx2 {

#if defined(__AVX2__)

namespace {

inline __m256i add_mod(__m256i a, __m256i b, __m256i p, __m256i p_minus_1) {
  const __m256i s = _mm256_add_epi32(a, b);
  const __m256i over = _mm256_cmpgt_epi32(s, p_minus_1);
  return _mm256_sub_epi32(s, _mm256_and_si256(over, p));
}

std::uint64_t eval(const Cubic& f, std::uint64_t x, std::uint64_t m) {
  std::uint64_t v = f[3];
  v = (v * x + f[2]) % m;
  v = (v * x + f[1]) % m;
  return (v * x + f[0]) % m;
}

}  // namespace

std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, std::span<const std::int32_t> table) {
  constexpr std::uint64_t kLanes = 8;
  const std::uint64_t m = p;
  const std::uint64_t blocks = m / kLanes;

  // Lane l walks x = l, l+8, l+16, ...; a cubic sampled with stride 8 has
  // constant third difference, so each step is three modular additions.
  alignas(32) std::int32_t v0[kLanes], d1[kLanes], d2[kLanes], d3[kLanes];
  for (std::uint64_t l = 0; l < kLanes; ++l) {
    const std::uint64_t f0 = eval(f, l, m), f1 = eval(f, l + 8, m);
    const std::uint64_t f2 = eval(f, l + 16, m), f3 = eval(f, l + 24, m);
    v0[l] = static_cast<std::int32_t>(f0);
    d1[l] = static_cast<std::int32_t>((f1 + m - f0) % m);
    d2[l] = static_cast<std::int32_t>((f2 + 2 * (m - f1) + f0) % m);
    d3[l] = static_cast<std::int32_t>((f3 + 3 * (m - f2) + 3 * f1 + (m - f0)) % m);
  }
  __m256i value = _mm256_load_si256(reinterpret_cast<const __m256i*>(v0));
  __m256i diff1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d1));
  __m256i diff2 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d2));
  const __m256i diff3 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d3));
  const __m256i vp = _mm256_set1_epi32(static_cast<std::int32_t>(p));
  const __m256i vp1 = _mm256_set1_epi32(static_cast<std::int32_t>(p - 1));
  __m256i acc = _mm256_setzero_si256();
  for (std::uint64_t b = 0; b < blocks; ++b) {
    acc = _mm256_add_epi32(acc, _mm256_i32gather_epi32(table.data(), value, 4));
    value = add_mod(value, diff1, vp, vp1);
    diff1 = add_mod(diff1, diff2, vp, vp1);
    diff2 = add_mod(diff2, diff3, vp, vp1);
  }
  alignas(32) std::int32_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t total = 0;
  for (std::int32_t lane : lanes) total += lane;
  for (std::uint64_t x = blocks * kLanes; x < m; ++x) total += table[eval(f, x, m)];
  return total;
}

#else

std::int64_t cubic_legendre_sum(std::uint32_t, const Cubic&, std::span<const std::int32_t>) {
  throw std::logic_error("AVX2 kernel not compiled for this target");
}

#endif

}  // namespace valzeta::kernels::avx2
