#include "valzeta/kernels/point_count.hpp"

namespace valzeta::kernels::scalar {

std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, std::span<const std::int32_t> table) {
  std::int64_t total = 0;
  const std::uint64_t m = p;
  for (std::uint64_t x = 0; x < m; ++x) {
    // Horner, reduced after every step.
    std::uint64_t v = f[3];
    v = (v * x + f[2]) % m;
    v = (v * x + f[1]) % m;
    v = (v * x + f[0]) % m;
    total += table[v];
  }
  return total;
}

}  // namespace valzeta::kernels::scalar
