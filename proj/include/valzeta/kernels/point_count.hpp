#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace valzeta::kernels {

/// Instruction-set variants of the residue-sum kernel. Every variant returns
/// bit-identical results; the scalar loop is the reference.
enum class SimdLevel { Scalar, Avx2 };

std::string_view to_string(SimdLevel level);

/// Best level the running CPU supports.
SimdLevel detected_simd_level();
/// detected_simd_level(), unless the environment variable VALZETA_SIMD is
/// set to "scalar".
SimdLevel active_simd_level();
bool simd_level_available(SimdLevel level);

/// Largest prime the kernel accepts. Keeps every intermediate (sums of two
/// reduced residues) inside a signed 32-bit lane.
inline constexpr std::uint32_t kMaxKernelPrime = 1u << 26;

/// table[v] = Legendre symbol (v/p) for 0 <= v < p, odd prime p.
std::vector<std::int32_t> legendre_table(std::uint32_t p);

/// Cubic c[3] x^3 + c[2] x^2 + c[1] x + c[0] with coefficients already
/// reduced mod p.
using Cubic = std::array<std::uint32_t, 4>;

/// sum_{x=0}^{p-1} (f(x)/p) for an odd prime p <= kMaxKernelPrime.
/// The caller supplies legendre_table(p).
std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, std::span<const std::int32_t> table,
                                SimdLevel level);
std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, SimdLevel level = active_simd_level());

namespace scalar {
std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, std::span<const std::int32_t> table);
}
namespace avx2 {
std::int64_t cubic_legendre_sum(std::uint32_t p, const Cubic& f, std::span<const std::int32_t> table);
}

}  // namespace valzeta::kernels
