#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "valzeta/enclosure.hpp"
#include "valzeta/errors.hpp"
#include "valzeta/exact.hpp"

namespace valzeta {

/// Raised by evaluators that need a nonsingular model (Delta != 0).
class SingularModel : public DomainError {
 public:
  using DomainError::DomainError;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with the usual derived
/// quantities. The model is used as given; no minimal-model reduction is
/// attempted, so "bad primes" are the primes dividing this model's Delta.
struct WeierstrassCurve {
  BigInt a1, a2, a3, a4, a6;
  BigInt b2, b4, b6, b8;
  BigInt c4, c6;
  BigInt discriminant;
  /// c4^3 / Delta; empty when Delta = 0.
  std::optional<Rational> j;

  bool is_elliptic() const { return discriminant != 0; }
};

/// Computes b2..b8, c4, c6, Delta and j exactly and checks
/// 4 b8 = b2 b6 - b4^2 and 1728 Delta = c4^3 - c6^2. A singular model is
/// returned with is_elliptic() false.
WeierstrassCurve derive_quantities(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& a4,
                                   const BigInt& a6);

/// Parses "a1,a2,a3,a4,a6".
WeierstrassCurve parse_curve(std::string_view text);

/// Points of the reduced cubic over F_p including the point at infinity
/// (and the singular point, if any).
std::uint64_t count_points(const WeierstrassCurve& E, std::uint64_t p);

enum class ReductionKind { Good, Cusp, SplitNode, NonsplitNode };
std::string_view to_string(ReductionKind kind);

struct ReductionInfo {
  std::uint64_t p;
  std::uint64_t points;  // A_p
  std::int64_t trace;    // t_p
  ReductionKind kind;
};

/// Good reduction: t_p = 1 + p - A_p. Bad reduction: t_p = 0 (cusp),
/// 1 (split node), -1 (nonsplit node) from the tangent cone at the
/// singular point.
ReductionInfo trace(const WeierstrassCurve& E, std::uint64_t p);

/// (1 - t p^-s + p^(1-2s)) / ((1 - p^-s)(1 - p^(1-s))) at a good prime.
Enclosure local_zeta(const WeierstrassCurve& E, std::uint64_t p, const ComplexBox& s, PrecisionContext ctx);
/// Same expression as an exact rational for integer s >= 2.
Rational local_zeta_exact(const WeierstrassCurve& E, std::uint64_t p, unsigned s);

/// B = 2 N^(3/2-sigma) / ((sigma - 3/2)(1 - 2^(1/2-sigma))); the product of
/// local factors over primes p > N lies in [exp(-B), exp(B)].
RealInterval hasse_weil_tail_bound(const RealInterval& sigma, std::uint64_t N, PrecisionContext ctx);

/// Product of local factors over primes p <= N, ascending, times the tail
/// factor. The remainder radius is B (in log scale). Requires
/// s.lo > 3/2 + 1e-6 and N >= 3.
Enclosure hasse_weil_partial(const WeierstrassCurve& E, const RealInterval& s, std::uint64_t N,
                             PrecisionContext ctx);

}  // namespace valzeta
