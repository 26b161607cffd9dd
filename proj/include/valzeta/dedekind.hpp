#pragma once

#include <cstdint>

#include "valzeta/character.hpp"
#include "valzeta/exact.hpp"
#include "valzeta/riemann_zeta.hpp"

namespace valzeta {

/// Q(sqrt(D)) for squarefree D >= 2.
class RealQuadraticField {
 public:
  explicit RealQuadraticField(std::uint64_t D) : disc_(D), chi_(DirichletCharacter::kronecker(disc_.delta())) {}

  std::uint64_t d() const { return disc_.d(); }
  std::int64_t delta() const { return disc_.delta(); }
  const DirichletCharacter& character() const { return chi_; }

 private:
  QuadraticDiscriminant disc_;
  DirichletCharacter chi_;
};

/// zeta_K(-1) for K = Q(sqrt(p)), p prime = 1 (mod 4):
///   2 zeta_K(-1) = (1/15) sum_{b odd, b^2 < p} sigma1((p - b^2)/4).
/// Throws DomainError (NotPrime) otherwise.
Rational siegel_zeta_minus1(std::uint64_t p);

/// Volume of the Hilbert modular orbifold, 2 zeta_K(-1).
Rational hilbert_volume(std::uint64_t p);

/// Number of ideals of norm n: r_K(n) = sum_{d | n} chi_Delta(d).
std::uint64_t ideal_count(const RealQuadraticField& K, std::uint64_t n);

enum class DedekindMode { Product, Direct };

struct DedekindParams {
  EMParams zeta{32, 6};
  /// Terms of the truncated L(s, chi_Delta) in product mode.
  std::uint64_t l_terms = 10000;
  /// Terms of sum r_K(n) n^-s in direct mode.
  std::uint64_t direct_terms = 10000;
};

/// zeta_K(s) for real s > 1.
///  Product: zeta(s) L(s, chi_Delta).
///  Direct:  sum_{n<=N} r_K(n) n^-s + 2 N^(3/2-sigma)/(sigma-3/2), using
///           r_K(n) <= sigma0(n) <= 2 sqrt(n); needs sigma > 3/2.
Enclosure dedekind_enclosure(const RealQuadraticField& K, const RealInterval& s, DedekindMode mode,
                             const DedekindParams& params, PrecisionContext ctx);

}  // namespace valzeta
