#pragma once

#include <cstdint>

#include "valzeta/character.hpp"
#include "valzeta/enclosure.hpp"

namespace valzeta {

/// Series length m and A = pi/Delta for the L(1, chi_Delta) expansion.
struct L1Params {
  unsigned m;
  RealInterval A;
};

/// Prefactor used for erfc inside the L(1) series. Only the standard
/// 2/sqrt(pi) reproduces the class-number formula; the 2/pi variant exists
/// so that tests can show it does not.
enum class ErfcPrefactor { TwoOverSqrtPi, TwoOverPi };

/// L(1, chi) for the Kronecker character of Q(sqrt(D)), D squarefree >= 2:
///
///   L(1,chi) = Delta^(-1/2) sum_{n<=m} chi(n) E1(A n^2)
///            + sum_{n<=m} chi(n)/n erfc(n sqrt(A)) + R_m,
///   |R_m| < Delta^(3/2)/pi^2 * e^(-A m^2) / m^3,    A = pi/Delta.
Enclosure l_one_quadratic(std::uint64_t D, unsigned m, PrecisionContext ctx,
                          ErfcPrefactor prefactor = ErfcPrefactor::TwoOverSqrtPi);

/// sum_{n<=N} chi(n) n^-s plus a disc of radius N^(1-sigma)/(sigma-1),
/// sigma = Re(s).lo, from |chi| <= 1. Requires Re(s).lo > 1 and N >= 2.
Enclosure l_truncated(const DirichletCharacter& chi, const ComplexBox& s, std::uint64_t N,
                      PrecisionContext ctx);

}  // namespace valzeta
