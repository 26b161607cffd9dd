#pragma once

#include <optional>

#include "valzeta/enclosure.hpp"
#include "valzeta/exact.hpp"

namespace valzeta {

/// Euler-Maclaurin cut point N and number of Bernoulli correction terms k.
struct EMParams {
  unsigned N = 32;
  unsigned k = 6;

  friend bool operator==(const EMParams&, const EMParams&) = default;
};

struct ZetaEnclosure : Enclosure {
  /// S(N-1,s) + B(N,k,s) before the remainder disc was added.
  ComplexBox approximation;
  EMParams params;
  mpfr_prec_t precision;
  /// Set by zeta_auto when the requested width was reached.
  bool target_met = true;
};

/// zeta(s) for Re(s) >= 1 by Euler-Maclaurin summation:
///
///   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
///           + sum_{j=1}^{k} B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1) + R
///
/// with |R| <= |s+2k+1|/(sigma+2k+1) * |(k+1)-th correction term|; the
/// factor is taken at its maximum over the box.
///
/// Throws DomainError when Re(s).lo < 1 and PoleProximity when 1 is in s.
ZetaEnclosure zeta_em(const ComplexBox& s, EMParams params, PrecisionContext ctx);

/// Doubles N, increments k and adds 32 bits per round (at most 40 rounds,
/// N capped at 2^20) until width <= target_width. On failure returns the
/// last enclosure with target_met = false.
ZetaEnclosure zeta_auto(const ComplexBox& s, const Real& target_width, PrecisionContext ctx);

/// r with zeta(2n) = r * pi^(2n), r = 2^(2n) (-1)^(n+1) B_2n / (2 (2n)!).
Rational zeta_even(unsigned n);
RealInterval zeta_even_enclosure(unsigned n, PrecisionContext ctx);

/// Exact zeta(a) for integers a <= 0: zeta(-2n) = 0 and
/// zeta(1-2m) = -B_2m/(2m); zeta(0) = B_1 = -1/2. Throws DomainError for a > 0.
Rational zeta_neg(long a);

/// vol M(2,1) = (1 - 2^(3-2g)) zeta(2g-2) / (2^(g-2) pi^(2g-2)), exact.
Rational moduli_volume(unsigned g);
Enclosure moduli_volume_enclosure(unsigned g, PrecisionContext ctx);

/// Exact check of zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) at
/// s = 1-2m, where Gamma(2m) = (2m-1)!, sin = (-1)^m and the pi powers cancel.
bool functional_eq_check(unsigned m);

}  // namespace valzeta
