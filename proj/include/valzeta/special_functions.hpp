#pragma once

#include "valzeta/interval.hpp"

namespace valzeta {

enum class SpecialFnMethod { Series, TwoSidedBound };

struct SpecialFnEnclosure {
  RealInterval value;
  /// Method used for the larger (upper-endpoint) argument.
  SpecialFnMethod method;
};

/// E1(x) = int_x^inf e^-t / t dt on x with x.lo > 0 (DomainError otherwise).
///
/// x <= 1: -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!); terms decrease
///         in modulus, so the tail is bounded by the first omitted term.
/// x > 1:  e^-x ln(1 + 2/x) / 2 <= E1(x) <= e^-x ln(1 + 1/x), intersected with
///         the bracket between consecutive convergents of
///         e^x E1(x) = 1/(x+ 1/(1+ 1/(x+ 2/(1+ 2/(x+ ...))))).
///         All partial numerators and denominators are positive, so even and
///         odd convergents enclose the value from both sides.
SpecialFnEnclosure exp_integral(const RealInterval& x);

/// erfc(x) = (2/sqrt(pi)) int_x^inf e^(-t^2) dt on x with x.lo >= 0.
///
/// x <= 1: 1 - (2/sqrt(pi)) sum_k (-1)^k x^(2k+1) / (k! (2k+1)), alternating
///         with decreasing terms.
/// x > 1:  (2/sqrt(pi)) e^(-x^2) / (x + sqrt(x^2+2)) <= erfc(x)
///         <= (2/sqrt(pi)) e^(-x^2) / (x + sqrt(x^2 + 4/pi)), intersected with
///         consecutive convergents of
///         sqrt(pi) e^(x^2) erfc(x) = 1/(x+ (1/2)/(x+ 1/(x+ (3/2)/(x+ ...)))).
SpecialFnEnclosure erfc_enclosure(const RealInterval& x);

}  // namespace valzeta
