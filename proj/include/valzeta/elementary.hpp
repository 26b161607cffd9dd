#pragma once

#include "valzeta/complex_box.hpp"
#include "valzeta/interval.hpp"

namespace valzeta {

// Endpoint enclosures come from MPFR's correctly rounded functions with
// directed rounding, so each endpoint is off by at most one ulp in the
// outward direction. Monotone functions are evaluated at the endpoints;
// sin and cos additionally include +-1 whenever a critical point k*pi/2
// may lie in the argument.

RealInterval exp(const RealInterval& x);
/// Requires x.lo > 0; throws DomainError otherwise.
RealInterval log(const RealInterval& x);
/// Requires x.lo >= 0; throws DomainError otherwise.
RealInterval sqrt(const RealInterval& x);
RealInterval sin(const RealInterval& x);
RealInterval cos(const RealInterval& x);
RealInterval atan(const RealInterval& x);

/// log(n) for a positive integer n.
RealInterval log_of(long n, PrecisionContext ctx);

/// Enclosure of pi via Machin's formula pi = 16 atan(1/5) - 4 atan(1/239),
/// each arctangent summed as an alternating series whose truncation error
/// is at most the first omitted term. Width <= 2 ulp at ctx precision.
RealInterval pi_enclosure(PrecisionContext ctx);

/// Euler-Mascheroni constant from a stored 50-digit decimal expansion
/// (truncation error < 1e-50), widened by one ulp on each side. Valid as an
/// enclosure at any precision; its width stops shrinking near 166 bits.
RealInterval euler_gamma_enclosure(PrecisionContext ctx);

/// exp(z) = e^re (cos im + i sin im).
ComplexBox exp(const ComplexBox& z);
/// n^{-s} for integer n >= 1.
ComplexBox inverse_power(long n, const ComplexBox& s);
/// x^y for x > 0.
RealInterval pow(const RealInterval& x, const RealInterval& y);

}  // namespace valzeta
