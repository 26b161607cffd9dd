#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>

#include "valzeta/precision.hpp"
#include "valzeta/real.hpp"

namespace valzeta {

/// Closed real interval [lo, hi] with outward-rounded MPFR endpoints.
///
/// Every operation returns an interval containing the exact image of its
/// operands: lower endpoints are rounded toward -inf and upper endpoints
/// toward +inf. Results are computed at the larger of the operands'
/// precisions.
class RealInterval {
 public:
  /// Degenerate interval [v, v]; integers up to 2^prec are exact.
  RealInterval(long v, PrecisionContext ctx);
  /// Smallest interval of the context's precision containing q.
  RealInterval(const mpq_class& q, PrecisionContext ctx);
  RealInterval(const mpz_class& z, PrecisionContext ctx);
  /// Takes ownership of the endpoints. Requires lo <= hi.
  RealInterval(Real lo, Real hi);

  static RealInterval from_double(double d, PrecisionContext ctx);
  /// Outward enclosure of a decimal literal such as "0.1" or "1e-12".
  static RealInterval from_decimal(std::string_view text, PrecisionContext ctx);
  static RealInterval hull(const RealInterval& a, const RealInterval& b);
  /// [-r, r] for r >= 0.
  static RealInterval symmetric(const Real& radius);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }
  PrecisionContext context() const { return PrecisionContext(precision()); }

  bool contains(const RealInterval& inner) const;
  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool is_point() const { return lo_ == hi_; }
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }
  bool intersects(const RealInterval& other) const;

  /// hi - lo rounded up.
  Real width() const;
  /// Nearest-rounded midpoint; lies inside the interval.
  Real midpoint() const;
  /// Upper bound on max |x|.
  Real magnitude() const;
  /// Lower bound on min |x|.
  Real mignitude() const;

  RealInterval operator-() const;
  RealInterval& operator+=(const RealInterval& b);
  RealInterval& operator-=(const RealInterval& b);
  RealInterval& operator*=(const RealInterval& b);
  RealInterval& operator/=(const RealInterval& b);

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  /// Throws DivisionByZeroInterval when 0 is in b.
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);

  friend RealInterval operator*(const RealInterval& a, long b);
  friend RealInterval operator*(long a, const RealInterval& b) { return b * a; }
  friend RealInterval operator/(const RealInterval& a, long b);
  friend RealInterval operator+(const RealInterval& a, long b);
  friend RealInterval operator-(const RealInterval& a, long b);
  friend RealInterval operator-(long a, const RealInterval& b);

 private:
  Real lo_;
  Real hi_;
};

std::optional<RealInterval> intersect(const RealInterval& a, const RealInterval& b);

/// Tight square (lower endpoint >= 0 even when 0 is inside).
RealInterval sqr(const RealInterval& a);
RealInterval abs(const RealInterval& a);
/// a^n for integer n; negative n requires 0 not in a.
RealInterval pow_int(const RealInterval& a, long n);
/// Multiply by 2^e exactly (no rounding unless under/overflow).
RealInterval ldexp(const RealInterval& a, long e);
/// Same interval rounded outward to `ctx` precision.
RealInterval round_to(const RealInterval& a, PrecisionContext ctx);

}  // namespace valzeta
