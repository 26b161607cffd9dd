#include "valzeta/elementary.hpp"

#include <gmpxx.h>

#include "valzeta/errors.hpp"

namespace valzeta {
namespace {

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

RealInterval monotone_increasing(MpfrUnary fn, const RealInterval& x) {
  Real lo(x.precision()), hi(x.precision());
  fn(lo.get(), x.lo().get(), MPFR_RNDD);
  fn(hi.get(), x.hi().get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

Real clamp_unit(Real v, int side_sign) {
  // Rounded cos/sin values never exceed 1 in magnitude but guard anyway.
  Real one(side_sign, v.precision());
  if (side_sign > 0 && v > one) return one;
  if (side_sign < 0 && v < one) return one;
  return v;
}

// Enclosure of cos (or sin) on x. Extremes of cos sit at k*pi, of sin at
// pi/2 + k*pi.
RealInterval trig(const RealInterval& x, bool is_sin) {
  const mpfr_prec_t p = x.precision();
  const PrecisionContext ctx(p);
  // q encloses x/pi (minus 1/2 for sine); critical points are integer q.
  RealInterval q = x / pi_enclosure(ctx);
  if (is_sin) q = q - RealInterval(mpq_class(1, 2), ctx);
  Real q_width = q.width();
  if (q_width.to_double(MPFR_RNDU) >= 2.0) {
    return RealInterval(Real(-1, p), Real(1, p));
  }
  MpfrUnary fn = is_sin ? static_cast<MpfrUnary>(mpfr_sin) : static_cast<MpfrUnary>(mpfr_cos);
  Real a_lo(p), a_hi(p), b_lo(p), b_hi(p);
  fn(a_lo.get(), x.lo().get(), MPFR_RNDD);
  fn(a_hi.get(), x.lo().get(), MPFR_RNDU);
  fn(b_lo.get(), x.hi().get(), MPFR_RNDD);
  fn(b_hi.get(), x.hi().get(), MPFR_RNDU);
  Real lo = min_of(a_lo, b_lo);
  Real hi = max_of(a_hi, b_hi);

  mpz_class k_first, k_last;
  Real t(p);
  mpfr_ceil(t.get(), q.lo().get());
  mpfr_get_z(k_first.get_mpz_t(), t.get(), MPFR_RNDN);
  mpfr_floor(t.get(), q.hi().get());
  mpfr_get_z(k_last.get_mpz_t(), t.get(), MPFR_RNDN);
  for (mpz_class k = k_first; k <= k_last; ++k) {
    // cos(k*pi) and sin(pi/2 + k*pi) are both (-1)^k.
    if (mpz_even_p(k.get_mpz_t())) {
      hi = Real(1, p);
    } else {
      lo = Real(-1, p);
    }
  }
  return RealInterval(clamp_unit(std::move(lo), -1), clamp_unit(std::move(hi), 1));
}

RealInterval atan_inverse_integer(long q, mpfr_prec_t wp) {
  // atan(1/q) = sum_k (-1)^k / ((2k+1) q^(2k+1)), terms strictly decreasing.
  const PrecisionContext ctx(wp);
  RealInterval sum(0L, ctx);
  mpz_class qpow = q;
  const mpz_class q2 = mpz_class(q) * q;
  Real threshold(1, wp);
  mpfr_div_2si(threshold.get(), threshold.get(), wp + 4, MPFR_RNDN);
  for (long k = 0;; ++k) {
    const RealInterval term(mpq_class(1, mpz_class(2 * k + 1) * qpow), ctx);
    if (term.hi() < threshold) {
      return sum + RealInterval::symmetric(term.hi());
    }
    sum = (k % 2 == 0) ? sum + term : sum - term;
    qpow *= q2;
  }
}

}  // namespace

RealInterval exp(const RealInterval& x) { return monotone_increasing(mpfr_exp, x); }

RealInterval log(const RealInterval& x) {
  if (x.lo().sign() <= 0) throw DomainError("log requires a positive interval");
  return monotone_increasing(mpfr_log, x);
}

RealInterval sqrt(const RealInterval& x) {
  if (x.lo().sign() < 0) throw DomainError("sqrt requires a nonnegative interval");
  return monotone_increasing(mpfr_sqrt, x);
}

RealInterval sin(const RealInterval& x) { return trig(x, true); }
RealInterval cos(const RealInterval& x) { return trig(x, false); }
RealInterval atan(const RealInterval& x) { return monotone_increasing(mpfr_atan, x); }

RealInterval log_of(long n, PrecisionContext ctx) {
  if (n <= 0) throw DomainError("log of nonpositive integer");
  if (n == 1) return RealInterval(0L, ctx);
  Real lo(ctx.bits()), hi(ctx.bits());
  mpfr_t v;
  mpfr_init2(v, 64);
  mpfr_set_si(v, n, MPFR_RNDN);  // exact: n fits in 64 bits
  mpfr_log(lo.get(), v, MPFR_RNDD);
  mpfr_log(hi.get(), v, MPFR_RNDU);
  mpfr_clear(v);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval pi_enclosure(PrecisionContext ctx) {
  const mpfr_prec_t wp = ctx.bits() + 32;
  const RealInterval machin = atan_inverse_integer(5, wp) * 16L - atan_inverse_integer(239, wp) * 4L;
  return round_to(machin, ctx);
}

RealInterval euler_gamma_enclosure(PrecisionContext ctx) {
  // First 50 decimals of gamma (OEIS A001620): 0.57721 56649 01532 86060 65120
  // 90082 40243 10421 59335 93992 35988...; the truncated string is below the
  // true value by less than 1e-50.
  static constexpr const char* kDigits = "0.57721566490153286060651209008240243104215933593992";
  const mpfr_prec_t p = ctx.bits();
  Real lo(p), hi(p), err(p);
  mpfr_set_str(lo.get(), kDigits, 10, MPFR_RNDD);
  mpfr_set_str(hi.get(), kDigits, 10, MPFR_RNDU);
  mpfr_set_str(err.get(), "1e-50", 10, MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), err.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), err.get(), MPFR_RNDU);
  mpfr_nextbelow(lo.get());
  mpfr_nextabove(hi.get());
  return RealInterval(std::move(lo), std::move(hi));
}

ComplexBox exp(const ComplexBox& z) {
  const RealInterval scale = exp(z.re());
  if (z.is_real()) return ComplexBox(scale, z.im());
  return ComplexBox(scale * cos(z.im()), scale * sin(z.im()));
}

ComplexBox inverse_power(long n, const ComplexBox& s) {
  if (n == 1) return ComplexBox(1, 0, s.context());
  const RealInterval ln = log_of(n, s.context());
  return exp(-(s * ln));
}

RealInterval pow(const RealInterval& x, const RealInterval& y) {
  return exp(y * log(x));
}

}  // namespace valzeta
