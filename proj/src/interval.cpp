#include "valzeta/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "valzeta/errors.hpp"

namespace valzeta {
namespace {

mpfr_prec_t joint_precision(const RealInterval& a, const RealInterval& b) {
  return std::max(a.precision(), b.precision());
}

// Directed binary op on endpoints.
template <typename Fn>
Real apply(Fn fn, const Real& x, const Real& y, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  fn(r.get(), x.get(), y.get(), rnd);
  return r;
}

}  // namespace

RealInterval::RealInterval(long v, PrecisionContext ctx)
    : lo_(v, ctx.bits(), MPFR_RNDD), hi_(v, ctx.bits(), MPFR_RNDU) {}

RealInterval::RealInterval(const mpq_class& q, PrecisionContext ctx)
    : lo_(real_from_rational(q, ctx.bits(), MPFR_RNDD)),
      hi_(real_from_rational(q, ctx.bits(), MPFR_RNDU)) {}

RealInterval::RealInterval(const mpz_class& z, PrecisionContext ctx)
    : lo_(real_from_integer(z, ctx.bits(), MPFR_RNDD)),
      hi_(real_from_integer(z, ctx.bits(), MPFR_RNDU)) {}

RealInterval::RealInterval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ <= hi_)) throw DomainError("interval endpoints out of order or NaN");
  if (hi_.precision() != lo_.precision()) {
    // Keep one precision per interval; widen the coarser endpoint's storage.
    const mpfr_prec_t p = std::max(lo_.precision(), hi_.precision());
    Real l(p), h(p);
    mpfr_set(l.get(), lo_.get(), MPFR_RNDD);
    mpfr_set(h.get(), hi_.get(), MPFR_RNDU);
    lo_ = std::move(l);
    hi_ = std::move(h);
  }
}

RealInterval RealInterval::from_double(double d, PrecisionContext ctx) {
  return RealInterval(real_from_double(d, ctx.bits(), MPFR_RNDD),
                      real_from_double(d, ctx.bits(), MPFR_RNDU));
}

RealInterval RealInterval::from_decimal(std::string_view text, PrecisionContext ctx) {
  const std::string s(text);
  Real lo(ctx.bits()), hi(ctx.bits());
  if (mpfr_set_str(lo.get(), s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(hi.get(), s.c_str(), 10, MPFR_RNDU) != 0 || !lo.is_finite()) {
    throw DomainError("not a finite decimal number: " + s);
  }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t p = joint_precision(a, b);
  Real lo(p), hi(p);
  mpfr_min(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval RealInterval::symmetric(const Real& radius) {
  Real lo(radius.precision()), hi(radius.precision());
  mpfr_neg(lo.get(), radius.get(), MPFR_RNDD);
  mpfr_set(hi.get(), radius.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

bool RealInterval::contains(const RealInterval& inner) const {
  return lo_ <= inner.lo_ && inner.hi_ <= hi_;
}

bool RealInterval::intersects(const RealInterval& other) const {
  return lo_ <= other.hi_ && other.lo_ <= hi_;
}

Real RealInterval::width() const {
  Real w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Real RealInterval::midpoint() const {
  Real m(precision());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  // Rounding can only push the midpoint onto an endpoint, never outside.
  if (m < lo_) m = lo_;
  if (m > hi_) m = hi_;
  return m;
}

Real RealInterval::magnitude() const {
  Real m(precision());
  mpfr_t a, b;
  mpfr_init2(a, precision());
  mpfr_init2(b, precision());
  mpfr_abs(a, lo_.get(), MPFR_RNDU);
  mpfr_abs(b, hi_.get(), MPFR_RNDU);
  mpfr_max(m.get(), a, b, MPFR_RNDU);
  mpfr_clear(a);
  mpfr_clear(b);
  return m;
}

Real RealInterval::mignitude() const {
  Real m(precision());
  if (contains_zero()) return m;
  if (lo_.sign() > 0) {
    mpfr_set(m.get(), lo_.get(), MPFR_RNDD);
  } else {
    mpfr_neg(m.get(), hi_.get(), MPFR_RNDD);
  }
  return m;
}

RealInterval RealInterval::operator-() const {
  Real lo(precision()), hi(precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t p = joint_precision(a, b);
  return RealInterval(apply(mpfr_add, a.lo_, b.lo_, p, MPFR_RNDD),
                      apply(mpfr_add, a.hi_, b.hi_, p, MPFR_RNDU));
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t p = joint_precision(a, b);
  return RealInterval(apply(mpfr_sub, a.lo_, b.hi_, p, MPFR_RNDD),
                      apply(mpfr_sub, a.hi_, b.lo_, p, MPFR_RNDU));
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t p = joint_precision(a, b);
  // Four endpoint products; min rounded down, max rounded up. Zero times an
  // endpoint is exactly zero in MPFR so [0,0]*[-9,9] stays [0,0].
  const Real* xs[2] = {&a.lo_, &a.hi_};
  const Real* ys[2] = {&b.lo_, &b.hi_};
  Real lo(p), hi(p), t(p);
  bool first = true;
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw DivisionByZeroInterval("interval divisor contains zero");
  const mpfr_prec_t p = joint_precision(a, b);
  const Real* xs[2] = {&a.lo_, &a.hi_};
  const Real* ys[2] = {&b.lo_, &b.hi_};
  Real lo(p), hi(p), t(p);
  bool first = true;
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval& RealInterval::operator+=(const RealInterval& b) { return *this = *this + b; }
RealInterval& RealInterval::operator-=(const RealInterval& b) { return *this = *this - b; }
RealInterval& RealInterval::operator*=(const RealInterval& b) { return *this = *this * b; }
RealInterval& RealInterval::operator/=(const RealInterval& b) { return *this = *this / b; }

RealInterval operator*(const RealInterval& a, long b) {
  const mpfr_prec_t p = a.precision();
  Real lo(p), hi(p);
  if (b >= 0) {
    mpfr_mul_si(lo.get(), a.lo_.get(), b, MPFR_RNDD);
    mpfr_mul_si(hi.get(), a.hi_.get(), b, MPFR_RNDU);
  } else {
    mpfr_mul_si(lo.get(), a.hi_.get(), b, MPFR_RNDD);
    mpfr_mul_si(hi.get(), a.lo_.get(), b, MPFR_RNDU);
  }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator/(const RealInterval& a, long b) {
  if (b == 0) throw DivisionByZeroInterval("division by integer zero");
  const mpfr_prec_t p = a.precision();
  Real lo(p), hi(p);
  if (b > 0) {
    mpfr_div_si(lo.get(), a.lo_.get(), b, MPFR_RNDD);
    mpfr_div_si(hi.get(), a.hi_.get(), b, MPFR_RNDU);
  } else {
    mpfr_div_si(lo.get(), a.hi_.get(), b, MPFR_RNDD);
    mpfr_div_si(hi.get(), a.lo_.get(), b, MPFR_RNDU);
  }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator+(const RealInterval& a, long b) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_add_si(lo.get(), a.lo_.get(), b, MPFR_RNDD);
  mpfr_add_si(hi.get(), a.hi_.get(), b, MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator-(const RealInterval& a, long b) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_sub_si(lo.get(), a.lo_.get(), b, MPFR_RNDD);
  mpfr_sub_si(hi.get(), a.hi_.get(), b, MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval operator-(long a, const RealInterval& b) {
  Real lo(b.precision()), hi(b.precision());
  mpfr_si_sub(lo.get(), a, b.hi_.get(), MPFR_RNDD);
  mpfr_si_sub(hi.get(), a, b.lo_.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

std::optional<RealInterval> intersect(const RealInterval& a, const RealInterval& b) {
  if (!a.intersects(b)) return std::nullopt;
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  Real lo(p), hi(p);
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval sqr(const RealInterval& a) {
  const mpfr_prec_t p = a.precision();
  Real lo(p), hi(p);
  if (a.contains_zero()) {
    mpfr_set_zero(lo.get(), 1);
    Real m = a.magnitude();
    mpfr_sqr(hi.get(), m.get(), MPFR_RNDU);
  } else {
    Real small = a.mignitude();
    Real big = a.magnitude();
    mpfr_sqr(lo.get(), small.get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), big.get(), MPFR_RNDU);
  }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval abs(const RealInterval& a) {
  return RealInterval(a.mignitude(), a.magnitude());
}

RealInterval pow_int(const RealInterval& a, long n) {
  if (n == 0) return RealInterval(1L, a.context());
  if (n < 0) {
    if (a.contains_zero()) throw DivisionByZeroInterval("negative power of interval containing zero");
    return RealInterval(1L, a.context()) / pow_int(a, -n);
  }
  const mpfr_prec_t p = a.precision();
  Real lo(p), hi(p);
  if (n % 2 == 0) {
    Real small = a.mignitude();
    Real big = a.magnitude();
    mpfr_pow_si(lo.get(), small.get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), big.get(), n, MPFR_RNDU);
  } else {
    // Odd powers are monotone increasing.
    mpfr_pow_si(lo.get(), a.lo().get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), a.hi().get(), n, MPFR_RNDU);
  }
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval ldexp(const RealInterval& a, long e) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_mul_2si(lo.get(), a.lo().get(), e, MPFR_RNDD);
  mpfr_mul_2si(hi.get(), a.hi().get(), e, MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

RealInterval round_to(const RealInterval& a, PrecisionContext ctx) {
  Real lo(ctx.bits()), hi(ctx.bits());
  mpfr_set(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), a.hi().get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

int decimal_digits_for(mpfr_prec_t prec) {
  // ceil(prec * log10(2)) + 1 digits separate adjacent binary values.
  return static_cast<int>(prec * 0.30102999566398120) + 2;
}

std::string to_decimal(const Real& x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(x.get())) return "nan";
  if (mpfr_inf_p(x.get())) return x.sign() > 0 ? "inf" : "-inf";
  if (x.is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x.get(), rnd);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (!mant.empty() && mant.front() == '-') {
    out.push_back('-');
    mant.erase(mant.begin());
  }
  // mpfr_get_str returns 0.DDDD * 10^exp10; re-express as D.DDD * 10^(exp10-1).
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  out.push_back(mant.front());
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%+ld", static_cast<long>(exp10 - 1));
  out.append(buf);
  return out;
}

}  // namespace valzeta
