#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace valzeta {

/// Owning handle for one MPFR floating value. Precision is fixed at
/// construction; assignment from another Real rounds to nearest into the
/// destination's precision, so callers that need directed rounding go
/// through the free functions taking an explicit mpfr_rnd_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(value_, prec); mpfr_set_zero(value_, 1); }
  Real(long v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) : Real(prec) {
    mpfr_set_si(value_, v, rnd);
  }
  Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~Real() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

  friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

inline Real real_from_rational(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), rnd);
  return r;
}

inline Real real_from_integer(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_z(r.get(), z.get_mpz_t(), rnd);
  return r;
}

inline Real real_from_double(double d, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_d(r.get(), d, rnd);
  return r;
}

/// Exact conversion when prec >= 53 (no rounding happens for finite doubles).
inline Real real_from_double(double d, mpfr_prec_t prec) {
  return real_from_double(d, prec, MPFR_RNDN);
}

inline const Real& min_of(const Real& a, const Real& b) { return b < a ? b : a; }
inline const Real& max_of(const Real& a, const Real& b) { return a < b ? b : a; }

/// Decimal rendering with `digits` significant digits, rounded in direction
/// `rnd`. Locale-independent; scientific form "d.ddde+XX".
std::string to_decimal(const Real& x, int digits, mpfr_rnd_t rnd);

/// Digits needed to distinguish values at `prec` bits.
int decimal_digits_for(mpfr_prec_t prec);

}  // namespace valzeta
