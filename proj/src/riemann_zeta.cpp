#include "valzeta/riemann_zeta.hpp"

#include <algorithm>

#include "valzeta/elementary.hpp"
#include "valzeta/errors.hpp"

namespace valzeta {

Real width(const ComplexBox& z) {
  Real a = z.re().width();
  Real b = z.im().width();
  return a < b ? b : a;
}

namespace {

ComplexBox work_copy(const ComplexBox& s, PrecisionContext ctx) {
  return ComplexBox(round_to(s.re(), ctx), round_to(s.im(), ctx));
}

RealInterval rational_interval(const Rational& q, PrecisionContext ctx) { return RealInterval(q, ctx); }

}  // namespace

ZetaEnclosure zeta_em(const ComplexBox& s_in, EMParams params, PrecisionContext ctx) {
  if (params.N < 2 || params.k < 1) throw DomainError("Euler-Maclaurin needs N >= 2 and k >= 1");
  const RealInterval one(1L, ctx);
  if (s_in.re().lo() < one.lo()) throw DomainError("zeta_em requires Re(s) >= 1");
  if (s_in.re().contains(one.lo()) && s_in.im().contains_zero()) {
    throw PoleProximity("argument box contains the pole s = 1");
  }
  const ComplexBox s = work_copy(s_in, ctx);
  const long N = static_cast<long>(params.N);
  const unsigned k = params.k;

  ComplexBox sum(0, 0, ctx);
  for (long n = 1; n < N; ++n) sum += inverse_power(n, s);
  const ComplexBox n_pow = inverse_power(N, s);  // N^-s
  sum += (n_pow * N) / (s - 1);

  ComplexBox corr = n_pow * RealInterval(mpq_class(1, 2), ctx);
  ComplexBox rising = s;  // s(s+1)...(s+2j-2)
  BigInt n_power = N;     // N^(2j-1)
  for (unsigned j = 1; j <= k; ++j) {
    if (j > 1) {
      rising = rising * (s + static_cast<long>(2 * j - 3)) * (s + static_cast<long>(2 * j - 2));
      n_power *= BigInt(N) * N;
    }
    const Rational coef = bernoulli(2 * j) / Rational(factorial(2 * j) * n_power);
    corr += (rising * n_pow) * rational_interval(coef, ctx);
  }

  // First omitted term, j = k+1, bounded in modulus.
  rising = rising * (s + static_cast<long>(2 * k - 1)) * (s + static_cast<long>(2 * k));
  n_power *= BigInt(N) * N;
  Rational omitted_coef = bernoulli(2 * k + 2) / Rational(factorial(2 * k + 2) * n_power);
  omitted_coef = abs(omitted_coef);
  const RealInterval omitted = RealInterval(magnitude(rising), magnitude(rising)) *
                               RealInterval(magnitude(n_pow), magnitude(n_pow)) *
                               rational_interval(omitted_coef, ctx);
  const Real top = magnitude(s + static_cast<long>(2 * k + 1));
  const RealInterval bottom = RealInterval(s.re().lo(), s.re().lo()) + static_cast<long>(2 * k + 1);
  const RealInterval factor = RealInterval(top, top) / RealInterval(bottom.lo(), bottom.lo());
  const RealInterval radius = factor * omitted;

  ZetaEnclosure out{
      {(sum + corr).inflated(radius.hi()), radius.hi(), true}, sum + corr, params, ctx.bits(), true};
  return out;
}

ZetaEnclosure zeta_auto(const ComplexBox& s, const Real& target_width, PrecisionContext ctx) {
  if (target_width.sign() <= 0) throw DomainError("target width must be positive");
  constexpr unsigned kMaxRounds = 40;
  constexpr unsigned kMaxN = 1u << 20;
  EMParams params{8, 2};
  PrecisionContext wp = ctx;
  std::optional<ZetaEnclosure> last;
  for (unsigned round = 0; round < kMaxRounds; ++round) {
    last = zeta_em(s, params, wp);
    if (width(last->value) <= target_width) return *last;
    params.N = std::min(2 * params.N, kMaxN);
    params.k += 1;
    wp = wp.widened(32);
  }
  last->target_met = false;
  return *last;
}

Rational zeta_even(unsigned n) {
  if (n == 0) throw DomainError("zeta_even requires n >= 1");
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n);
  Rational r = Rational(two_pow) * bernoulli(2 * n) / Rational(2 * factorial(2 * n));
  if (n % 2 == 0) r = -r;  // (-1)^(n+1)
  r.canonicalize();
  return r;
}

RealInterval zeta_even_enclosure(unsigned n, PrecisionContext ctx) {
  const PrecisionContext wp = ctx.widened(16);
  return round_to(RealInterval(zeta_even(n), wp) * pow_int(pi_enclosure(wp), 2L * n), ctx);
}

Rational zeta_neg(long a) {
  if (a > 0) throw DomainError("zeta_neg takes a <= 0; use zeta_em or zeta_even");
  // zeta(-n) = (-1)^n B_{n+1} / (n+1): covers zeta(1-2m) and the trivial zeros.
  const unsigned n = static_cast<unsigned>(-a);
  Rational r = bernoulli(n + 1) / Rational(n + 1);
  if (n % 2 == 1) r = -r;
  r.canonicalize();
  return r;
}

Rational moduli_volume(unsigned g) {
  if (g < 2) throw DomainError("moduli_volume requires genus g >= 2");
  // zeta(2g-2) / pi^(2g-2) = zeta_even(g-1).
  Rational factor = 1 - Rational(1, 1) / Rational(BigInt(1) << (2 * g - 3));
  Rational r = factor * zeta_even(g - 1) / Rational(BigInt(1) << (g - 2));
  r.canonicalize();
  return r;
}

Enclosure moduli_volume_enclosure(unsigned g, PrecisionContext ctx) {
  return Enclosure{ComplexBox(RealInterval(moduli_volume(g), ctx)), Real(ctx.bits()), true};
}

bool functional_eq_check(unsigned m) {
  if (m == 0) throw DomainError("functional_eq_check requires m >= 1");
  const Rational left = zeta_neg(1 - 2 * static_cast<long>(m));
  // Gamma(2m) (2 pi)^(-2m) * 2 sin((1-2m) pi/2) * zeta(2m), pi^(2m) cancelling.
  Rational right = Rational(factorial(2 * m - 1)) * 2 / Rational(BigInt(1) << (2 * m)) * zeta_even(m);
  if (m % 2 == 1) right = -right;
  right.canonicalize();
  return left == right;
}

}  // namespace valzeta
