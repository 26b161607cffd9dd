#include "valzeta/special_functions.hpp"

#include <gmpxx.h>

#include <functional>

#include "valzeta/elementary.hpp"
#include "valzeta/errors.hpp"

namespace valzeta {
namespace {

constexpr int kGuardBits = 24;
constexpr long kMaxContinuedFractionDepth = 1L << 16;

bool at_most_one(const Real& x) {
  return mpfr_cmp_ui(x.get(), 1) <= 0;
}

RealInterval point(const Real& x, PrecisionContext ctx) {
  Real lo(ctx.bits()), hi(ctx.bits());
  mpfr_set(lo.get(), x.get(), MPFR_RNDD);
  mpfr_set(hi.get(), x.get(), MPFR_RNDU);
  return RealInterval(std::move(lo), std::move(hi));
}

// Threshold 2^-bits below which a term is negligible at the working precision.
Real tiny(mpfr_prec_t bits, mpfr_prec_t prec) {
  Real t(1, prec);
  mpfr_div_2si(t.get(), t.get(), bits, MPFR_RNDN);
  return t;
}

// Convergent a1/(b1 + a2/(b2 + ... + an/bn)) evaluated bottom-up.
using Coefficient = std::function<RealInterval(long)>;
RealInterval convergent(const Coefficient& a, const Coefficient& b, long depth) {
  RealInterval tail = b(depth);
  for (long i = depth - 1; i >= 1; --i) tail = b(i) + a(i + 1) / tail;
  return a(1) / tail;
}

// Doubles the depth until two consecutive convergents agree to the working
// precision; returns their hull, which contains the value.
RealInterval bracket(const Coefficient& a, const Coefficient& b, PrecisionContext wp) {
  const Real eps = tiny(wp.bits() - 8, wp.bits());
  std::optional<RealInterval> best;
  for (long depth = 8; depth <= kMaxContinuedFractionDepth; depth *= 2) {
    const RealInterval f0 = convergent(a, b, depth);
    const RealInterval f1 = convergent(a, b, depth + 1);
    RealInterval hull = RealInterval::hull(f0, f1);
    if (!best || hull.width() < best->width()) best = hull;
    // Relative agreement: width <= eps * |value|.
    Real rel(wp.bits());
    mpfr_mul(rel.get(), eps.get(), hull.mignitude().get(), MPFR_RNDD);
    if (hull.width() <= rel) break;
  }
  return *best;
}

RealInterval e1_series(const Real& x_pt, PrecisionContext ctx) {
  const PrecisionContext wp = ctx.widened(kGuardBits);
  const RealInterval x = point(x_pt, wp);
  const Real eps = tiny(wp.bits() + 4, wp.bits());
  RealInterval sum(0L, wp);
  RealInterval power(1L, wp);  // x^k / k!
  for (long k = 1;; ++k) {
    power = power * x / k;
    const RealInterval term = power / k;
    if (term.hi() < eps) {
      sum = sum + RealInterval::symmetric(term.hi());
      break;
    }
    sum = (k % 2 == 1) ? sum + term : sum - term;
  }
  return round_to(sum - euler_gamma_enclosure(wp) - log(x), ctx);
}

RealInterval e1_large(const Real& x_pt, PrecisionContext ctx) {
  const PrecisionContext wp = ctx.widened(kGuardBits);
  const RealInterval x = point(x_pt, wp);
  const RealInterval decay = exp(-x);
  const RealInterval lower = decay * log(RealInterval(1L, wp) + RealInterval(2L, wp) / x) / 2L;
  const RealInterval upper = decay * log(RealInterval(1L, wp) + RealInterval(1L, wp) / x);
  const RealInterval sandwich(lower.lo(), upper.hi());
  const RealInterval one(1L, wp);
  // e^x E1(x) = 1/(x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...))))): a_1 = 1, then
  // a_{2j} = a_{2j+1} = j; b_odd = x, b_even = 1.
  const Coefficient a = [&](long i) { return i == 1 ? one : RealInterval(i / 2, wp); };
  const Coefficient b = [&](long i) { return i % 2 == 1 ? x : one; };
  const RealInterval refined = decay * bracket(a, b, wp);
  auto both = intersect(sandwich, refined);
  if (!both) throw std::logic_error("E1 enclosures disagree");
  return round_to(*both, ctx);
}

RealInterval erfc_series(const Real& x_pt, PrecisionContext ctx) {
  const PrecisionContext wp = ctx.widened(kGuardBits);
  const RealInterval x = point(x_pt, wp);
  const RealInterval x2 = sqr(x);
  const Real eps = tiny(wp.bits() + 4, wp.bits());
  RealInterval sum(0L, wp);
  RealInterval power = x;  // x^(2k+1) / k!
  for (long k = 0;; ++k) {
    if (k > 0) power = power * x2 / k;
    const RealInterval term = power / (2 * k + 1);
    if (term.hi() < eps) {
      sum = sum + RealInterval::symmetric(term.hi());
      break;
    }
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  const RealInterval scale = RealInterval(2L, wp) / sqrt(pi_enclosure(wp));
  return round_to(RealInterval(1L, wp) - scale * sum, ctx);
}

RealInterval erfc_large(const Real& x_pt, PrecisionContext ctx) {
  const PrecisionContext wp = ctx.widened(kGuardBits);
  const RealInterval x = point(x_pt, wp);
  const RealInterval x2 = sqr(x);
  const RealInterval pi = pi_enclosure(wp);
  const RealInterval root_pi = sqrt(pi);
  const RealInterval gauss = exp(-x2);
  const RealInterval scale = RealInterval(2L, wp) * gauss / root_pi;
  const RealInterval lower = scale / (x + sqrt(x2 + 2L));
  const RealInterval upper = scale / (x + sqrt(x2 + RealInterval(4L, wp) / pi));
  const RealInterval sandwich(lower.lo(), upper.hi());
  // a_1 = 1, a_i = (i-1)/2; b_i = x.
  const RealInterval one(1L, wp);
  const Coefficient a = [&](long i) {
    return i == 1 ? one : RealInterval(mpq_class(i - 1, 2), wp);
  };
  const Coefficient b = [&](long) { return x; };
  const RealInterval refined = gauss / root_pi * bracket(a, b, wp);
  auto both = intersect(sandwich, refined);
  if (!both) throw std::logic_error("erfc enclosures disagree");
  return round_to(*both, ctx);
}

}  // namespace

SpecialFnEnclosure exp_integral(const RealInterval& x) {
  if (x.lo().sign() <= 0) throw DomainError("E1 requires x > 0");
  const PrecisionContext ctx = x.context();
  // E1 is decreasing: the lower bound comes from x.hi, the upper from x.lo.
  auto eval = [&](const Real& v) { return at_most_one(v) ? e1_series(v, ctx) : e1_large(v, ctx); };
  const SpecialFnMethod method = at_most_one(x.hi()) ? SpecialFnMethod::Series : SpecialFnMethod::TwoSidedBound;
  if (x.is_point()) return {eval(x.lo()), method};
  return {RealInterval(eval(x.hi()).lo(), eval(x.lo()).hi()), method};
}

SpecialFnEnclosure erfc_enclosure(const RealInterval& x) {
  if (x.lo().sign() < 0) throw DomainError("erfc enclosure requires x >= 0");
  const PrecisionContext ctx = x.context();
  auto eval = [&](const Real& v) { return at_most_one(v) ? erfc_series(v, ctx) : erfc_large(v, ctx); };
  const SpecialFnMethod method = at_most_one(x.hi()) ? SpecialFnMethod::Series : SpecialFnMethod::TwoSidedBound;
  if (x.is_point()) return {eval(x.lo()), method};
  return {RealInterval(eval(x.hi()).lo(), eval(x.lo()).hi()), method};
}

}  // namespace valzeta
