#include <mpfr.h>

#include "test_support.hpp"
#include "valzeta/certify.hpp"
#include "valzeta/complex_box.hpp"
#include "valzeta/elementary.hpp"

using namespace valzeta;
using support::contains;
using support::dec;
using support::kCtx;

TEST_CASE("rational constructor encloses non-dyadic values") {
  const RealInterval third(mpq_class(1, 3), kCtx);
  CHECK(contains(third, mpq_class(1, 3)));
  CHECK_FALSE(third.is_point());
  CHECK(support::width_of(third) < 1e-37);
  const RealInterval half(mpq_class(1, 2), kCtx);
  CHECK(half.is_point());
}

TEST_CASE("arithmetic contains the exact rational result") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (int i = 0; i < 400; ++i) {
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    const RealInterval A(a, kCtx), B(b, kCtx);
    CHECK(contains(A + B, mpq_class(a + b)));
    CHECK(contains(A - B, mpq_class(a - b)));
    CHECK(contains(A * B, mpq_class(a * b)));
    CHECK(contains(sqr(A), mpq_class(a * a)));
    CHECK(contains(pow_int(A, 3), mpq_class(a * a * a)));
    if (b != 0) {
      CHECK(contains(A / B, mpq_class(a / b)));
      CHECK(contains(pow_int(B, -2), mpq_class(1 / (b * b))));
    }
  }
}

TEST_CASE("operations on wide intervals contain every pointwise image") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    mpq_class a = support::random_dyadic(rng, 5), b = support::random_dyadic(rng, 5);
    mpq_class c = support::random_dyadic(rng, 5), d = support::random_dyadic(rng, 5);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    const RealInterval X = RealInterval::hull(RealInterval(a, kCtx), RealInterval(b, kCtx));
    const RealInterval Y = RealInterval::hull(RealInterval(c, kCtx), RealInterval(d, kCtx));
    for (const mpq_class& x : {a, b, mpq_class((a + b) / 2)}) {
      for (const mpq_class& y : {c, d, mpq_class((c + d) / 2)}) {
        CHECK(contains(X * Y, mpq_class(x * y)));
        CHECK(contains(X - Y, mpq_class(x - y)));
        CHECK(contains(sqr(X), mpq_class(x * x)));
      }
    }
  }
}

TEST_CASE("sqr is tight around zero while the product is not") {
  const RealInterval x = RealInterval::hull(RealInterval(-1L, kCtx), RealInterval(2L, kCtx));
  const RealInterval s = sqr(x);
  CHECK(s.lo().is_zero());
  CHECK(contains(s, mpq_class(4)));
  CHECK((x * x).lo().sign() < 0);
}

TEST_CASE("division by an interval containing zero throws") {
  const RealInterval x = RealInterval::hull(RealInterval(-1L, kCtx), RealInterval(1L, kCtx));
  CHECK_THROWS_AS(RealInterval(1L, kCtx) / x, DivisionByZeroInterval);
  CHECK_THROWS_AS(RealInterval(1L, kCtx) / RealInterval(0L, kCtx), DivisionByZeroInterval);
}

TEST_CASE("mixed precision uses the larger operand precision") {
  const RealInterval a(mpq_class(1, 3), PrecisionContext(64));
  const RealInterval b(mpq_class(1, 7), PrecisionContext(256));
  const RealInterval c = a + b;
  CHECK(c.precision() == 256);
  CHECK(contains(c, mpq_class(10, 21)));
}

TEST_CASE("precision below 53 bits is rejected") {
  CHECK_THROWS_AS(PrecisionContext(52), DomainError);
  CHECK(PrecisionContext(53).bits() == 53);
}

TEST_CASE("decimal parsing encloses the literal") {
  const RealInterval x = dec("0.1");
  CHECK(contains(x, mpq_class(1, 10)));
  CHECK_FALSE(x.is_point());
  CHECK(contains(dec("-2.5e-3"), mpq_class(-1, 400)));
  CHECK(contains(dec("1e-12"), mpq_class(1, 1000000000000L)));
  CHECK(dec("3").is_point());
  CHECK_THROWS_AS(dec("abc"), DomainError);
  CHECK_THROWS_AS(dec("1.2.3"), DomainError);
}

TEST_CASE("decimal rendering rounds outward and re-reads as an enclosure") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 9999);
  for (int i = 0; i < 200; ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    const RealInterval x(q, kCtx);
    const int digits = decimal_digits_for(kCtx.bits());
    const RealInterval lo = dec(to_decimal(x.lo(), digits, MPFR_RNDD).c_str());
    const RealInterval hi = dec(to_decimal(x.hi(), digits, MPFR_RNDU).c_str());
    CHECK(lo.lo() <= x.lo());
    CHECK(hi.hi() >= x.hi());
  }
  CHECK(to_decimal(RealInterval(0L, kCtx).lo(), 10, MPFR_RNDD) == "0");
}

TEST_CASE("width, midpoint, magnitude and mignitude") {
  const RealInterval x = RealInterval::hull(RealInterval(-3L, kCtx), RealInterval(2L, kCtx));
  CHECK(x.width() == Real(5, 128));
  CHECK(x.contains(x.midpoint()));
  CHECK(x.magnitude() == Real(3, 128));
  CHECK(x.mignitude().is_zero());
  const RealInterval y = RealInterval::hull(RealInterval(2L, kCtx), RealInterval(5L, kCtx));
  CHECK(y.mignitude() == Real(2, 128));
  CHECK(abs(-y).lo() == Real(2, 128));
}

TEST_CASE("intersection and hull") {
  const RealInterval a = RealInterval::hull(RealInterval(0L, kCtx), RealInterval(2L, kCtx));
  const RealInterval b = RealInterval::hull(RealInterval(1L, kCtx), RealInterval(3L, kCtx));
  const auto i = intersect(a, b);
  REQUIRE(i.has_value());
  CHECK(i->lo() == Real(1, 128));
  CHECK(i->hi() == Real(2, 128));
  CHECK_FALSE(intersect(a, RealInterval(5L, kCtx)).has_value());
  CHECK(RealInterval::hull(a, b).contains(a));
}

TEST_CASE("elementary functions contain independent reference values") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const mpq_class q = support::random_dyadic(rng, 20);
    const RealInterval x(q, kCtx);
    const oracle::Float v = support::to_float(q);
    CHECK(contains(exp(x), exp(v)));
    CHECK(contains(sin(x), sin(v)));
    CHECK(contains(cos(x), cos(v)));
    CHECK(contains(atan(x), atan(v)));
    if (q > 0) {
      CHECK(contains(log(x), log(v)));
      CHECK(contains(sqrt(x), sqrt(v)));
    }
  }
}

TEST_CASE("sin and cos reach their extrema on wide intervals") {
  const RealInterval x = RealInterval::hull(RealInterval(1L, kCtx), RealInterval(2L, kCtx));
  CHECK(sin(x).contains(Real(1, 128)));
  const RealInterval y = RealInterval::hull(RealInterval(3L, kCtx), RealInterval(4L, kCtx));
  CHECK(cos(y).contains(Real(-1, 128)));
  const RealInterval wide = RealInterval::hull(RealInterval(0L, kCtx), RealInterval(7L, kCtx));
  CHECK(sin(wide).contains(Real(-1, 128)));
  CHECK(sin(wide).contains(Real(1, 128)));
}

TEST_CASE("log and sqrt reject non-positive arguments") {
  CHECK_THROWS_AS(log(RealInterval(0L, kCtx)), DomainError);
  CHECK_THROWS_AS(sqrt(RealInterval(-1L, kCtx)), DomainError);
}

TEST_CASE("pi and Euler's constant agree with MPFR and Boost") {
  for (mpfr_prec_t bits : {53, 128, 300}) {
    const PrecisionContext ctx(bits);
    const RealInterval pi = pi_enclosure(ctx);
    const RealInterval gamma = euler_gamma_enclosure(ctx);
    Real ref(bits + 20);
    mpfr_const_pi(ref.get(), MPFR_RNDN);
    CHECK(pi.contains(ref));
    CHECK(support::width_of(pi) <= std::ldexp(1.0, 3 - static_cast<int>(bits)));
    mpfr_const_euler(ref.get(), MPFR_RNDN);
    CHECK(gamma.contains(ref));
  }
  CHECK(contains(pi_enclosure(kCtx), oracle::pi()));
  CHECK(contains(euler_gamma_enclosure(kCtx), boost::math::constants::euler<oracle::Float>()));
}

TEST_CASE("log_of matches log of the integer") {
  for (long n : {2L, 3L, 10L, 1000003L}) {
    CHECK(contains(log_of(n, kCtx), log(oracle::Float(n))));
  }
}

TEST_CASE("complex box arithmetic contains exact Gaussian-rational results") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long> num(-50, 50);
  for (int i = 0; i < 200; ++i) {
    const long a = num(rng), b = num(rng), c = num(rng), d = num(rng);
    const ComplexBox z(RealInterval(mpq_class(a, 3), kCtx), RealInterval(mpq_class(b, 7), kCtx));
    const ComplexBox w(c, d, kCtx);
    const mpq_class zr(a, 3), zi(b, 7);
    const ComplexBox p = z * w;
    CHECK(contains(p.re(), mpq_class(zr * c - zi * d)));
    CHECK(contains(p.im(), mpq_class(zr * d + zi * c)));
    if (c != 0 || d != 0) {
      const ComplexBox q = z / w;
      const mpq_class n2 = c * c + d * d;
      CHECK(contains(q.re(), mpq_class((zr * c + zi * d) / n2)));
      CHECK(contains(q.im(), mpq_class((zi * c - zr * d) / n2)));
    }
  }
}

TEST_CASE("complex division by a box around zero throws") {
  const RealInterval around = RealInterval::hull(RealInterval(-1L, kCtx), RealInterval(1L, kCtx));
  CHECK_THROWS_AS(ComplexBox(1, 0, kCtx) / ComplexBox(around, around), UncertifiedDivisor);
}

TEST_CASE("complex exponential and inverse powers") {
  const ComplexBox z(dec("0.5"), dec("2"));
  const ComplexBox e = exp(z);
  const oracle::Complex ref = exp(oracle::Complex(oracle::Float("0.5"), oracle::Float(2)));
  CHECK(contains(e.re(), ref.real()));
  CHECK(contains(e.im(), ref.imag()));
  const ComplexBox p = inverse_power(7, ComplexBox(2, 3, kCtx));
  const oracle::Complex pref = pow(oracle::Complex(7), -oracle::Complex(2, 3));
  CHECK(contains(p.re(), pref.real()));
  CHECK(contains(p.im(), pref.imag()));
}

TEST_CASE("inflated adds the radius to both components") {
  const ComplexBox z(1, 1, kCtx);
  const ComplexBox w = z.inflated(Real(1, 128));
  CHECK(w.re().lo() == Real(0, 128));
  CHECK(w.im().hi() == Real(2, 128));
  CHECK(magnitude(ComplexBox(3, 4, kCtx)) >= Real(5, 128));
  CHECK(abs(ComplexBox(3, 4, kCtx)).contains(Real(5, 128)));
}

TEST_CASE("nonzero certification") {
  CHECK(certify_nonzero(RealInterval(2L, kCtx)) == CertifiedSign::Positive);
  CHECK(certify_nonzero(RealInterval(-2L, kCtx)) == CertifiedSign::Negative);
  const RealInterval around = RealInterval::hull(RealInterval(-1L, kCtx), RealInterval(1L, kCtx));
  CHECK(certify_nonzero(around) == CertifiedSign::Uncertified);
  CHECK(certify_nonzero(ComplexBox(around, RealInterval(3L, kCtx))) == CertifiedSign::ImPositive);
  CHECK(certify_nonzero(ComplexBox(RealInterval(-3L, kCtx), around)) == CertifiedSign::ReNegative);
  CHECK(certify_nonzero(ComplexBox(around, around)) == CertifiedSign::Uncertified);
}
