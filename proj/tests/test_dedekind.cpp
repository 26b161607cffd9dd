#include "test_support.hpp"
#include "valzeta/dedekind.hpp"

using namespace valzeta;
using support::kCtx;

namespace {

// zeta_K(-1) = zeta(-1) L(-1, chi) with L(-1, chi) = -B_{2,chi}/2 and
// B_{2,chi} = Delta sum_{a=1}^{Delta} chi(a) B_2(a/Delta), B_2(x) = x^2 - x + 1/6.
Rational zeta_k_minus1_by_bernoulli(std::int64_t delta) {
  Rational b2chi = 0;
  for (std::int64_t a = 1; a <= delta; ++a) {
    const Rational x(a, delta);
    b2chi += kronecker(delta, static_cast<std::uint64_t>(a)) * (x * x - x + Rational(1, 6));
  }
  b2chi *= delta;
  Rational r = Rational(-1, 12) * (-b2chi / 2);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("Siegel sums at small primes") {
  CHECK(siegel_zeta_minus1(5) == Rational(1, 30));
  CHECK(siegel_zeta_minus1(13) == Rational(1, 6));
  CHECK(siegel_zeta_minus1(17) == Rational(1, 3));
  CHECK(hilbert_volume(5) == Rational(1, 15));
  CHECK(hilbert_volume(13) == Rational(1, 3));
  CHECK(hilbert_volume(17) == Rational(2, 3));
}

TEST_CASE("Siegel sums agree with generalized Bernoulli numbers") {
  for (std::uint64_t p : primes_up_to(400)) {
    if (p % 4 != 1) continue;
    CHECK_MESSAGE(siegel_zeta_minus1(p) == zeta_k_minus1_by_bernoulli(static_cast<std::int64_t>(p)), "p = " << p);
  }
}

TEST_CASE("Siegel preconditions") {
  CHECK_THROWS_AS(siegel_zeta_minus1(15), NotPrime);
  CHECK_THROWS_AS(siegel_zeta_minus1(7), DomainError);
  CHECK_THROWS_AS(hilbert_volume(3), DomainError);
}

TEST_CASE("ideal counts follow prime splitting") {
  const RealQuadraticField K(5);
  CHECK(ideal_count(K, 1) == 1);
  CHECK(ideal_count(K, 5) == 1);   // ramified
  CHECK(ideal_count(K, 11) == 2);  // split
  CHECK(ideal_count(K, 2) == 0);   // inert
  CHECK(ideal_count(K, 4) == 1);
  CHECK(ideal_count(K, 121) == 3);
  for (std::uint64_t m = 1; m < 60; ++m) {
    for (std::uint64_t n = 1; n < 60; ++n) {
      if (std::gcd(m, n) == 1) CHECK(ideal_count(K, m * n) == ideal_count(K, m) * ideal_count(K, n));
    }
  }
}

TEST_CASE("product and direct modes agree") {
  for (std::uint64_t D : {2, 3, 5, 13}) {
    const RealQuadraticField K(D);
    for (const char* s : {"2", "2.5", "4"}) {
      const RealInterval sigma = support::dec(s);
      const auto prod = dedekind_enclosure(K, sigma, DedekindMode::Product, {}, kCtx);
      const auto direct = dedekind_enclosure(K, sigma, DedekindMode::Direct, {}, kCtx);
      CHECK_MESSAGE(prod.value.intersects(direct.value), "D=" << D << " s=" << s);
      CHECK(prod.value.im().contains_zero());
    }
  }
}

TEST_CASE("zeta_K(2) for Q(sqrt 5) against zeta(2) L(2, chi_5)") {
  // zeta(2) L(2, chi_5) = (pi^2/6)(4 pi^2/(25 sqrt 5)).
  const auto pi = oracle::pi();
  const auto ref = pi * pi / 6 * (4 * pi * pi / (25 * sqrt(oracle::Float(5))));
  const auto e = dedekind_enclosure(RealQuadraticField(5), RealInterval(2L, kCtx), DedekindMode::Product, {}, kCtx);
  CHECK(support::contains(e.value.re(), ref));
}

TEST_CASE("direct mode needs sigma > 3/2") {
  const RealQuadraticField K(5);
  CHECK_THROWS_AS(dedekind_enclosure(K, support::dec("1.4"), DedekindMode::Direct, {}, kCtx), DomainError);
  CHECK_NOTHROW(dedekind_enclosure(K, support::dec("1.4"), DedekindMode::Product, {}, kCtx));
  CHECK_THROWS_AS(dedekind_enclosure(K, support::dec("1"), DedekindMode::Product, {}, kCtx), DomainError);
}
