#include "test_support.hpp"
#include "valzeta/dirichlet_l.hpp"

using namespace valzeta;
using support::contains;
using support::kCtx;

namespace {

struct Field {
  std::uint64_t D;
  int delta;
  oracle::Float eps;  // fundamental unit
  int h;
};

std::vector<Field> fields() {
  using oracle::Float;
  return {{5, 5, (1 + sqrt(Float(5))) / 2, 1},      {2, 8, 1 + sqrt(Float(2)), 1},
          {13, 13, (3 + sqrt(Float(13))) / 2, 1},   {3, 12, 2 + sqrt(Float(3)), 1},
          {17, 17, 4 + sqrt(Float(17)), 1},         {10, 40, 3 + sqrt(Float(10)), 2},
          {7, 28, 8 + 3 * sqrt(Float(7)), 1}};
}

// sum_{n<=N} chi(n) n^-s in Boost floats, for the same character.
oracle::Complex direct_sum(const DirichletCharacter& chi, const oracle::Complex& s, std::uint64_t N) {
  oracle::Complex sum = 0;
  const auto two_pi = 2 * oracle::pi();
  for (std::uint64_t n = 1; n <= N; ++n) {
    const auto v = chi.exact_value(static_cast<std::int64_t>(n));
    if (!v) continue;
    const oracle::Float angle = two_pi * v->exponent / v->order;
    sum += oracle::Complex(cos(angle), sin(angle)) * pow(oracle::Complex(n), -s);
  }
  return sum;
}

}  // namespace

TEST_CASE("L(1, chi) matches the class-number formula") {
  for (const auto& f : fields()) {
    const auto ref = oracle::class_number_l1(f.h, f.eps, f.delta);
    for (unsigned m : {10u, 20u, 40u}) {
      const auto e = l_one_quadratic(f.D, m, kCtx);
      CHECK_MESSAGE(contains(e.value.re(), ref), "Delta=" << f.delta << " m=" << m);
      CHECK(e.value.im().contains_zero());
    }
  }
}

TEST_CASE("L(1, chi) with m = 20 reaches 1e-8 and agrees with m = 40") {
  for (std::uint64_t D : {5, 2, 13}) {
    const auto a = l_one_quadratic(D, 20, kCtx);
    const auto b = l_one_quadratic(D, 40, kCtx);
    CHECK(support::width_of(a.value.re()) < 1e-8);
    CHECK(a.value.intersects(b.value));
    CHECK(b.remainder_radius <= a.remainder_radius);
  }
}

TEST_CASE("short series keep the remainder honest") {
  // m = 1 leaves a large R_m; the enclosure must still hold the true value.
  for (const auto& f : fields()) {
    const auto e = l_one_quadratic(f.D, 1, kCtx);
    CHECK(contains(e.value.re(), oracle::class_number_l1(f.h, f.eps, f.delta)));
  }
}

TEST_CASE("the 2/pi erfc prefactor does not reproduce the class-number formula") {
  const Field f = fields()[0];
  const auto e = l_one_quadratic(f.D, 20, kCtx, ErfcPrefactor::TwoOverPi);
  CHECK_FALSE(contains(e.value.re(), oracle::class_number_l1(f.h, f.eps, f.delta)));
}

TEST_CASE("L(1, chi) preconditions") {
  CHECK_THROWS_AS(l_one_quadratic(4, 20, kCtx), DomainError);
  CHECK_THROWS_AS(l_one_quadratic(5, 0, kCtx), DomainError);
}

TEST_CASE("truncated L-series contains the finite sum and the true value") {
  const auto chi = DirichletCharacter::elementary(7, 1);
  const oracle::Complex s(oracle::Float(2), oracle::Float("0.5"));
  const auto e = l_truncated(chi, ComplexBox(support::dec("2"), support::dec("0.5")), 200, kCtx);
  const auto partial = direct_sum(chi, s, 200);
  const auto longer = direct_sum(chi, s, 20000);
  CHECK(contains(e.value.re(), partial.real()));
  CHECK(contains(e.value.im(), partial.imag()));
  CHECK(contains(e.value.re(), longer.real()));
  CHECK(contains(e.value.im(), longer.imag()));
  // N^(1-sigma)/(sigma-1) = 1/200.
  CHECK(e.remainder_radius.to_double() == doctest::Approx(0.005));
}

TEST_CASE("L(2, chi_5) matches the trigonometric closed form") {
  // L(2, chi_5) = 4 pi^2 / (25 sqrt 5).
  const auto e = l_truncated(DirichletCharacter::kronecker(5), ComplexBox(2, 0, kCtx), 5000, kCtx);
  const auto ref = 4 * oracle::pi() * oracle::pi() / (25 * sqrt(oracle::Float(5)));
  CHECK(contains(e.value.re(), ref));
}

TEST_CASE("truncated L-series preconditions") {
  const auto chi = DirichletCharacter::kronecker(5);
  CHECK_THROWS_AS(l_truncated(chi, ComplexBox(1, 0, kCtx), 100, kCtx), DomainError);
  CHECK_THROWS_AS(l_truncated(chi, ComplexBox(2, 0, kCtx), 1, kCtx), DomainError);
}
