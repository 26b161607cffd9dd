#include "test_support.hpp"
#include "valzeta/elliptic.hpp"

using namespace valzeta;
using support::kCtx;

namespace {

WeierstrassCurve curve(long a1, long a2, long a3, long a4, long a6) { return derive_quantities(a1, a2, a3, a4, a6); }

long mod(const BigInt& v, long p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

// Exhaustive count of affine solutions of the general equation plus infinity.
std::uint64_t brute_force_points(const WeierstrassCurve& E, long p) {
  const long a1 = mod(E.a1, p), a2 = mod(E.a2, p), a3 = mod(E.a3, p), a4 = mod(E.a4, p), a6 = mod(E.a6, p);
  std::uint64_t count = 1;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      const long lhs = (y * y + a1 * x * y + a3 * y) % p;
      const long rhs = (x * x % p * x + a2 * x * x + a4 * x + a6) % p;
      count += lhs == rhs;
    }
  }
  return count;
}

std::vector<WeierstrassCurve> fixtures() {
  return {curve(0, -1, 1, 0, 0), curve(0, 0, 0, 0, 1),  curve(0, 0, 0, -1, 0), curve(1, 0, 0, -1, 0),
          curve(0, 0, 1, -1, 0), curve(1, -1, 1, -1, 0), curve(0, 1, 1, 1, 0),  curve(1, 1, 0, -2, 3),
          curve(0, 0, 0, 2, -3), curve(1, -1, 0, -4, 4)};
}

}  // namespace

TEST_CASE("derived quantities") {
  const auto E = curve(0, -1, 1, 0, 0);
  CHECK(E.b2 == -4);
  CHECK(E.b4 == 0);
  CHECK(E.b6 == 1);
  CHECK(E.b8 == -1);
  CHECK(E.c4 == 16);
  CHECK(E.c6 == -152);
  CHECK(E.discriminant == -11);
  REQUIRE(E.j.has_value());
  CHECK(*E.j == Rational(-4096, 11));

  const auto F = curve(0, 0, 0, 0, 1);
  CHECK(F.discriminant == -432);
  CHECK(F.c4 == 0);
  CHECK(*F.j == 0);

  const auto G = curve(0, 0, 0, -1, 0);
  CHECK(G.discriminant == 64);
  CHECK(*G.j == 1728);
}

TEST_CASE("singular models are flagged") {
  const auto E = curve(0, 0, 0, 0, 0);
  CHECK_FALSE(E.is_elliptic());
  CHECK_FALSE(E.j.has_value());
  CHECK_THROWS_AS(local_zeta(E, 5, ComplexBox(2, 0, kCtx), kCtx), SingularModel);
  CHECK_THROWS_AS(hasse_weil_partial(E, RealInterval(2L, kCtx), 10, kCtx), SingularModel);
}

TEST_CASE("invariant identities on random curves") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int i = 0; i < 500; ++i) {
    const auto E = curve(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
    CHECK(4 * E.b8 == E.b2 * E.b6 - E.b4 * E.b4);
    CHECK(1728 * E.discriminant == E.c4 * E.c4 * E.c4 - E.c6 * E.c6);
  }
}

TEST_CASE("curve parsing") {
  const auto E = parse_curve("0,-1,1,0,0");
  CHECK(E.discriminant == -11);
  CHECK(parse_curve(" 1, 2 ,3,4, 5").a6 == 5);
  CHECK_THROWS_AS(parse_curve("0,1,2"), DomainError);
  CHECK_THROWS_AS(parse_curve("0,1,2,3,x"), DomainError);
  CHECK_THROWS_AS(parse_curve("0,1,2,3,4,"), DomainError);
}

TEST_CASE("point counts: examples") {
  CHECK(count_points(curve(0, 0, 0, 0, 1), 5) == 6);
  CHECK(count_points(curve(0, -1, 1, 0, 0), 2) == 5);
  CHECK(count_points(curve(0, -1, 1, 0, 0), 3) == 5);
  CHECK_THROWS_AS(count_points(curve(0, -1, 1, 0, 0), 9), NotPrime);
}

TEST_CASE("point counts agree with exhaustive search, including bad primes") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coef(-30, 30);
  for (int i = 0; i < 40; ++i) {
    const auto E = curve(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
    for (std::uint64_t p : primes_up_to(60)) {
      CHECK(count_points(E, p) == brute_force_points(E, static_cast<long>(p)));
    }
  }
}

TEST_CASE("traces: examples") {
  const auto E = curve(0, -1, 1, 0, 0);
  const auto t2 = trace(E, 2);
  CHECK(t2.kind == ReductionKind::Good);
  CHECK(t2.trace == -2);
  CHECK(trace(E, 3).trace == -1);
  const auto t11 = trace(E, 11);
  CHECK(t11.kind == ReductionKind::SplitNode);
  CHECK(t11.trace == 1);
  const auto cusp = trace(curve(0, 0, 0, 0, 0), 5);
  CHECK(cusp.kind == ReductionKind::Cusp);
  CHECK(cusp.trace == 0);
}

TEST_CASE("known traces of 11a3") {
  // Coefficients a_p of the weight-2 newform of level 11.
  const std::vector<std::pair<std::uint64_t, std::int64_t>> ap{{2, -2}, {3, -1}, {5, 1},  {7, -2},
                                                               {13, 4}, {17, -2}, {19, 0}, {23, -1}};
  const auto E = curve(0, -1, 1, 0, 0);
  for (const auto& [p, a] : ap) CHECK(trace(E, p).trace == a);
}

TEST_CASE("Hasse bound on good primes") {
  for (const auto& E : fixtures()) {
    for (std::uint64_t p : primes_up_to(200)) {
      const auto info = trace(E, p);
      if (info.kind != ReductionKind::Good) continue;
      CHECK(info.trace * info.trace <= 4 * static_cast<std::int64_t>(p));
      CHECK(info.points == 1 + p - info.trace);
    }
  }
}

TEST_CASE("bad-prime classification is consistent with the singular point count") {
  // For a singular cubic over F_p the count is p+1 (cusp), p (split node) or
  // p+2 (nonsplit node), i.e. A_p = 1 + p - t_p holds at bad primes too.
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> coef(-40, 40);
  int bad_seen = 0;
  int kinds[4] = {0, 0, 0, 0};
  for (int i = 0; i < 400; ++i) {
    const auto E = curve(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
    if (!E.is_elliptic()) continue;
    for (std::uint64_t p : primes_up_to(50)) {
      if (mpz_divisible_ui_p(E.discriminant.get_mpz_t(), p) == 0) continue;
      const auto info = trace(E, p);
      ++bad_seen;
      ++kinds[static_cast<int>(info.kind)];
      CHECK(info.kind != ReductionKind::Good);
      CHECK_MESSAGE(static_cast<std::int64_t>(info.points) == 1 + static_cast<std::int64_t>(p) - info.trace,
                    "p=" << p << " " << E.a1 << "," << E.a2 << "," << E.a3 << "," << E.a4 << "," << E.a6);
    }
  }
  CHECK(bad_seen > 100);
  CHECK(kinds[1] > 0);
  CHECK(kinds[2] > 0);
  CHECK(kinds[3] > 0);
}

TEST_CASE("bad reduction at 2 and 3") {
  // y^2 + xy = x^3 - x^2: node at the origin, tangent cone y^2 + xy + x^2.
  const auto E = curve(1, -1, 0, 0, 0);
  CHECK(trace(E, 2).kind == ReductionKind::NonsplitNode);
  // y^2 + xy = x^3: tangent cone y(y + x), split.
  CHECK(trace(curve(1, 0, 0, 0, 0), 2).kind == ReductionKind::SplitNode);
  CHECK(trace(curve(1, 0, 0, 0, 0), 3).kind == ReductionKind::SplitNode);
  // y^2 = x^3 + x^2 mod 3 has tangent cone y^2 - x^2: split.
  CHECK(trace(curve(0, 1, 0, 0, 0), 3).kind == ReductionKind::SplitNode);
  // y^2 = x^3 - x^2 mod 3: y^2 + x^2, and -1 is not a square mod 3.
  CHECK(trace(curve(0, -1, 0, 0, 0), 3).kind == ReductionKind::NonsplitNode);
  CHECK(trace(curve(0, 0, 0, 0, 0), 2).kind == ReductionKind::Cusp);
}

TEST_CASE("local zeta encloses the exact rational") {
  const auto E = curve(0, 0, 0, 0, 1);
  const auto z = local_zeta(E, 5, ComplexBox(2, 0, kCtx), kCtx);
  CHECK(z.value.re().contains(RealInterval(Rational(21, 16), kCtx)));
  CHECK(z.value.im().contains_zero());
  CHECK(support::width_of(z.value.re()) < 1e-20);
  CHECK(local_zeta_exact(E, 5, 2) == Rational(21, 16));
  CHECK(local_zeta_exact(curve(0, -1, 1, 0, 0), 2, 2) == Rational(13, 3));
}

TEST_CASE("local zeta matches exact arithmetic at integer s") {
  for (const auto& E : fixtures()) {
    for (std::uint64_t p : primes_up_to(50)) {
      if (mpz_divisible_ui_p(E.discriminant.get_mpz_t(), p)) continue;
      for (unsigned s : {2u, 3u}) {
        const auto z = local_zeta(E, p, ComplexBox(static_cast<long>(s), 0, kCtx), kCtx);
        CHECK(z.value.re().contains(RealInterval(local_zeta_exact(E, p, s), kCtx)));
      }
    }
  }
}

TEST_CASE("local zeta preconditions") {
  const auto E = curve(0, -1, 1, 0, 0);
  CHECK_THROWS_AS(local_zeta(E, 11, ComplexBox(2, 0, kCtx), kCtx), DomainError);
  CHECK_THROWS_AS(local_zeta(E, 3, ComplexBox(1, 0, kCtx), kCtx), UncertifiedError);
  CHECK_THROWS_AS(local_zeta(E, 3, ComplexBox(0, 0, kCtx), kCtx), UncertifiedError);
  CHECK_THROWS_AS(local_zeta_exact(E, 3, 1), DomainError);
}

TEST_CASE("Hasse-Weil tail bound") {
  const RealInterval B = hasse_weil_tail_bound(RealInterval(2L, kCtx), 100, kCtx);
  CHECK(B.hi().to_double() <= 0.62);
  CHECK(B.lo().to_double() >= 0.618);
  CHECK_THROWS_AS(hasse_weil_tail_bound(support::dec("1.5"), 100, kCtx), DomainError);
}

TEST_CASE("partial Hasse-Weil products nest") {
  const auto E = curve(0, -1, 1, 0, 0);
  const RealInterval s(2L, kCtx);
  const auto a = hasse_weil_partial(E, s, 3, kCtx);
  const auto b = hasse_weil_partial(E, s, 100, kCtx);
  const auto c = hasse_weil_partial(E, s, 1000, kCtx);
  CHECK(a.value.intersects(c.value));
  CHECK(b.value.intersects(c.value));
  CHECK(width(c.value) < width(b.value));
  CHECK(width(b.value) < width(a.value));
  // L(11a, 2) = 0.5464... lies in every enclosure.
  const RealInterval ref = support::dec("0.546");
  CHECK(c.value.re().intersects(RealInterval::hull(ref, support::dec("0.547"))));
}

TEST_CASE("partial Hasse-Weil preconditions") {
  const auto E = curve(0, -1, 1, 0, 0);
  CHECK_THROWS_AS(hasse_weil_partial(E, support::dec("1.5"), 100, kCtx), DomainError);
  CHECK_THROWS_AS(hasse_weil_partial(E, support::dec("1.5000001"), 100, kCtx), DomainError);
  CHECK_THROWS_AS(hasse_weil_partial(E, RealInterval(2L, kCtx), 2, kCtx), DomainError);
}
