#include "valzeta/elliptic.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "valzeta/elementary.hpp"
#include "valzeta/kernels/point_count.hpp"

namespace valzeta {

WeierstrassCurve derive_quantities(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& a4,
                                   const BigInt& a6) {
  WeierstrassCurve E{a1, a2, a3, a4, a6, 0, 0, 0, 0, 0, 0, 0, std::nullopt};
  E.b2 = a1 * a1 + 4 * a2;
  E.b4 = 2 * a4 + a1 * a3;
  E.b6 = a3 * a3 + 4 * a6;
  E.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  E.c4 = E.b2 * E.b2 - 24 * E.b4;
  E.c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
  E.discriminant = -E.b2 * E.b2 * E.b8 - 8 * E.b4 * E.b4 * E.b4 - 27 * E.b6 * E.b6 + 9 * E.b2 * E.b4 * E.b6;
  if (4 * E.b8 != E.b2 * E.b6 - E.b4 * E.b4 ||
      1728 * E.discriminant != E.c4 * E.c4 * E.c4 - E.c6 * E.c6) {
    throw std::logic_error("Weierstrass invariant identities failed");
  }
  if (E.discriminant != 0) {
    Rational j(E.c4 * E.c4 * E.c4, E.discriminant);
    j.canonicalize();
    E.j = j;
  }
  return E;
}

WeierstrassCurve parse_curve(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    BigInt v;
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos || v.set_str(item.substr(first, last - first + 1), 10) != 0) {
      throw DomainError("bad curve coefficient: '" + item + "'");
    }
    coeffs.push_back(v);
  }
  if (coeffs.size() != 5 || (!text.empty() && text.back() == ',')) {
    throw DomainError("curve must be five comma-separated integers a1,a2,a3,a4,a6");
  }
  return derive_quantities(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
}

namespace {

std::uint64_t reduce(const BigInt& v, std::uint64_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Reduced coefficients of the general Weierstrass polynomial.
struct ModCurve {
  std::uint64_t p, a1, a2, a3, a4, a6;

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % p; }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + p - y) % p; }

  // F = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
  std::uint64_t F(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t lhs = add(add(mul(y, y), mul(a1, mul(x, y))), mul(a3, y));
    std::uint64_t rhs = add(add(add(mul(x, mul(x, x)), mul(a2, mul(x, x))), mul(a4, x)), a6);
    return sub(lhs, rhs);
  }
  // dF/dx = a1 y - 3x^2 - 2 a2 x - a4
  std::uint64_t Fx(std::uint64_t x, std::uint64_t y) const {
    return sub(mul(a1, y), add(add(mul(3 % p, mul(x, x)), mul(mul(2 % p, a2), x)), a4));
  }
  // dF/dy = 2y + a1 x + a3
  std::uint64_t Fy(std::uint64_t x, std::uint64_t y) const {
    return add(add(mul(2 % p, y), mul(a1, x)), a3);
  }
};

ModCurve reduce_curve(const WeierstrassCurve& E, std::uint64_t p) {
  return {p, reduce(E.a1, p), reduce(E.a2, p), reduce(E.a3, p), reduce(E.a4, p), reduce(E.a6, p)};
}

using Poly = std::vector<std::uint64_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  const std::uint64_t inv = inverse_mod(b.back(), p);
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.back()) * inv % p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto prod = static_cast<std::uint64_t>(static_cast<unsigned __int128>(factor) * b[i] % p);
      a[i + shift] = (a[i + shift] + p - prod) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  const std::uint64_t inv = inverse_mod(a.back(), p);
  for (auto& c : a) c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * inv % p);
  return a;
}

struct Point {
  std::uint64_t x, y;
};

Point singular_point(const WeierstrassCurve& E, const ModCurve& c) {
  const std::uint64_t p = c.p;
  if (p <= 3) {
    for (std::uint64_t x = 0; x < p; ++x) {
      for (std::uint64_t y = 0; y < p; ++y) {
        if (c.F(x, y) == 0 && c.Fx(x, y) == 0 && c.Fy(x, y) == 0) return {x, y};
      }
    }
    throw std::logic_error("no singular point found although p divides Delta");
  }
  // (2y + a1 x + a3)^2 = f(x) = 4x^3 + b2 x^2 + 2 b4 x + b6; the singular point
  // sits over the repeated root of f.
  const std::uint64_t b2 = reduce(E.b2, p), b4 = reduce(E.b4, p), b6 = reduce(E.b6, p);
  const Poly f{b6, 2 * b4 % p, b2, 4 % p};
  const Poly df{2 * b4 % p, 2 * b2 % p, 12 % p};
  const Poly g = poly_gcd(f, df, p);
  std::uint64_t x0;
  if (g.size() == 2) {
    x0 = (p - g[0]) % p;
  } else if (g.size() == 3) {
    // Triple root: g = (x - x0)^2 = x^2 - 2 x0 x + x0^2.
    x0 = c.mul((p - g[1]) % p, inverse_mod(2, p));
  } else {
    throw std::logic_error("cubic has no repeated root although p divides Delta");
  }
  const std::uint64_t y0 = c.mul((p - c.add(c.mul(c.a1, x0), c.a3)) % p, inverse_mod(2, p));
  return {x0, y0};
}

ReductionKind classify_bad(const WeierstrassCurve& E, std::uint64_t p) {
  const ModCurve c = reduce_curve(E, p);
  const Point s = singular_point(E, c);
  if (c.F(s.x, s.y) != 0 || c.Fx(s.x, s.y) != 0 || c.Fy(s.x, s.y) != 0) {
    throw std::logic_error("located point is not singular");
  }
  // Moving the singular point to the origin (x = X + r, y = Y + t) leaves
  // Y^2 + a1 XY - a2' X^2 - X^3 with a2' = a2 + 3r. The tangent cone
  // Y^2 + a1 XY - a2' X^2 splits over F_p iff z^2 + a1 z - a2' has a root.
  const std::uint64_t a2t = c.add(c.a2, c.mul(3 % p, s.x));
  if (p == 2) {
    if (c.a1 == 0) return ReductionKind::Cusp;
    // z^2 + z + a2' has a root in F_2 iff a2' = 0.
    return a2t == 0 ? ReductionKind::SplitNode : ReductionKind::NonsplitNode;
  }
  const std::uint64_t disc = c.add(c.mul(c.a1, c.a1), c.mul(4 % p, a2t));
  if (disc == 0) return ReductionKind::Cusp;
  return pow_mod(disc, (p - 1) / 2, p) == 1 ? ReductionKind::SplitNode : ReductionKind::NonsplitNode;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

bool divides_discriminant(const WeierstrassCurve& E, std::uint64_t p) {
  return mpz_divisible_ui_p(E.discriminant.get_mpz_t(), p) != 0;
}

}  // namespace

std::uint64_t count_points(const WeierstrassCurve& E, std::uint64_t p) {
  require_prime(p);
  if (p == 2) {
    const ModCurve c = reduce_curve(E, p);
    std::uint64_t affine = 0;
    for (std::uint64_t x = 0; x < 2; ++x) {
      for (std::uint64_t y = 0; y < 2; ++y) affine += c.F(x, y) == 0;
    }
    return affine + 1;
  }
  if (p > kernels::kMaxKernelPrime) throw DomainError("point counting supports primes below 2^26");
  // Completing the square: #{y : y'^2 = v} = 1 + (v/p) with y' = 2y + a1 x + a3.
  const auto q = static_cast<std::uint32_t>(p);
  const kernels::Cubic f{static_cast<std::uint32_t>(reduce(E.b6, p)),
                         static_cast<std::uint32_t>(reduce(2 * E.b4, p)),
                         static_cast<std::uint32_t>(reduce(E.b2, p)), static_cast<std::uint32_t>(4 % p)};
  const std::int64_t residue_sum = kernels::cubic_legendre_sum(q, f);
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + residue_sum);
}

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::Cusp: return "cusp";
    case ReductionKind::SplitNode: return "split node";
    case ReductionKind::NonsplitNode: return "nonsplit node";
  }
  return "good";
}

ReductionInfo trace(const WeierstrassCurve& E, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t points = count_points(E, p);
  if (!divides_discriminant(E, p)) {
    return {p, points, static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(points), ReductionKind::Good};
  }
  const ReductionKind kind = classify_bad(E, p);
  const std::int64_t t = kind == ReductionKind::Cusp ? 0 : kind == ReductionKind::SplitNode ? 1 : -1;
  return {p, points, t, kind};
}

Enclosure local_zeta(const WeierstrassCurve& E, std::uint64_t p, const ComplexBox& s, PrecisionContext ctx) {
  if (!E.is_elliptic()) throw SingularModel("curve model is singular (Delta = 0)");
  require_prime(p);
  if (divides_discriminant(E, p)) throw DomainError("local_zeta needs a prime of good reduction");
  const ReductionInfo info = trace(E, p);
  const PrecisionContext wp = ctx.widened(16);
  const ComplexBox sw(round_to(s.re(), wp), round_to(s.im(), wp));
  const long pl = static_cast<long>(p);
  const ComplexBox x = inverse_power(pl, sw);  // p^-s
  const ComplexBox numerator = 1L - x * static_cast<long>(info.trace) + sqr(x) * pl;
  const ComplexBox denominator = (1L - x) * (1L - x * pl);
  const ComplexBox value = numerator / denominator;
  return Enclosure{ComplexBox(round_to(value.re(), ctx), round_to(value.im(), ctx)), Real(ctx.bits()), true};
}

Rational local_zeta_exact(const WeierstrassCurve& E, std::uint64_t p, unsigned s) {
  if (!E.is_elliptic()) throw SingularModel("curve model is singular (Delta = 0)");
  if (s < 2) throw DomainError("local_zeta_exact takes integer s >= 2");
  require_prime(p);
  if (divides_discriminant(E, p)) throw DomainError("local_zeta_exact needs a prime of good reduction");
  const ReductionInfo info = trace(E, p);
  BigInt ps;
  mpz_ui_pow_ui(ps.get_mpz_t(), p, s);
  const Rational x(1, ps);
  const Rational numerator = 1 - Rational(info.trace) * x + Rational(p) * x * x;
  const Rational denominator = (1 - x) * (1 - Rational(p) * x);
  Rational r = numerator / denominator;
  r.canonicalize();
  return r;
}

RealInterval hasse_weil_tail_bound(const RealInterval& sigma, std::uint64_t N, PrecisionContext ctx) {
  const RealInterval half(mpq_class(1, 2), ctx);
  const RealInterval sig = round_to(sigma, ctx);
  const RealInterval excess = sig - RealInterval(mpq_class(3, 2), ctx);
  if (!excess.is_positive()) throw DomainError("tail bound needs sigma > 3/2");
  const RealInterval numerator = pow(RealInterval(static_cast<long>(N), ctx), -excess) * 2L;
  const RealInterval decay = 1L - pow(RealInterval(2L, ctx), half - sig);
  return numerator / (excess * decay);
}

Enclosure hasse_weil_partial(const WeierstrassCurve& E, const RealInterval& s, std::uint64_t N,
                             PrecisionContext ctx) {
  if (!E.is_elliptic()) throw SingularModel("curve model is singular (Delta = 0)");
  if (N < 3) throw DomainError("hasse_weil_partial needs N >= 3");
  const PrecisionContext wp = ctx.widened(16);
  const RealInterval threshold = RealInterval(mpq_class(3, 2), wp) + RealInterval(mpq_class(1, 1000000), wp);
  if (!(s.lo() > threshold.hi())) throw DomainError("hasse_weil_partial requires s > 3/2 + 1e-6");
  const RealInterval sw = round_to(s, wp);

  RealInterval product(1L, wp);
  for (std::uint64_t p : primes_up_to(N)) {
    const ReductionInfo info = trace(E, p);
    const long pl = static_cast<long>(p);
    const RealInterval x = exp(-(sw * log_of(pl, wp)));
    RealInterval factor = 1L - x * static_cast<long>(info.trace);
    if (info.kind == ReductionKind::Good) factor = factor + sqr(x) * pl;
    product = product / factor;
  }
  const RealInterval B = hasse_weil_tail_bound(RealInterval(sw.lo(), sw.lo()), N, wp);
  const RealInterval tail(exp(-RealInterval(B.hi(), B.hi())).lo(), exp(RealInterval(B.hi(), B.hi())).hi());
  Real radius(ctx.bits());
  mpfr_set(radius.get(), B.hi().get(), MPFR_RNDU);
  return Enclosure{ComplexBox(round_to(product * tail, ctx)), radius, true};
}

}  // namespace valzeta
