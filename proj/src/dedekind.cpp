#include "valzeta/dedekind.hpp"

#include "valzeta/dirichlet_l.hpp"
#include "valzeta/elementary.hpp"
#include "valzeta/errors.hpp"

namespace valzeta {

Rational siegel_zeta_minus1(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw DomainError("Siegel's formula needs p = 1 (mod 4)");
  BigInt total = 0;
  for (std::uint64_t b = 1; b * b < p; b += 2) total += sigma1((p - b * b) / 4);
  Rational r(total, 30);
  r.canonicalize();
  return r;
}

Rational hilbert_volume(std::uint64_t p) {
  Rational r = 2 * siegel_zeta_minus1(p);
  r.canonicalize();
  return r;
}

std::uint64_t ideal_count(const RealQuadraticField& K, std::uint64_t n) {
  if (n == 0) throw DomainError("ideal_count requires n >= 1");
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    total += K.character().sign(static_cast<std::int64_t>(d));
    if (d != n / d) total += K.character().sign(static_cast<std::int64_t>(n / d));
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

Enclosure direct_mode(const RealQuadraticField& K, const RealInterval& s, std::uint64_t N, PrecisionContext ctx) {
  if (N < 2) throw DomainError("direct mode needs at least 2 terms");
  const RealInterval three_halves(mpq_class(3, 2), ctx);
  if (!(s.lo() > three_halves.hi())) throw DomainError("direct mode requires s > 3/2");
  const PrecisionContext wp = ctx.widened(16);
  const RealInterval sw = round_to(s, wp);
  RealInterval sum(0L, wp);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const std::uint64_t r = ideal_count(K, n);
    if (r == 0) continue;
    sum += exp(-(sw * log_of(static_cast<long>(n), wp))) * static_cast<long>(r);
  }
  const RealInterval sigma(sw.lo(), sw.lo());
  const RealInterval exponent = RealInterval(mpq_class(3, 2), wp) - sigma;
  const RealInterval tail = pow(RealInterval(static_cast<long>(N), wp), exponent) * 2L /
                            (sigma - RealInterval(mpq_class(3, 2), wp));
  const Real radius = tail.hi();
  return Enclosure{ComplexBox(round_to(sum + RealInterval::symmetric(radius), ctx)), radius, true};
}

}  // namespace

Enclosure dedekind_enclosure(const RealQuadraticField& K, const RealInterval& s, DedekindMode mode,
                             const DedekindParams& params, PrecisionContext ctx) {
  if (mpfr_cmp_ui(s.lo().get(), 1) <= 0) throw DomainError("dedekind_enclosure requires s > 1");
  if (mode == DedekindMode::Direct) return direct_mode(K, s, params.direct_terms, ctx);
  const ComplexBox sb(s);
  const ZetaEnclosure z = zeta_em(sb, params.zeta, ctx);
  const Enclosure l = l_truncated(K.character(), sb, params.l_terms, ctx);
  // zeta_K(s) is real for real s, so the imaginary slack of both factors can
  // be discarded after multiplying.
  const ComplexBox product = z.value * l.value;
  Real radius(ctx.bits());
  mpfr_add(radius.get(), z.remainder_radius.get(), l.remainder_radius.get(), MPFR_RNDU);
  return Enclosure{ComplexBox(product.re()), radius, z.certified && l.certified};
}

}  // namespace valzeta
