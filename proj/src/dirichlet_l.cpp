#include "valzeta/dirichlet_l.hpp"

#include <vector>

#include "valzeta/elementary.hpp"
#include "valzeta/errors.hpp"
#include "valzeta/exact.hpp"
#include "valzeta/special_functions.hpp"

namespace valzeta {

Enclosure l_one_quadratic(std::uint64_t D, unsigned m, PrecisionContext ctx, ErfcPrefactor prefactor) {
  const QuadraticDiscriminant disc(D);
  if (m < 1) throw DomainError("l_one_quadratic needs m >= 1");
  const std::int64_t delta = disc.delta();
  const PrecisionContext wp = ctx.widened(16);
  const RealInterval pi = pi_enclosure(wp);
  const L1Params params{m, pi / static_cast<long>(delta)};
  const RealInterval root_a = sqrt(params.A);
  const RealInterval root_delta = sqrt(RealInterval(static_cast<long>(delta), wp));
  // erfc with 2/pi instead of 2/sqrt(pi) is erfc / sqrt(pi).
  const std::optional<RealInterval> erfc_rescale =
      prefactor == ErfcPrefactor::TwoOverPi ? std::optional(RealInterval(1L, wp) / sqrt(pi)) : std::nullopt;

  RealInterval e1_sum(0L, wp);
  RealInterval erfc_sum(0L, wp);
  for (unsigned n = 1; n <= m; ++n) {
    const int chi = kronecker(delta, n);
    if (chi == 0) continue;
    const long nl = static_cast<long>(n);
    const RealInterval e1 = exp_integral(params.A * (nl * nl)).value;
    RealInterval ec = erfc_enclosure(root_a * nl).value / nl;
    if (erfc_rescale) ec = ec * *erfc_rescale;
    if (chi > 0) {
      e1_sum += e1;
      erfc_sum += ec;
    } else {
      e1_sum -= e1;
      erfc_sum -= ec;
    }
  }
  const RealInterval series = e1_sum / root_delta + erfc_sum;

  // Delta^(3/2)/pi^2 * exp(-A m^2)/m^3, every factor at its upper end.
  const long ml = static_cast<long>(m);
  const RealInterval bound = RealInterval(static_cast<long>(delta), wp) * root_delta / sqr(pi) *
                             exp(-(params.A * (ml * ml))) / (ml * ml * ml);
  const Real radius = bound.hi();
  const RealInterval value = round_to(series + RealInterval::symmetric(radius), ctx);
  return Enclosure{ComplexBox(value), radius, true};
}

Enclosure l_truncated(const DirichletCharacter& chi, const ComplexBox& s_in, std::uint64_t N,
                      PrecisionContext ctx) {
  if (N < 2) throw DomainError("l_truncated needs N >= 2");
  if (mpfr_cmp_ui(s_in.re().lo().get(), 1) <= 0) throw DomainError("l_truncated requires Re(s) > 1");
  const PrecisionContext wp = ctx.widened(16);
  const ComplexBox s(round_to(s_in.re(), wp), round_to(s_in.im(), wp));

  // Root-of-unity table for elementary characters; Kronecker values are signs.
  std::vector<ComplexBox> roots;
  if (chi.kind() == CharacterKind::ElementaryModP && !chi.is_real()) {
    roots.reserve(chi.value_order());
    for (std::uint64_t e = 0; e < chi.value_order(); ++e) roots.push_back(root_of_unity_box(e, chi.value_order(), wp));
  }

  ComplexBox sum(0, 0, wp);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const auto v = chi.exact_value(static_cast<std::int64_t>(n));
    if (!v) continue;
    const ComplexBox term = inverse_power(static_cast<long>(n), s);
    if (roots.empty()) {
      sum = v->exponent == 0 ? sum + term : sum - term;
    } else {
      sum += roots[v->exponent] * term;
    }
  }

  // sum_{n>N} n^-sigma <= int_N^inf x^-sigma dx = N^(1-sigma)/(sigma-1).
  const RealInterval sigma(s.re().lo(), s.re().lo());
  const RealInterval big_n(static_cast<long>(N), wp);
  const RealInterval tail = pow(big_n, 1L - sigma) / (sigma - 1L);
  const Real radius = tail.hi();
  const ComplexBox value = sum.inflated(radius);
  return Enclosure{ComplexBox(round_to(value.re(), ctx), round_to(value.im(), ctx)), radius, true};
}

}  // namespace valzeta
