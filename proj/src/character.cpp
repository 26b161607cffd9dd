#include "valzeta/character.hpp"

#include <numeric>

#include "valzeta/elementary.hpp"
#include "valzeta/errors.hpp"
#include "valzeta/exact.hpp"

namespace valzeta {

ComplexBox root_of_unity_box(std::uint64_t exponent, std::uint64_t order, PrecisionContext ctx) {
  if (order == 0) throw DomainError("root of unity of order 0");
  exponent %= order;
  if (exponent == 0) return ComplexBox(1, 0, ctx);
  if (2 * exponent == order) return ComplexBox(-1, 0, ctx);
  if (4 * exponent == order) return ComplexBox(0, 1, ctx);
  if (4 * exponent == 3 * order) return ComplexBox(0, -1, ctx);
  const RealInterval angle =
      ldexp(pi_enclosure(ctx), 1) * RealInterval(mpq_class(mpz_class(exponent), mpz_class(order)), ctx);
  return ComplexBox(cos(angle), sin(angle));
}

DirichletCharacter DirichletCharacter::elementary(std::uint64_t p, std::uint64_t m) {
  if (p < 3 || !is_prime(p)) throw NotPrime("elementary characters need an odd prime modulus");
  if (m < 1 || m > p - 1) throw DomainError("character index m must lie in [1, p-1]");
  DirichletCharacter chi;
  chi.kind_ = CharacterKind::ElementaryModP;
  chi.modulus_ = p;
  chi.m_ = m;
  chi.order_ = p - 1;
  chi.g_ = valzeta::primitive_root(p);
  const auto nu = index_table(p, chi.g_);
  chi.exponent_.assign(p, kZero);
  for (std::uint64_t n = 1; n < p; ++n) {
    chi.exponent_[n] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(m) * nu[n]) % (p - 1));
  }
  return chi;
}

DirichletCharacter DirichletCharacter::kronecker(std::int64_t delta) {
  if (!is_fundamental_discriminant(delta)) {
    throw DomainError("Kronecker characters need a fundamental discriminant, got " + std::to_string(delta));
  }
  DirichletCharacter chi;
  chi.kind_ = CharacterKind::Kronecker;
  chi.delta_ = delta;
  chi.modulus_ = static_cast<std::uint64_t>(delta < 0 ? -delta : delta);
  chi.order_ = 2;
  chi.exponent_.assign(chi.modulus_, kZero);
  for (std::uint64_t r = 1; r < chi.modulus_; ++r) {
    const int k = valzeta::kronecker(delta, r);
    if (k != 0) chi.exponent_[r] = k == 1 ? 0 : 1;
  }
  return chi;
}

std::uint64_t DirichletCharacter::reduce(std::int64_t n) const {
  const auto q = static_cast<std::int64_t>(modulus_);
  std::int64_t r = n % q;
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

std::optional<RootOfUnity> DirichletCharacter::exact_value(std::int64_t n) const {
  const std::uint64_t e = exponent_[reduce(n)];
  if (e == kZero) return std::nullopt;
  return RootOfUnity{e, order_};
}

int DirichletCharacter::sign(std::int64_t n) const {
  const auto v = exact_value(n);
  if (!v) return 0;
  if (v->exponent == 0) return 1;
  if (2 * v->exponent == v->order) return -1;
  throw DomainError("character value is not real");
}

bool DirichletCharacter::is_real() const {
  if (kind_ == CharacterKind::Kronecker) return true;
  return (2 * m_) % order_ == 0;
}

bool DirichletCharacter::is_principal() const {
  return kind_ == CharacterKind::ElementaryModP && m_ == order_;
}

ComplexBox DirichletCharacter::value(std::int64_t n, PrecisionContext ctx) const {
  const auto v = exact_value(n);
  if (!v) return ComplexBox(0, 0, ctx);
  return root_of_unity_box(v->exponent, v->order, ctx);
}

int parity(const DirichletCharacter& chi) {
  // chi(-1) = chi(q-1) is +-1 for every character.
  return chi.sign(static_cast<std::int64_t>(chi.modulus()) - 1) == 1 ? 0 : 1;
}

ComplexBox gauss_sum(const DirichletCharacter& chi, PrecisionContext ctx) {
  const std::uint64_t q = chi.modulus();
  if (q < 2) throw DomainError("gauss_sum requires modulus >= 2");
  const std::uint64_t d = chi.value_order();
  // Common denominator for e/d + m/q.
  const std::uint64_t l = std::lcm(d, q);
  const PrecisionContext wp = ctx.widened(16);
  ComplexBox total(0, 0, wp);
  for (std::uint64_t m = 1; m <= q; ++m) {
    const auto v = chi.exact_value(static_cast<std::int64_t>(m));
    if (!v) continue;
    const std::uint64_t numerator = (v->exponent * (l / d) + (m % q) * (l / q)) % l;
    total += root_of_unity_box(numerator, l, wp);
  }
  return ComplexBox(round_to(total.re(), ctx), round_to(total.im(), ctx));
}

}  // namespace valzeta
