#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "valzeta/complex_box.hpp"

namespace valzeta {

/// exp(2*pi*i * exponent / order), kept symbolic so that products and sums
/// of character values can be checked exactly.
struct RootOfUnity {
  std::uint64_t exponent;
  std::uint64_t order;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Enclosure of exp(2*pi*i * e / d); exact for e/d in {0, 1/4, 1/2, 3/4}.
ComplexBox root_of_unity_box(std::uint64_t exponent, std::uint64_t order, PrecisionContext ctx);

enum class CharacterKind { ElementaryModP, Kronecker };

/// Dirichlet character of one of two families:
///  - elementary mod an odd prime p: chi(n) = omega^nu(n) with
///    omega = exp(2*pi*i*m/(p-1)) and nu the index to the smallest primitive
///    root, i.e. exponent e(n) = m * nu(n) mod (p-1);
///  - Kronecker: chi(n) = (Delta/n) for a fundamental discriminant Delta,
///    modulus |Delta|.
class DirichletCharacter {
 public:
  /// Throws NotPrime, or DomainError when m is outside [1, p-1].
  static DirichletCharacter elementary(std::uint64_t p, std::uint64_t m);
  /// Throws DomainError unless delta is a fundamental discriminant.
  static DirichletCharacter kronecker(std::int64_t delta);

  CharacterKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  /// m for elementary characters, 0 for Kronecker.
  std::uint64_t index() const { return m_; }
  std::uint64_t primitive_root() const { return g_; }
  std::int64_t discriminant() const { return delta_; }
  /// Order of the value group: p-1 (elementary) or 2 (Kronecker).
  std::uint64_t value_order() const { return order_; }

  /// nullopt when gcd(n, q) > 1.
  std::optional<RootOfUnity> exact_value(std::int64_t n) const;
  /// Value in {-1, 0, 1}; for elementary characters only valid when the
  /// value is real (throws DomainError otherwise).
  int sign(std::int64_t n) const;
  bool is_real() const;
  bool is_principal() const;

  ComplexBox value(std::int64_t n, PrecisionContext ctx) const;

 private:
  DirichletCharacter() = default;
  std::uint64_t reduce(std::int64_t n) const;

  CharacterKind kind_ = CharacterKind::Kronecker;
  std::uint64_t modulus_ = 1;
  std::uint64_t m_ = 0;
  std::uint64_t g_ = 0;
  std::int64_t delta_ = 0;
  std::uint64_t order_ = 2;
  // exponent_[r] for residues 0 <= r < modulus; kZero marks non-units.
  std::vector<std::uint64_t> exponent_;
  static constexpr std::uint64_t kZero = ~std::uint64_t{0};
};

/// alpha = 0 if chi(-1) = 1, 1 if chi(-1) = -1.
int parity(const DirichletCharacter& chi);

/// tau(chi) = sum_{m=1}^{q} chi(m) exp(2*pi*i*m/q). Each summand is one
/// root-of-unity enclosure with the combined angle e/order + m/q mod 1.
ComplexBox gauss_sum(const DirichletCharacter& chi, PrecisionContext ctx);

}  // namespace valzeta
