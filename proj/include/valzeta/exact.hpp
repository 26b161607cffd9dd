#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace valzeta {

using BigInt = mpz_class;
/// Exact fraction; mpq_class keeps lowest terms with positive denominator
/// after canonicalize(), which every function here guarantees.
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// Parses "p/q" or "p"; throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

//
// Bernoulli numbers
//

/// B_k with B_1 = -1/2, from sum_{j=0}^{k} C(k+1, j) B_j = 0. Memoized;
/// safe to call concurrently.
Rational bernoulli(unsigned k);

/// (2k)! and related exact helpers.
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

//
// Elementary number theory (desk scale: arguments up to ~1e12)
//

/// Deterministic trial division.
bool is_prime(std::uint64_t n);
/// Sieve of Eratosthenes; primes <= n in ascending order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::vector<PrimePower> factorize(std::uint64_t n);

/// Sum of divisors.
BigInt sigma1(std::uint64_t n);
/// Number of divisors.
std::uint64_t sigma0(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Kronecker symbol (a/n) for n >= 1.
int kronecker(std::int64_t a, std::uint64_t n);

/// Smallest primitive root modulo an odd prime p. Throws NotPrime.
std::uint64_t primitive_root(std::uint64_t p);

/// nu with g^nu[n] = n (mod p) for 1 <= n <= p-1; nu[0] is unused (0).
std::vector<std::uint32_t> index_table(std::uint64_t p, std::uint64_t g);

/// Discriminant of Q(sqrt(D)) for squarefree D >= 2.
class QuadraticDiscriminant {
 public:
  /// Throws DomainError unless D >= 2 is squarefree.
  explicit QuadraticDiscriminant(std::uint64_t squarefree_d);
  /// Recovers D from a positive fundamental discriminant; throws otherwise.
  static QuadraticDiscriminant from_discriminant(std::int64_t delta);

  std::uint64_t d() const { return d_; }
  /// D when D = 1 (mod 4), else 4D.
  std::int64_t delta() const { return delta_; }

 private:
  std::uint64_t d_;
  std::int64_t delta_;
};

/// True for fundamental discriminants (either sign), excluding 1.
bool is_fundamental_discriminant(std::int64_t delta);

}  // namespace valzeta
