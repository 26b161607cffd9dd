#include "valzeta/exact.hpp"

#include <mutex>

#include "valzeta/errors.hpp"

namespace valzeta {

std::string to_string(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw DomainError("not a rational number: " + text);
  }
  q.canonicalize();
  return q;
}

Rational bernoulli(unsigned k) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= k) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    BigInt c = 1;  // C(m+1, j), updated incrementally
    for (unsigned j = 0; j < m; ++j) {
      acc += Rational(c) * table[j];
      c = c * (m + 1 - j) / (j + 1);
    }
    Rational b = -acc / (m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

BigInt sigma1(std::uint64_t n) {
  if (n == 0) throw DomainError("sigma1 requires n >= 1");
  BigInt total = 1;
  for (const auto& [p, e] : factorize(n)) {
    // (p^(e+1) - 1) / (p - 1)
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, e + 1);
    total *= (pk - 1) / (p - 1);
  }
  return total;
}

std::uint64_t sigma0(std::uint64_t n) {
  if (n == 0) throw DomainError("sigma0 requires n >= 1");
  std::uint64_t count = 1;
  for (const auto& f : factorize(n)) count *= f.exponent + 1;
  return count;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (const auto& f : factorize(n)) {
    if (f.exponent > 1) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

// Jacobi symbol (a/n), n odd positive, 0 <= a < n.
int jacobi(std::uint64_t a, std::uint64_t n) {
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::uint64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::uint64_t mod_nonneg(std::int64_t a, std::uint64_t n) {
  const std::int64_t m = static_cast<std::int64_t>(n);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

int kronecker(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw DomainError("kronecker symbol requires n >= 1");
  int result = 1;
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    // (a/2) = 1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8).
    const std::uint64_t r = mod_nonneg(a, 8);
    const int at_two = (r == 1 || r == 7) ? 1 : -1;
    while (n % 2 == 0) {
      n /= 2;
      result *= at_two;
    }
  }
  if (n == 1) return result;
  return result * jacobi(mod_nonneg(a, n), n);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) throw DomainError("primitive_root requires an odd prime");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const auto factors = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (const auto& f : factors) {
      if (pow_mod(g, (p - 1) / f.prime, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  return 1;  // unreachable for odd primes
}

std::vector<std::uint32_t> index_table(std::uint64_t p, std::uint64_t g) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::vector<std::uint32_t> nu(p, 0);
  std::uint64_t power = 1;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    nu[power] = static_cast<std::uint32_t>(e);
    power = power * g % p;
  }
  return nu;
}

QuadraticDiscriminant::QuadraticDiscriminant(std::uint64_t squarefree_d) : d_(squarefree_d) {
  if (d_ < 2 || !is_squarefree(d_)) {
    throw DomainError("D must be a squarefree integer >= 2");
  }
  delta_ = static_cast<std::int64_t>(d_ % 4 == 1 ? d_ : 4 * d_);
}

QuadraticDiscriminant QuadraticDiscriminant::from_discriminant(std::int64_t delta) {
  if (delta <= 1 || !is_fundamental_discriminant(delta)) {
    throw DomainError("not a positive fundamental discriminant: " + std::to_string(delta));
  }
  return QuadraticDiscriminant(static_cast<std::uint64_t>(delta % 4 == 1 ? delta : delta / 4));
}

bool is_fundamental_discriminant(std::int64_t delta) {
  if (delta == 0 || delta == 1) return false;
  const std::uint64_t mag = static_cast<std::uint64_t>(delta < 0 ? -delta : delta);
  const std::uint64_t r = mod_nonneg(delta, 4);
  if (r == 1) return is_squarefree(mag);
  if (r != 0) return false;
  const std::int64_t m = delta / 4;
  const std::uint64_t rm = mod_nonneg(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(mag / 4);
}

}  // namespace valzeta
