#include "workbench/numtheory.hpp"

#include <numeric>

#include "workbench/error.hpp"

namespace workbench {

std::vector<unsigned> divisors(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "divisors of 0");
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<Int> prime_factors(const Int& value) {
  if (value < 1) throw Error(ErrorCode::InvalidInput, "prime_factors of a non-positive integer");
  std::vector<Int> ps;
  Int n = value;
  for (Int p = 2; p * p <= n; ++p) {
    if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) continue;
    ps.push_back(p);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

unsigned additive_order(long long j, unsigned n) {
  const long long r = ((j % n) + n) % n;
  return n / std::gcd(static_cast<unsigned long long>(r), static_cast<unsigned long long>(n));
}

bool primes_inverted(const Int& value, const Int& localization) {
  Int m = abs(value);
  if (m == 0) return false;
  for (Int g = gcd(m, localization); g != 1; g = gcd(m, g)) m /= g;
  return m == 1;
}

Int radical(const Int& n) {
  Int r = 1;
  for (const auto& p : prime_factors(n)) r *= p;
  return r;
}

}  // namespace workbench
