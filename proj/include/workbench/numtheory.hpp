#pragma once

#include <cstdint>
#include <vector>

#include "workbench/zlinalg.hpp"

namespace workbench {

/// Divisors of n in increasing order.
std::vector<unsigned> divisors(unsigned n);
unsigned euler_phi(unsigned n);
std::vector<unsigned> prime_factors(unsigned n);
/// Distinct prime factors of a positive integer, increasing.
std::vector<Int> prime_factors(const Int& n);
/// Order of j in the additive group Z/n.
unsigned additive_order(long long j, unsigned n);
/// True when every prime dividing `value` also divides `localization`.
bool primes_inverted(const Int& value, const Int& localization);
/// Product of the distinct primes dividing n (1 for n == 1).
Int radical(const Int& n);

}  // namespace workbench
