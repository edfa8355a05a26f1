#pragma once

#include <cstdint>
#include <vector>

namespace qcolor {

bool is_prime(uint64_t n);

/// Prime factorization with multiplicity, ascending. Empty for n <= 1.
std::vector<uint64_t> prime_factors(uint64_t n);

/// Distinct prime divisors, ascending. Empty for n <= 1.
std::vector<uint64_t> distinct_prime_factors(uint64_t n);

} // namespace qcolor
