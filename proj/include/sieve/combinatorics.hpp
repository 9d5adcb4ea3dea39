#pragma once

#include "sieve/qseries.hpp"

#include <cstdint>
#include <vector>

namespace sieve {

/// C(a, b), zero outside 0 <= b <= a.
BigInt binomial(long a, long b);

/// total! / prod parts!, zero if any part is negative or the parts do not sum
/// to total.
BigInt multinomial(long total, const std::vector<long>& parts);

BigInt catalan(long n);

/// Exact quotient of a rational that must be an integer (throws otherwise).
BigInt exact_integer(const Rational& r, const char* what);

/// Positive divisors of m in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace sieve
