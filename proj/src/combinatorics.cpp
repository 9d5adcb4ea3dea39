#include "sieve/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sieve {

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

BigInt multinomial(long total, const std::vector<long>& parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != total || total < 0) return 0;
  BigInt r = 1;
  long acc = 0;
  for (long p : parts) {
    acc += p;
    r *= binomial(acc, p);
  }
  return r;
}

BigInt catalan(long n) {
  if (n < 0) return 0;
  BigInt c = binomial(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return c;
}

BigInt exact_integer(const Rational& r, const char* what) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) {
    throw std::logic_error(std::string(what) + ": non-integral value " + c.get_str());
  }
  return c.get_num();
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace sieve
