#include "cgexact/combinatorics.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cgexact {

namespace {

const std::vector<Integer>& factorial_table() {
  // function-local static: initialization is thread-safe and happens once
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kFactorialCacheCap + 1);
    t[0] = 1;
    for (long i = 1; i <= kFactorialCacheCap; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

}  // namespace

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative number " + std::to_string(n));
  const auto& table = factorial_table();
  if (n <= kFactorialCacheCap) return table[n];
  Integer r = table[kFactorialCacheCap];
  for (long i = kFactorialCacheCap + 1; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer multinomial(long total, long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) return 0;
  if (a + b + c != total)
    throw DomainError("multinomial: lower entries " + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + " do not sum to " +
                      std::to_string(total));
  return binomial(total, a) * binomial(total - a, b);
}

Integer multinomial2(long total, long a, long b) {
  return multinomial(total, a, b, total - a - b);
}

Integer chu_vandermonde_lhs(long r, long s, long k) {
  if (r < 0 || s < 0 || k < 0 || k > std::min(r, s))
    throw DomainError("chu_vandermonde_lhs requires r,s >= 0 and 0 <= k <= min(r,s)");
  Integer sum = 0;
  for (long l = 0; l <= k; ++l) {
    Integer term = binomial(k, l) * binomial(r + s - k + l, s - k + l);
    if (l % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace cgexact
