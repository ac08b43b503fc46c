#pragma once

// Binomial and multinomial coefficients with the zero-on-negative-entry
// convention, plus a memoized factorial table.

#include "cgexact/exact.hpp"

namespace cgexact {

/// Size of the shared factorial memo table; larger arguments are computed on demand.
inline constexpr long kFactorialCacheCap = 256;

/// n! for n >= 0. Throws DomainError for negative n.
Integer factorial(long n);

/// a!/(b!(a-b)!) when 0 <= b <= a, and 0 whenever a < 0, b < 0 or b > a.
Integer binomial(long a, long b);

/// total!/(a! b! c!). Zero if any lower entry is negative. Throws DomainError
/// when all lower entries are nonnegative but do not sum to total.
Integer multinomial(long total, long a, long b, long c);

/// The multinomial with the third lower entry implied: total!/(a! b! (total-a-b)!),
/// zero if any entry would be negative.
Integer multinomial2(long total, long a, long b);

/// sum_{l=0}^{k} (-1)^l C(k,l) C(r+s-k+l, s-k+l). Requires r,s >= 0 and 0 <= k <= min(r,s).
Integer chu_vandermonde_lhs(long r, long s, long k);

inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace cgexact
