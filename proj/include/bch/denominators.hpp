#pragma once

#include "bch/rational.hpp"

#include <vector>

namespace bch {

// Sum of the base-p digits of n. Requires n >= 0 and p >= 2.
int digit_sum(long long n, long long p);

// Primes strictly below n, ascending.
std::vector<int> primes_below(int n);

// d_n = prod over primes p < n of p^max{t >= 0 : p^t <= s_p(n)}, the
// correction factor that makes n! * d_n the smallest common denominator of
// all degree-n coefficients. d_1 = 1 as the empty product.
Integer compute_dn(int n);

// n! * d_n. Every degree-n coefficient times this value is an integer, and
// no smaller positive integer has that property.
Integer common_denominator(int n);

} // namespace bch
