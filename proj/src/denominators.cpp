#include "bch/denominators.hpp"

#include <stdexcept>
#include <string>

namespace bch {

int digit_sum(long long n, long long p) {
    if (n < 0)
        throw std::invalid_argument("digit_sum: negative n");
    if (p < 2)
        throw std::invalid_argument("digit_sum: base must be at least 2");
    long long s = 0;
    while (n > 0) {
        s += n % p;
        n /= p;
    }
    return static_cast<int>(s);
}

std::vector<int> primes_below(int n) {
    std::vector<int> primes;
    if (n <= 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n), false);
    for (int i = 2; i < n; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        primes.push_back(i);
        for (long long j = static_cast<long long>(i) * i; j < n; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

Integer compute_dn(int n) {
    if (n < 1)
        throw std::invalid_argument("compute_dn: n must be at least 1");
    Integer d = 1;
    for (int p : primes_below(n)) {
        const int s = digit_sum(n, p);
        // Largest power of p not exceeding the digit sum.
        long long pw = p;
        while (pw <= s) {
            d *= p;
            pw *= p;
        }
    }
    return d;
}

Integer common_denominator(int n) {
    if (n < 1)
        throw std::invalid_argument("common_denominator: n must be at least 1");
    return factorial(n) * compute_dn(n);
}

} // namespace bch
