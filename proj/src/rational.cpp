#include "bch/rational.hpp"

#include <stdexcept>
#include <utility>

namespace bch {

Rational make_rational(Integer num, Integer den) {
    if (sgn(den) == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

Integer factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Integer& z) {
    return z.get_str();
}

} // namespace bch
