#pragma once

#include <gmpxx.h>

#include <string>

namespace bch {

using Integer  = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with den > 0. Throws std::invalid_argument
// on a zero denominator.
Rational make_rational(Integer num, Integer den);

Integer factorial(int n);

// "num/den", with "/den" omitted when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

} // namespace bch
