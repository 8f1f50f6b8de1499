#pragma once

#include "bch/errors.hpp"
#include "bch/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace bch {

// Ceiling for the dense oracle: degree d stores 2^d coefficients, so the
// total footprint doubles per degree. 12 keeps a full series near 8k
// rationals per top degree, ample for cross-checking.
inline constexpr int oracle_max_degree = 12;

// Truncated formal power series over the free associative algebra on {A, B}
// with rational coefficients, stored densely: one coefficient per word of
// each degree up to the truncation order. Degree-0 slot holds the scalar.
class FreeSeries {
public:
    explicit FreeSeries(int max_degree);

    int max_degree() const { return max_degree_; }

    Rational& coeff(int degree, std::uint32_t mask);
    const Rational& coeff(int degree, std::uint32_t mask) const;
    // Coefficient of the given word, parsed with the usual letter rules.
    Rational coeff(std::string_view letters) const;

    bool operator==(const FreeSeries&) const = default;

private:
    int max_degree_ = 0;
    std::vector<std::vector<Rational>> coeffs_;  // coeffs_[d] has 2^d slots
};

// Scalar one, truncated at max_degree.
FreeSeries series_one(int max_degree);

// Y = exp(A) exp(B) - 1 = sum over i + j >= 1 of A^i B^j / (i! j!),
// truncated at degree max_degree.
FreeSeries series_y(int max_degree);

// Concatenation product truncated at degree max_degree.
FreeSeries series_mul(const FreeSeries& s, const FreeSeries& t, int max_degree);

// log(1 + Y) = sum_{k=1}^{max_degree} (-1)^(k+1) Y^k / k, the full
// coefficient series of log(exp(A) exp(B)) through max_degree. Brute force;
// independent of the integer recursion it cross-checks.
FreeSeries oracle_log_series(int max_degree);

// Coefficient of one word, via a freshly built series of the word's degree.
Rational oracle_coefficient(std::string_view letters);

} // namespace bch
