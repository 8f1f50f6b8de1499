#include "bch/oracle.hpp"

#include "bch/word.hpp"

#include <stdexcept>
#include <string>

namespace bch {

namespace {

void check_degree(int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("oracle: truncation degree must be at least 1");
    if (max_degree > oracle_max_degree)
        throw OracleRangeExceeded("oracle: degree " + std::to_string(max_degree) +
                                  " exceeds the dense ceiling of " +
                                  std::to_string(oracle_max_degree));
}

} // namespace

FreeSeries::FreeSeries(int max_degree) : max_degree_(max_degree) {
    check_degree(max_degree);
    coeffs_.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d)
        coeffs_[static_cast<std::size_t>(d)].resize(std::size_t{1} << d);
}

Rational& FreeSeries::coeff(int degree, std::uint32_t mask) {
    return coeffs_.at(static_cast<std::size_t>(degree)).at(mask);
}

const Rational& FreeSeries::coeff(int degree, std::uint32_t mask) const {
    return coeffs_.at(static_cast<std::size_t>(degree)).at(mask);
}

Rational FreeSeries::coeff(std::string_view letters) const {
    const auto [degree, mask] = word_mask(letters);
    if (degree > max_degree_)
        throw OracleRangeExceeded("word \"" + std::string(letters) +
                                  "\" is beyond this series' truncation degree");
    return coeff(degree, mask);
}

FreeSeries series_one(int max_degree) {
    FreeSeries s(max_degree);
    s.coeff(0, 0) = 1;
    return s;
}

FreeSeries series_y(int max_degree) {
    FreeSeries y(max_degree);
    std::vector<Integer> fact(static_cast<std::size_t>(max_degree) + 1);
    fact[0] = 1;
    for (int i = 1; i <= max_degree; ++i)
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
    for (int deg = 1; deg <= max_degree; ++deg) {
        for (int j = 0; j <= deg; ++j) {
            const int i = deg - j;
            // A^i B^j; j low bits set.
            const std::uint32_t mask = (j == 0) ? 0u : ((1u << j) - 1u);
            y.coeff(deg, mask) = make_rational(
                1, fact[static_cast<std::size_t>(i)] * fact[static_cast<std::size_t>(j)]);
        }
    }
    return y;
}

FreeSeries series_mul(const FreeSeries& s, const FreeSeries& t, int max_degree) {
    check_degree(max_degree);
    if (s.max_degree() < max_degree || t.max_degree() < max_degree)
        throw std::invalid_argument("series_mul: inputs truncated below the requested degree");
    FreeSeries out(max_degree);
    for (int ds = 0; ds <= max_degree; ++ds) {
        for (std::uint32_t ms = 0; ms < (std::uint32_t{1} << ds); ++ms) {
            const Rational& a = s.coeff(ds, ms);
            if (sgn(a) == 0)
                continue;
            for (int dt = 0; dt + ds <= max_degree; ++dt) {
                const std::uint32_t shifted = ms << dt;
                for (std::uint32_t mt = 0; mt < (std::uint32_t{1} << dt); ++mt) {
                    const Rational& b = t.coeff(dt, mt);
                    if (sgn(b) == 0)
                        continue;
                    out.coeff(ds + dt, shifted | mt) += a * b;
                }
            }
        }
    }
    return out;
}

FreeSeries oracle_log_series(int max_degree) {
    check_degree(max_degree);
    const FreeSeries y = series_y(max_degree);
    FreeSeries h(max_degree);
    FreeSeries power = y;  // Y^k
    for (int k = 1; k <= max_degree; ++k) {
        if (k > 1)
            power = series_mul(power, y, max_degree);
        const Rational scale = make_rational((k % 2 != 0) ? 1 : -1, k);
        // Y^k has no term below degree k.
        for (int deg = k; deg <= max_degree; ++deg)
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << deg); ++mask) {
                const Rational& p = power.coeff(deg, mask);
                if (sgn(p) != 0)
                    h.coeff(deg, mask) += scale * p;
            }
    }
    return h;
}

Rational oracle_coefficient(std::string_view letters) {
    const auto [degree, mask] = word_mask(letters);
    if (degree > oracle_max_degree)
        throw OracleRangeExceeded("word \"" + std::string(letters) +
                                  "\" exceeds the oracle ceiling of degree " +
                                  std::to_string(oracle_max_degree));
    return oracle_log_series(degree).coeff(degree, mask);
}

} // namespace bch
