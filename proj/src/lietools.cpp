#include "bch/lietools.hpp"

#include "bch/word.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bch {

FreeSeries expand_iterated_commutator(std::string_view letters) {
    const auto [n, mask] = word_mask(letters);
    if (n > oracle_max_degree)
        throw OracleRangeExceeded("commutator expansion of \"" + std::string(letters) +
                                  "\" exceeds the dense ceiling of degree " +
                                  std::to_string(oracle_max_degree));
    // Build from the innermost letter w_n outward; bracketing with letter x
    // maps each expansion word v to x v - v x. Coefficients stay well inside
    // int64 (they are bounded by 2^(n-1)).
    std::vector<long long> cur(2, 0);
    cur[mask & 1u] = 1;
    for (int t = 1; t < n; ++t) {
        const std::uint32_t bit = (mask >> t) & 1u;  // letter w_{n-t}
        std::vector<long long> next(std::size_t{1} << (t + 1), 0);
        for (std::uint32_t v = 0; v < (std::uint32_t{1} << t); ++v) {
            const long long cv = cur[v];
            if (cv == 0)
                continue;
            next[(bit << t) | v] += cv;
            next[(v << 1) | bit] -= cv;
        }
        cur.swap(next);
    }
    FreeSeries out(n);
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
        if (cur[v] != 0)
            out.coeff(n, v) = static_cast<long>(cur[v]);
    return out;
}

std::vector<CommutatorTerm> dynkin_representation(int n, const CoeffOptions& opt) {
    if (n < 1)
        throw std::invalid_argument("dynkin_representation: degree must be at least 1");
    if (n > 31)
        throw std::invalid_argument("dynkin_representation: degree beyond dense word range");
    std::vector<CommutatorTerm> terms;
    const Rational inv_n = make_rational(1, n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::string word = mask_word(n, mask);
        const Rational h = bch_coefficient(word, opt);
        if (sgn(h) != 0)
            terms.push_back({std::move(word), h * inv_n});
    }
    return terms;
}

bool verify_dynkin(int n, const CoeffOptions& opt) {
    if (n < 1)
        throw std::invalid_argument("verify_dynkin: degree must be at least 1");
    if (n > oracle_max_degree)
        throw OracleRangeExceeded("verify_dynkin: degree " + std::to_string(n) +
                                  " exceeds the dense ceiling of " +
                                  std::to_string(oracle_max_degree));
    const std::size_t size = std::size_t{1} << n;
    std::vector<Rational> direct(size), recombined(size);
    for (std::uint32_t mask = 0; mask < size; ++mask)
        direct[mask] = bch_coefficient(mask_word(n, mask), opt);
    const Rational inv_n = make_rational(1, n);
    for (std::uint32_t mask = 0; mask < size; ++mask) {
        if (sgn(direct[mask]) == 0)
            continue;
        const FreeSeries expansion = expand_iterated_commutator(mask_word(n, mask));
        const Rational scale = direct[mask] * inv_n;
        for (std::uint32_t v = 0; v < size; ++v) {
            const Rational& e = expansion.coeff(n, v);
            if (sgn(e) != 0)
                recombined[v] += scale * e;
        }
    }
    return direct == recombined;
}

} // namespace bch
