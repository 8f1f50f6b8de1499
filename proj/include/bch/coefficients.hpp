#pragma once

#include "bch/backend.hpp"
#include "bch/rational.hpp"
#include "bch/word.hpp"

#include <string_view>

namespace bch {

struct CoeffOptions {
    BackendKind backend = BackendKind::Auto;
    CheckMode check = CheckMode::Checked;
    // The recursion stays exact when its cleared denominator n! * d_n is
    // replaced by any positive multiple; exposed so tests can exercise that
    // property. Leave at 1 for normal use.
    int denominator_scale = 1;
};

// Coefficient of the word w in the degree-n homogeneous component of
// log(exp(A) exp(B)), where n is the degree of w. Pure integer recursion on
// an n x n matrix of scaled coefficients; the result is exact.
Rational bch_coefficient(const BlockWord& w, const CoeffOptions& opt = {});

// Convenience overload: parse_word, then bch_coefficient.
Rational bch_coefficient(std::string_view letters, const CoeffOptions& opt = {});

} // namespace bch
