#pragma once

#include "bch/coefficients.hpp"
#include "bch/oracle.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bch {

struct CommutatorTerm {
    std::string word;      // w_1..w_n naming the right-nested bracket [w]
    Rational coefficient;

    bool operator==(const CommutatorTerm&) const = default;
};

// Expansion of the right-nested iterated commutator
// [w] = [w_1, [w_2, ..., [w_{n-1}, w_n]...]] in the free associative
// algebra; [x] = x for a single letter. The result is homogeneous of the
// word's degree with integer coefficients.
FreeSeries expand_iterated_commutator(std::string_view letters);

// Degree-n component of log(exp(A) exp(B)) as a Lie polynomial:
// sum over words w of degree n of (h_w / n) [w]. Zero-coefficient words are
// dropped; the rest appear in index order (all-A word first, A before B).
std::vector<CommutatorTerm> dynkin_representation(int n, const CoeffOptions& opt = {});

// Expands the Dynkin form back into plain words and compares against the
// directly computed coefficients of degree n. True iff they agree exactly.
bool verify_dynkin(int n, const CoeffOptions& opt = {});

} // namespace bch
