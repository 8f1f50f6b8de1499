#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bch {

// A word over {A, B} in run-length form: the lengths q_1..q_m of its maximal
// blocks of equal letters plus the identity of the first letter. "AABAB" has
// blocks {2,1,1,1} with a_first = true.
struct BlockWord {
    std::vector<int> blocks;
    bool a_first = true;

    int length() const { return static_cast<int>(blocks.size()); }
    int degree() const;

    bool operator==(const BlockWord&) const = default;
};

// Throws InvalidWord unless blocks is nonempty with every entry >= 1.
void validate(const BlockWord& w);

// Case-insensitive; throws InvalidWord on an empty string or a letter
// outside {A, B}.
BlockWord parse_word(std::string_view letters);

// Inverse of parse_word, canonical upper case.
std::string render_word(const BlockWord& w);

// Dense index form used by the oracle and the commutator expander: one bit
// per letter, 0 for A and 1 for B, the first letter in the most significant
// position. Words longer than 31 letters are rejected.
std::pair<int, std::uint32_t> word_mask(std::string_view letters);
std::string mask_word(int degree, std::uint32_t mask);

} // namespace bch
