#include "bch/word.hpp"

#include "bch/errors.hpp"

#include <string>

namespace bch {

int BlockWord::degree() const {
    int n = 0;
    for (int q : blocks)
        n += q;
    return n;
}

void validate(const BlockWord& w) {
    if (w.blocks.empty())
        throw InvalidWord("empty block sequence");
    for (int q : w.blocks)
        if (q < 1)
            throw InvalidWord("block length " + std::to_string(q) + " is not positive");
}

namespace {

// 0 for A, 1 for B; throws on anything else.
int letter_bit(char c, std::string_view context) {
    switch (c) {
        case 'A': case 'a': return 0;
        case 'B': case 'b': return 1;
        default:
            throw InvalidWord("letter '" + std::string(1, c) + "' in \"" +
                              std::string(context) + "\" is not A or B");
    }
}

} // namespace

BlockWord parse_word(std::string_view letters) {
    if (letters.empty())
        throw InvalidWord("empty word");
    BlockWord w;
    int prev = letter_bit(letters[0], letters);
    w.a_first = (prev == 0);
    int run = 1;
    for (std::size_t i = 1; i < letters.size(); ++i) {
        const int cur = letter_bit(letters[i], letters);
        if (cur == prev) {
            ++run;
        } else {
            w.blocks.push_back(run);
            prev = cur;
            run = 1;
        }
    }
    w.blocks.push_back(run);
    return w;
}

std::string render_word(const BlockWord& w) {
    validate(w);
    std::string s;
    s.reserve(static_cast<std::size_t>(w.degree()));
    bool is_a = w.a_first;
    for (int q : w.blocks) {
        s.append(static_cast<std::size_t>(q), is_a ? 'A' : 'B');
        is_a = !is_a;
    }
    return s;
}

std::pair<int, std::uint32_t> word_mask(std::string_view letters) {
    if (letters.empty())
        throw InvalidWord("empty word");
    if (letters.size() > 31)
        throw InvalidWord("word longer than 31 letters has no dense index form");
    std::uint32_t mask = 0;
    for (char c : letters)
        mask = (mask << 1) | static_cast<std::uint32_t>(letter_bit(c, letters));
    return {static_cast<int>(letters.size()), mask};
}

std::string mask_word(int degree, std::uint32_t mask) {
    if (degree < 1 || degree > 31)
        throw InvalidWord("degree " + std::to_string(degree) + " out of dense index range");
    std::string s(static_cast<std::size_t>(degree), 'A');
    for (int i = 0; i < degree; ++i)
        if (mask >> (degree - 1 - i) & 1u)
            s[static_cast<std::size_t>(i)] = 'B';
    return s;
}

} // namespace bch
