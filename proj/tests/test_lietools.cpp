#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bch/errors.hpp"
#include "bch/lietools.hpp"
#include "bch/word.hpp"

#include <map>
#include <string>
#include <vector>

using namespace bch;

TEST_CASE("expand_iterated_commutator small cases") {
    const FreeSeries a = expand_iterated_commutator("A");
    CHECK(a.coeff("A") == 1);
    CHECK(a.coeff("B") == 0);

    const FreeSeries ab = expand_iterated_commutator("AB");
    CHECK(ab.coeff("AB") == 1);
    CHECK(ab.coeff("BA") == -1);
    CHECK(ab.coeff("AA") == 0);

    const FreeSeries aab = expand_iterated_commutator("AAB");
    CHECK(aab.coeff("AAB") == 1);
    CHECK(aab.coeff("ABA") == -2);
    CHECK(aab.coeff("BAA") == 1);
    CHECK(aab.coeff("BBB") == 0);
}

TEST_CASE("repeated leading letter collapses") {
    // [A, A] = 0, so [w] vanishes whenever the two innermost letters match.
    const FreeSeries aa = expand_iterated_commutator("AA");
    for (std::uint32_t mask = 0; mask < 4; ++mask)
        CHECK(aa.coeff(2, mask) == 0);
    const FreeSeries baa = expand_iterated_commutator("BAA");
    for (std::uint32_t mask = 0; mask < 8; ++mask)
        CHECK(baa.coeff(3, mask) == 0);
}

namespace {

// String-based recursive reference, independent of the bitmask expander.
std::map<std::string, long> expand_reference(const std::string& w) {
    if (w.size() == 1)
        return {{w, 1}};
    const std::map<std::string, long> inner = expand_reference(w.substr(1));
    std::map<std::string, long> out;
    for (const auto& [v, c] : inner) {
        out[w.substr(0, 1) + v] += c;
        out[v + w.substr(0, 1)] -= c;
    }
    return out;
}

} // namespace

TEST_CASE("expansion matches a recursive reference for every word up to degree 7") {
    for (int n = 1; n <= 7; ++n) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            const std::string w = mask_word(n, mask);
            const FreeSeries fast = expand_iterated_commutator(w);
            const std::map<std::string, long> ref = expand_reference(w);
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
                const std::string vw = mask_word(n, v);
                const auto it = ref.find(vw);
                const long expected = (it == ref.end()) ? 0 : it->second;
                CAPTURE(w);
                CAPTURE(vw);
                CHECK(fast.coeff(n, v) == expected);
            }
        }
    }
}

TEST_CASE("expansion degree cap") {
    CHECK_THROWS_AS(expand_iterated_commutator(std::string(13, 'A')), OracleRangeExceeded);
    CHECK_THROWS_AS(expand_iterated_commutator(""), InvalidWord);
}

TEST_CASE("dynkin_representation") {
    const std::vector<CommutatorTerm> n1 = dynkin_representation(1);
    REQUIRE(n1.size() == 2);
    CHECK(n1[0] == CommutatorTerm{"A", Rational(1)});
    CHECK(n1[1] == CommutatorTerm{"B", Rational(1)});

    const std::vector<CommutatorTerm> n2 = dynkin_representation(2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0] == CommutatorTerm{"AB", make_rational(1, 4)});
    CHECK(n2[1] == CommutatorTerm{"BA", make_rational(-1, 4)});
}

TEST_CASE("zero-coefficient words are dropped") {
    for (const CommutatorTerm& t : dynkin_representation(4))
        CHECK(sgn(t.coefficient) != 0);
}

TEST_CASE("verify_dynkin holds through degree 8") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(verify_dynkin(n));
    }
}

TEST_CASE("verify_dynkin range") {
    CHECK_THROWS_AS(verify_dynkin(13), OracleRangeExceeded);
    CHECK_THROWS_AS(verify_dynkin(0), std::invalid_argument);
}
