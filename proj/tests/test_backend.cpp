#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bch/backend.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

using namespace bch;

TEST_CASE("resolve_backend Auto picks the guaranteed range") {
    for (int n = 1; n <= max_degree_fixed64; ++n)
        CHECK(resolve_backend(BackendKind::Auto, n) == BackendKind::Fixed64);
    for (int n = max_degree_fixed64 + 1; n <= max_degree_fixed128; ++n)
        CHECK(resolve_backend(BackendKind::Auto, n) == BackendKind::Fixed128);
    CHECK(resolve_backend(BackendKind::Auto, max_degree_fixed128 + 1) == BackendKind::Arbitrary);
    CHECK(resolve_backend(BackendKind::Auto, 40) == BackendKind::Arbitrary);
}

TEST_CASE("resolve_backend passes explicit choices through") {
    CHECK(resolve_backend(BackendKind::Fixed64, 25) == BackendKind::Fixed64);
    CHECK(resolve_backend(BackendKind::Fixed128, 5) == BackendKind::Fixed128);
    CHECK(resolve_backend(BackendKind::Arbitrary, 5) == BackendKind::Arbitrary);
}

TEST_CASE("backend_covers and minimal_backend") {
    CHECK(backend_covers(BackendKind::Fixed64, 17));
    CHECK_FALSE(backend_covers(BackendKind::Fixed64, 18));
    CHECK(backend_covers(BackendKind::Fixed128, 30));
    CHECK_FALSE(backend_covers(BackendKind::Fixed128, 31));
    CHECK(backend_covers(BackendKind::Arbitrary, 100));
    CHECK(minimal_backend(17) == BackendKind::Fixed64);
    CHECK(minimal_backend(18) == BackendKind::Fixed128);
    CHECK(minimal_backend(31) == BackendKind::Arbitrary);
}

TEST_CASE("backend names") {
    CHECK(backend_name(BackendKind::Fixed64) == "64");
    CHECK(backend_name(BackendKind::Arbitrary) == "big");
    CHECK(backend_from_name("auto") == BackendKind::Auto);
    CHECK(backend_from_name("128") == BackendKind::Fixed128);
    CHECK_THROWS_AS(backend_from_name("int64"), std::invalid_argument);
}

TEST_CASE("narrow64") {
    CHECK(narrow64(Integer(0)) == 0);
    CHECK(narrow64(Integer(-42)) == -42);
    const Integer max63 = (Integer(1) << 63) - 1;
    CHECK(narrow64(max63) == std::numeric_limits<std::int64_t>::max());
    CHECK(narrow64(-(Integer(1) << 63)) == std::numeric_limits<std::int64_t>::min());
    CHECK_THROWS_AS(narrow64(Integer(1) << 63), BackendOverflow);
    CHECK_THROWS_AS(narrow64(-(Integer(1) << 63) - 1), BackendOverflow);
}

TEST_CASE("narrow128 round-trips through widen") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        Integer z = Integer(rng() >> 1) << 63;  // keep |z| < 2^127
        z += static_cast<unsigned long>(rng());
        if (trial % 2)
            z = -z;
        CAPTURE(z.get_str());
        CHECK(widen(narrow128(z)) == z);
    }
    const Integer max127 = (Integer(1) << 127) - 1;
    CHECK(widen(narrow128(max127)) == max127);
    CHECK(widen(narrow128(-max127)) == -max127);
    CHECK_THROWS_AS(narrow128(Integer(1) << 127), BackendOverflow);
}

TEST_CASE("narrow wrap variants reduce modulo the word size") {
    const Integer two64 = Integer(1) << 64;
    CHECK(narrow64_wrap(two64 + 5) == 5);
    CHECK(narrow64_wrap(Integer(-3)) == -3);
    const Integer two128 = Integer(1) << 128;
    CHECK(narrow128_wrap(two128 + 7) == int128{7});
}

TEST_CASE("to_string int128") {
    CHECK(to_string(int128{0}) == "0");
    CHECK(to_string(int128{-17}) == "-17");
    const Integer big("170141183460469231731687303715884105727");  // 2^127 - 1
    CHECK(to_string(narrow128(big)) == big.get_str());
}

TEST_CASE("checked fixed ops throw on overflow") {
    using Ops = FixedOps<std::int64_t, CheckMode::Checked>;
    const std::int64_t max = std::numeric_limits<std::int64_t>::max();
    CHECK(Ops::add(2, 3) == 5);
    CHECK_THROWS_AS(Ops::add(max, 1), BackendOverflow);
    CHECK_THROWS_AS(Ops::sub(std::numeric_limits<std::int64_t>::min(), 1), BackendOverflow);
    CHECK(Ops::mul(1 << 20, 1 << 20) == std::int64_t{1} << 40);
    CHECK_THROWS_AS(Ops::mul(max, 2), BackendOverflow);

    using Ops128 = FixedOps<int128, CheckMode::Checked>;
    const int128 big = Ops128::mul(Ops128::from_int(1) << 100, Ops128::from_int(1) << 20);
    CHECK(widen(big) == Integer(1) << 120);
    CHECK_THROWS_AS(Ops128::mul(big, big), BackendOverflow);
}

TEST_CASE("unchecked fixed ops wrap") {
    using Ops = FixedOps<std::int64_t, CheckMode::Unchecked>;
    const std::int64_t max = std::numeric_limits<std::int64_t>::max();
    CHECK(Ops::add(max, 1) == std::numeric_limits<std::int64_t>::min());
    CHECK(Ops::mul(std::int64_t{1} << 62, 4) == 0);
}

TEST_CASE("divexact") {
    using Ops = FixedOps<std::int64_t, CheckMode::Checked>;
    CHECK(Ops::divexact(84, 7, "test") == 12);
    CHECK_THROWS_AS(Ops::divexact(85, 7, "test"), InexactDivision);

    using Big = BigOps<CheckMode::Checked>;
    CHECK(Big::divexact(Integer(84), Integer(7), "test") == 12);
    CHECK_THROWS_AS(Big::divexact(Integer(85), Integer(7), "test"), InexactDivision);

    using BigU = BigOps<CheckMode::Unchecked>;
    CHECK(BigU::divexact(Integer(84), Integer(7), "test") == 12);
}
