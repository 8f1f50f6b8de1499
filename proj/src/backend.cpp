#include "bch/backend.hpp"

#include <stdexcept>

namespace bch {

static_assert(sizeof(long) == 8, "narrow64 assumes 64-bit long");

BackendKind resolve_backend(BackendKind requested, int degree) {
    if (requested != BackendKind::Auto)
        return requested;
    return minimal_backend(degree);
}

BackendKind minimal_backend(int degree) {
    if (degree <= max_degree_fixed64)
        return BackendKind::Fixed64;
    if (degree <= max_degree_fixed128)
        return BackendKind::Fixed128;
    return BackendKind::Arbitrary;
}

bool backend_covers(BackendKind kind, int degree) {
    switch (kind) {
        case BackendKind::Fixed64:  return degree <= max_degree_fixed64;
        case BackendKind::Fixed128: return degree <= max_degree_fixed128;
        default:                    return true;
    }
}

std::string_view backend_name(BackendKind k) {
    switch (k) {
        case BackendKind::Fixed64:   return "64";
        case BackendKind::Fixed128:  return "128";
        case BackendKind::Arbitrary: return "big";
        case BackendKind::Auto:      return "auto";
    }
    return "auto";
}

BackendKind backend_from_name(std::string_view name) {
    if (name == "auto") return BackendKind::Auto;
    if (name == "64")   return BackendKind::Fixed64;
    if (name == "128")  return BackendKind::Fixed128;
    if (name == "big")  return BackendKind::Arbitrary;
    throw std::invalid_argument("unknown backend \"" + std::string(name) +
                                "\" (expected auto, 64, 128 or big)");
}

std::int64_t narrow64(const Integer& z) {
    if (!z.fits_slong_p())
        throw BackendOverflow("value " + z.get_str() + " does not fit the 64-bit backend");
    return static_cast<std::int64_t>(z.get_si());
}

int128 narrow128(const Integer& z) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 127)
        throw BackendOverflow("value " + z.get_str() + " does not fit the 128-bit backend");
    const Integer a = abs(z);
    const std::uint64_t lo = mpz_get_ui(a.get_mpz_t());
    const Integer hi_part = a >> 64;
    const std::uint64_t hi = mpz_get_ui(hi_part.get_mpz_t());
    const unsigned __int128 u = (static_cast<unsigned __int128>(hi) << 64) | lo;
    const auto v = static_cast<int128>(u);
    return sgn(z) < 0 ? -v : v;
}

std::int64_t narrow64_wrap(const Integer& z) {
    const Integer a = abs(z);
    const std::uint64_t lo = mpz_get_ui(a.get_mpz_t());
    return sgn(z) < 0 ? static_cast<std::int64_t>(0 - lo) : static_cast<std::int64_t>(lo);
}

int128 narrow128_wrap(const Integer& z) {
    const Integer a = abs(z);
    const std::uint64_t lo = mpz_get_ui(a.get_mpz_t());
    const Integer hi_part = a >> 64;
    const std::uint64_t hi = mpz_get_ui(hi_part.get_mpz_t());
    const unsigned __int128 u = (static_cast<unsigned __int128>(hi) << 64) | lo;
    return sgn(z) < 0 ? static_cast<int128>(0 - u) : static_cast<int128>(u);
}

Integer widen(std::int64_t v) {
    return Integer(static_cast<long>(v));
}

Integer widen(int128 v) {
    const bool neg = v < 0;
    const unsigned __int128 u =
        neg ? 0 - static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer z(static_cast<unsigned long>(u >> 64));
    z <<= 64;
    z += static_cast<unsigned long>(u);
    return neg ? Integer(-z) : z;
}

std::string to_string(int128 v) {
    return to_string(widen(v));
}

} // namespace bch
