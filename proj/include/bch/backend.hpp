#pragma once

#include "bch/errors.hpp"
#include "bch/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

namespace bch {

using int128 = __int128;

enum class BackendKind { Fixed64, Fixed128, Arbitrary, Auto };
enum class CheckMode { Checked, Unchecked };

// Largest degrees for which every intermediate of the coefficient recursion
// fits the backend, for every word of that degree. Measured by exhaustive
// sweeps (all words per degree, all partition words far beyond) and confirmed
// by an analytic bound. Degree 18 already produces an intermediate of
// 12159619338746880000 > 2^63 - 1, degree 31 one above 2^127 - 1.
inline constexpr int max_degree_fixed64  = 17;
inline constexpr int max_degree_fixed128 = 30;

// Auto resolves to the narrowest backend guaranteed overflow-free for the
// degree; explicit choices pass through unchanged.
BackendKind resolve_backend(BackendKind requested, int degree);

// Narrowest backend whose guaranteed range covers the degree.
BackendKind minimal_backend(int degree);

// True when the degree is within the backend's guaranteed range.
bool backend_covers(BackendKind kind, int degree);

std::string_view backend_name(BackendKind k);          // auto, 64, 128, big
BackendKind backend_from_name(std::string_view name);  // throws std::invalid_argument

// Conversions between the working integer types and Integer. Narrowing
// throws BackendOverflow when the value is out of range.
std::int64_t narrow64(const Integer& z);
int128 narrow128(const Integer& z);
// Wraparound variants for unchecked runs: the value reduced mod 2^64 / 2^128.
std::int64_t narrow64_wrap(const Integer& z);
int128 narrow128_wrap(const Integer& z);
Integer widen(std::int64_t v);
Integer widen(int128 v);

std::string to_string(int128 v);

// Arithmetic policies used by the coefficient engine. Checked policies throw
// BackendOverflow on out-of-range results and InexactDivision on a remainder;
// unchecked policies compute fixed-width ring operations through unsigned
// wraparound (well defined, no UB) and take plain quotients. The division
// sites of the recursion are exact whenever the inputs are in range, so
// unchecked mode is purely a speed knob for benchmarking.
template <class T>
struct unsigned_for;
template <>
struct unsigned_for<std::int64_t> {
    using type = std::uint64_t;
};
template <>
struct unsigned_for<int128> {
    using type = unsigned __int128;
};

template <class T, CheckMode Mode>
struct FixedOps {
    using value_type = T;
    static constexpr bool checked = (Mode == CheckMode::Checked);

    static T add(T a, T b) {
        if constexpr (checked) {
            T r;
            if (__builtin_add_overflow(a, b, &r))
                throw BackendOverflow("addition overflow in fixed-width backend");
            return r;
        } else {
            using U = typename unsigned_for<T>::type;
            return static_cast<T>(static_cast<U>(a) + static_cast<U>(b));
        }
    }

    static T sub(T a, T b) {
        if constexpr (checked) {
            T r;
            if (__builtin_sub_overflow(a, b, &r))
                throw BackendOverflow("subtraction overflow in fixed-width backend");
            return r;
        } else {
            using U = typename unsigned_for<T>::type;
            return static_cast<T>(static_cast<U>(a) - static_cast<U>(b));
        }
    }

    static T mul(T a, T b) {
        if constexpr (checked) {
            T r;
            if (__builtin_mul_overflow(a, b, &r))
                throw BackendOverflow("multiplication overflow in fixed-width backend");
            return r;
        } else {
            using U = typename unsigned_for<T>::type;
            return static_cast<T>(static_cast<U>(a) * static_cast<U>(b));
        }
    }

    // b > 0 at every call site.
    static T divexact(T a, T b, const char* site) {
        if constexpr (checked) {
            if (a % b != 0)
                throw InexactDivision(std::string("inexact division at ") + site);
        }
        return a / b;
    }

    static bool is_zero(T v) { return v == 0; }
    static T from_int(int v) { return static_cast<T>(v); }

    static T narrow(const Integer& z) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
            return checked ? narrow64(z) : narrow64_wrap(z);
        } else {
            return checked ? narrow128(z) : narrow128_wrap(z);
        }
    }

    static Integer widen_out(T v) { return widen(v); }
};

template <CheckMode Mode>
struct BigOps {
    using value_type = Integer;
    static constexpr bool checked = (Mode == CheckMode::Checked);

    static Integer add(const Integer& a, const Integer& b) { return a + b; }
    static Integer sub(const Integer& a, const Integer& b) { return a - b; }
    static Integer mul(const Integer& a, const Integer& b) { return a * b; }

    static Integer divexact(const Integer& a, const Integer& b, const char* site) {
        Integer q;
        if constexpr (checked) {
            Integer r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (sgn(r) != 0)
                throw InexactDivision(std::string("inexact division at ") + site);
        } else {
            mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
        return q;
    }

    static bool is_zero(const Integer& v) { return sgn(v) == 0; }
    static Integer from_int(int v) { return Integer(v); }
    static Integer narrow(const Integer& z) { return z; }
    static Integer widen_out(const Integer& v) { return v; }
};

} // namespace bch
