#pragma once

#include <stdexcept>

namespace bch {

// Malformed input word or block sequence (empty, foreign letters,
// nonpositive block length).
class InvalidWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A value does not fit the selected fixed-width integer backend.
class BackendOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// An integer division inside the coefficient recursion left a remainder.
// Every division site is exact by construction, so this firing indicates
// a broken build or memory corruption, never bad user input.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Request beyond the dense oracle's configured ceiling.
class OracleRangeExceeded : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace bch
