#pragma once

#include "bch/coefficients.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

namespace bch {

struct Partition {
    int n = 0;               // sum of parts
    std::vector<int> parts;  // non-increasing, all >= 1

    bool operator==(const Partition&) const = default;
};

// All partitions of every 1 <= n <= max_degree, ordered by ascending n and
// reverse-lexicographically within each n: [3] before [2,1] before [1,1,1].
std::vector<Partition> partitions_up_to(int max_degree);

// One canonical coefficient per partition: the word whose blocks are the
// parts, starting with A. Block permutations leave the coefficient unchanged
// and swapping A and B multiplies it by (-1)^(n+1), so these entries
// determine every coefficient of degree <= max_degree.
struct CoeffTableEntry {
    Partition partition;
    Rational value;

    bool operator==(const CoeffTableEntry&) const = default;
};

struct TableOptions {
    BackendKind backend = BackendKind::Auto;
    CheckMode check = CheckMode::Checked;
    int threads = 1;
};

class CoeffTable {
public:
    CoeffTable() = default;
    CoeffTable(int max_degree, std::vector<CoeffTableEntry> entries);

    int max_degree() const { return max_degree_; }
    const std::vector<CoeffTableEntry>& entries() const { return entries_; }

    // Entry value for the given non-increasing parts, or nullptr.
    const Rational* find(const std::vector<int>& sorted_parts) const;

private:
    int max_degree_ = 0;
    std::vector<CoeffTableEntry> entries_;
    std::map<std::vector<int>, std::size_t> index_;
};

// Computes entries for the given partitions (threads > 1 splits the work;
// the result is identical regardless). The convenience overload enumerates
// partitions_up_to(max_degree) first.
CoeffTable coefficient_table(std::span<const Partition> parts, int max_degree,
                             const TableOptions& opt = {});
CoeffTable coefficient_table(int max_degree, const TableOptions& opt = {});

// Coefficient of an arbitrary word through the table: sort its blocks into
// a partition, look the value up, and negate when the word starts with B
// and the degree is even.
Rational coefficient_of_word_via_table(std::string_view letters, const CoeffTable& table);

// Tab-separated serialization: header n/partition/numerator/denominator,
// one row per entry, parts joined by commas, rationals reduced.
void write_tsv(const CoeffTable& table, std::ostream& out);

// JSON array of {n, parts, num, den}; num and den are decimal strings so
// values beyond double and int64 range survive every consumer.
void write_json(const CoeffTable& table, std::ostream& out);

} // namespace bch
