#include "bch/tabulation.hpp"

#include "bch/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace bch {

std::vector<Partition> partitions_up_to(int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("partitions_up_to: degree must be at least 1");
    std::vector<Partition> out;
    for (int n = 1; n <= max_degree; ++n) {
        // Reverse-lexicographic enumeration starting from [n]: repeatedly
        // decrement the rightmost part above 1 and repack the freed units
        // into parts as large as that one allows.
        std::vector<int> a{n};
        for (;;) {
            out.push_back({n, a});
            int j = static_cast<int>(a.size()) - 1;
            while (j >= 0 && a[static_cast<std::size_t>(j)] == 1)
                --j;
            if (j < 0)
                break;
            int pool = static_cast<int>(a.size()) - 1 - j + 1;  // trailing ones plus one unit
            const int v = --a[static_cast<std::size_t>(j)];
            a.resize(static_cast<std::size_t>(j) + 1);
            while (pool > 0) {
                const int part = std::min(v, pool);
                a.push_back(part);
                pool -= part;
            }
        }
    }
    return out;
}

CoeffTable::CoeffTable(int max_degree, std::vector<CoeffTableEntry> entries)
    : max_degree_(max_degree), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        index_.emplace(entries_[i].partition.parts, i);
}

const Rational* CoeffTable::find(const std::vector<int>& sorted_parts) const {
    const auto it = index_.find(sorted_parts);
    return it == index_.end() ? nullptr : &entries_[it->second].value;
}

CoeffTable coefficient_table(std::span<const Partition> parts, int max_degree,
                             const TableOptions& opt) {
    if (opt.threads < 1)
        throw std::invalid_argument("coefficient_table: thread count must be at least 1");
    std::vector<CoeffTableEntry> entries(parts.size());
    const CoeffOptions co{opt.backend, opt.check, 1};

    const auto compute = [&](std::size_t i) {
        const Partition& p = parts[i];
        entries[i] = {p, bch_coefficient(BlockWord{p.parts, true}, co)};
    };

    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(opt.threads), parts.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            compute(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        const auto body = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= parts.size())
                    return;
                try {
                    compute(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(body);
        for (auto& th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
    }
    return CoeffTable(max_degree, std::move(entries));
}

CoeffTable coefficient_table(int max_degree, const TableOptions& opt) {
    const std::vector<Partition> parts = partitions_up_to(max_degree);
    return coefficient_table(parts, max_degree, opt);
}

Rational coefficient_of_word_via_table(std::string_view letters, const CoeffTable& table) {
    const BlockWord w = parse_word(letters);
    const int n = w.degree();
    if (n > table.max_degree())
        throw std::invalid_argument("word \"" + std::string(letters) +
                                    "\" exceeds the table's degree range");
    std::vector<int> parts = w.blocks;
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    const Rational* value = table.find(parts);
    if (value == nullptr)
        throw std::logic_error("table is missing a partition of an in-range degree");
    // Swapping the roles of A and B multiplies degree-n coefficients by
    // (-1)^(n+1); block order does not matter.
    if (!w.a_first && n % 2 == 0)
        return -*value;
    return *value;
}

namespace {

std::string parts_csv(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

} // namespace

void write_tsv(const CoeffTable& table, std::ostream& out) {
    out << "n\tpartition\tnumerator\tdenominator\n";
    for (const CoeffTableEntry& e : table.entries()) {
        out << e.partition.n << '\t' << parts_csv(e.partition.parts) << '\t'
            << e.value.get_num().get_str() << '\t' << e.value.get_den().get_str() << '\n';
    }
}

void write_json(const CoeffTable& table, std::ostream& out) {
    nlohmann::ordered_json root = nlohmann::ordered_json::array();
    for (const CoeffTableEntry& e : table.entries()) {
        nlohmann::ordered_json row;
        row["n"] = e.partition.n;
        row["parts"] = e.partition.parts;
        row["num"] = e.value.get_num().get_str();
        row["den"] = e.value.get_den().get_str();
        root.push_back(std::move(row));
    }
    out << root.dump(2) << '\n';
}

} // namespace bch
