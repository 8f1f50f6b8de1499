#include "bch/cli.hpp"

#include "bch/coefficients.hpp"
#include "bch/denominators.hpp"
#include "bch/errors.hpp"
#include "bch/lietools.hpp"
#include "bch/oracle.hpp"
#include "bch/tabulation.hpp"
#include "bch/word.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace bch::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_overflow = 3;

std::string seconds_str(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
}

std::string backend_hint(int degree) {
    return std::string("use --backend ") + std::string(backend_name(minimal_backend(degree)));
}

// Doomed checked runs on a forced fixed-width backend are rejected before
// any computation starts.
bool reject_out_of_range(BackendKind kind, int degree, std::ostream& err) {
    if ((kind == BackendKind::Fixed64 || kind == BackendKind::Fixed128) &&
        !backend_covers(kind, degree)) {
        err << "error: degree " << degree << " exceeds the guaranteed range of backend "
            << backend_name(kind) << " (up to "
            << (kind == BackendKind::Fixed64 ? max_degree_fixed64 : max_degree_fixed128)
            << "); " << backend_hint(degree) << '\n';
        return true;
    }
    return false;
}

// Runs fn against --out PATH if given, standard output otherwise.
template <class Fn>
int with_output(const std::string& path, std::ostream& out, std::ostream& err, Fn&& fn) {
    if (path.empty())
        return fn(out);
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot open \"" << path << "\" for writing\n";
        return exit_usage;
    }
    return fn(file);
}

std::vector<int> parse_blocks_csv(const std::string& csv) {
    std::vector<int> blocks;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string item =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidWord("--blocks entry \"" + item + "\" is not an integer");
        }
        if (used != item.size())
            throw InvalidWord("--blocks entry \"" + item + "\" is not an integer");
        blocks.push_back(value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return blocks;
}

struct CoeffArgs {
    std::string word;
    std::string blocks;
    bool afirst = false;
    bool bfirst = false;
    std::string backend = "auto";
    std::string format = "text";
    std::string out_path;
};

int run_coeff(const CoeffArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.word.empty() && !a.blocks.empty()) {
        err << "error: give either a word or --blocks, not both\n";
        return exit_usage;
    }
    BlockWord w;
    if (!a.word.empty()) {
        if (a.afirst || a.bfirst) {
            err << "error: --afirst/--bfirst apply to the --blocks form only\n";
            return exit_usage;
        }
        w = parse_word(a.word);
    } else if (!a.blocks.empty()) {
        w.blocks = parse_blocks_csv(a.blocks);
        w.a_first = !a.bfirst;
        validate(w);
    } else {
        err << "error: give a word (e.g. coeff ABAB) or --blocks (e.g. coeff --blocks 2,1,1)\n";
        return exit_usage;
    }

    const BackendKind kind = backend_from_name(a.backend);
    const int n = w.degree();
    if (reject_out_of_range(kind, n, err))
        return exit_overflow;

    Rational h;
    try {
        h = bch_coefficient(w, {kind, CheckMode::Checked, 1});
    } catch (const BackendOverflow& e) {
        err << "error: " << e.what() << "; " << backend_hint(n) << '\n';
        return exit_overflow;
    }

    return with_output(a.out_path, out, err, [&](std::ostream& o) {
        if (a.format == "tsv") {
            o << "word\tn\tnumerator\tdenominator\n"
              << render_word(w) << '\t' << n << '\t' << h.get_num().get_str() << '\t'
              << h.get_den().get_str() << '\n';
        } else if (a.format == "json") {
            nlohmann::ordered_json row;
            row["word"] = render_word(w);
            row["n"] = n;
            row["num"] = h.get_num().get_str();
            row["den"] = h.get_den().get_str();
            o << row.dump(2) << '\n';
        } else {
            o << to_string(h) << '\n';
        }
        return exit_ok;
    });
}

struct DnArgs {
    int n = 0;
    std::string format = "text";
    std::string out_path;
};

int run_dn(const DnArgs& a, std::ostream& out, std::ostream& err) {
    const Integer dn = compute_dn(a.n);
    const Integer big_d = common_denominator(a.n);
    return with_output(a.out_path, out, err, [&](std::ostream& o) {
        if (a.format == "tsv") {
            o << "n\td_n\tn_factorial_times_d_n\n"
              << a.n << '\t' << dn.get_str() << '\t' << big_d.get_str() << '\n';
        } else if (a.format == "json") {
            nlohmann::ordered_json row;
            row["n"] = a.n;
            row["dn"] = dn.get_str();
            row["common_denominator"] = big_d.get_str();
            o << row.dump(2) << '\n';
        } else {
            o << "d_" << a.n << " = " << dn.get_str() << '\n'
              << a.n << "! * d_" << a.n << " = " << big_d.get_str() << '\n';
        }
        return exit_ok;
    });
}

struct TableArgs {
    int n = 0;
    std::string backend = "auto";
    std::string format = "text";
    std::string out_path;
    int threads = 1;
};

int run_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
    const BackendKind kind = backend_from_name(a.backend);
    if (reject_out_of_range(kind, a.n, err))
        return exit_overflow;

    const std::vector<Partition> parts = partitions_up_to(a.n);
    CoeffTable table;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        table = coefficient_table(parts, a.n, {kind, CheckMode::Checked, a.threads});
    } catch (const BackendOverflow& e) {
        err << "error: " << e.what() << "; " << backend_hint(a.n) << '\n';
        return exit_overflow;
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    err << "partitions: " << parts.size() << '\n'
        << "coefficient time: " << seconds_str(dt.count()) << " s\n";

    return with_output(a.out_path, out, err, [&](std::ostream& o) {
        if (a.format == "json")
            write_json(table, o);
        else
            write_tsv(table, o);
        return exit_ok;
    });
}

struct DynkinArgs {
    int n = 0;
    std::string backend = "auto";
    std::string format = "text";
    std::string out_path;
};

int run_dynkin(const DynkinArgs& a, std::ostream& out, std::ostream& err) {
    const BackendKind kind = backend_from_name(a.backend);
    if (reject_out_of_range(kind, a.n, err))
        return exit_overflow;

    std::vector<CommutatorTerm> terms;
    try {
        terms = dynkin_representation(a.n, {kind, CheckMode::Checked, 1});
    } catch (const BackendOverflow& e) {
        err << "error: " << e.what() << "; " << backend_hint(a.n) << '\n';
        return exit_overflow;
    }

    return with_output(a.out_path, out, err, [&](std::ostream& o) {
        if (a.format == "tsv") {
            o << "word\tnumerator\tdenominator\n";
            for (const CommutatorTerm& t : terms)
                o << t.word << '\t' << t.coefficient.get_num().get_str() << '\t'
                  << t.coefficient.get_den().get_str() << '\n';
        } else if (a.format == "json") {
            nlohmann::ordered_json root = nlohmann::ordered_json::array();
            for (const CommutatorTerm& t : terms) {
                nlohmann::ordered_json row;
                row["word"] = t.word;
                row["num"] = t.coefficient.get_num().get_str();
                row["den"] = t.coefficient.get_den().get_str();
                root.push_back(std::move(row));
            }
            o << root.dump(2) << '\n';
        } else {
            for (const CommutatorTerm& t : terms)
                o << to_string(t.coefficient) << " [" << t.word << "]\n";
        }
        return exit_ok;
    });
}

struct VerifyArgs {
    int n = 0;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    bool all_ok = true;

    const int lcm_cap = std::min(a.n, 12);
    const int oracle_cap = std::min(a.n, 10);
    const int dynkin_cap = std::min(a.n, 8);
    const int symmetry_cap = std::min(a.n, 10);

    const FreeSeries series = oracle_log_series(lcm_cap);

    // Smallest common denominator per degree.
    {
        bool ok = true;
        for (int n = 1; n <= lcm_cap && ok; ++n) {
            Integer l = 1;
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
                l = lcm(l, Integer(series.coeff(n, mask).get_den()));
            const Integer expect = common_denominator(n);
            if (l != expect) {
                out << "degree " << n << ": denominator lcm " << l.get_str()
                    << " != " << expect.get_str() << '\n';
                ok = false;
            }
        }
        out << "denominator lcm    n <= " << lcm_cap << "  " << (ok ? "PASS" : "FAIL") << '\n';
        all_ok = all_ok && ok;
    }

    // Recursion against the brute-force series, every word.
    {
        bool ok = true;
        for (int n = 1; n <= oracle_cap && ok; ++n) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
                const std::string word = mask_word(n, mask);
                const Rational fast = bch_coefficient(word);
                const Rational& slow = series.coeff(n, mask);
                if (fast != slow) {
                    out << "word " << word << ": recursion " << to_string(fast)
                        << " != oracle " << to_string(slow) << '\n';
                    ok = false;
                    break;
                }
            }
        }
        out << "oracle agreement   n <= " << oracle_cap << "  " << (ok ? "PASS" : "FAIL") << '\n';
        all_ok = all_ok && ok;
    }

    // Dynkin recombination.
    {
        bool ok = true;
        for (int n = 1; n <= dynkin_cap && ok; ++n) {
            if (!verify_dynkin(n)) {
                out << "degree " << n << ": Dynkin recombination mismatch\n";
                ok = false;
            }
        }
        out << "dynkin identity    n <= " << dynkin_cap << "  " << (ok ? "PASS" : "FAIL") << '\n';
        all_ok = all_ok && ok;
    }

    // Block symmetry through the partition table.
    {
        bool ok = true;
        const CoeffTable table = coefficient_table(symmetry_cap, {});
        for (int n = 1; n <= symmetry_cap && ok; ++n) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
                const std::string word = mask_word(n, mask);
                const Rational via = coefficient_of_word_via_table(word, table);
                const Rational direct = bch_coefficient(word);
                if (via != direct) {
                    out << "word " << word << ": table " << to_string(via)
                        << " != direct " << to_string(direct) << '\n';
                    ok = false;
                    break;
                }
            }
        }
        out << "block symmetry     n <= " << symmetry_cap << "  " << (ok ? "PASS" : "FAIL") << '\n';
        all_ok = all_ok && ok;
    }

    out << "verify: " << (all_ok ? "PASS" : "FAIL") << '\n';
    if (!all_ok)
        err << "verification failed\n";
    return all_ok ? exit_ok : exit_verify_failed;
}

struct BenchArgs {
    int n = 0;
    std::string backend = "auto";
    int reps = 3;
    int threads = 1;
};

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    const BackendKind kind = backend_from_name(a.backend);
    // Benchmarks run unchecked to time the plain ring operations; a forced
    // fixed-width backend beyond its range still completes (values wrap), so
    // such runs measure time only.
    if ((kind == BackendKind::Fixed64 || kind == BackendKind::Fixed128) &&
        !backend_covers(kind, a.n)) {
        err << "warning: degree " << a.n << " exceeds the guaranteed range of backend "
            << backend_name(kind) << "; timing run only, values can wrap\n";
    }

    const std::vector<Partition> parts = partitions_up_to(a.n);
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(a.reps));
    for (int rep = 0; rep < a.reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const CoeffTable table =
            coefficient_table(parts, a.n, {kind, CheckMode::Unchecked, a.threads});
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        times.push_back(dt.count());
        if (table.entries().size() != parts.size()) {
            err << "error: benchmark produced a short table\n";
            return exit_verify_failed;
        }
    }
    std::sort(times.begin(), times.end());
    const double best = times.front();
    const double median = times[times.size() / 2];
    out << "partitions: " << parts.size() << '\n'
        << "backend: " << a.backend << " unchecked, threads: " << a.threads << '\n'
        << "reps: " << a.reps << "  min: " << seconds_str(best)
        << " s  median: " << seconds_str(median) << " s\n";
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coefficients of the series log(exp(A) exp(B))", "bch"};
    app.require_subcommand(1);

    CoeffArgs coeff_args;
    CLI::App* coeff = app.add_subcommand("coeff", "Coefficient of one word");
    coeff->add_option("word", coeff_args.word, "Word over A and B, e.g. ABAB");
    coeff->add_option("--blocks", coeff_args.blocks, "Block lengths, e.g. 2,1,1");
    CLI::Option* afirst = coeff->add_flag("--afirst", coeff_args.afirst, "Blocks start with A (default)");
    CLI::Option* bfirst = coeff->add_flag("--bfirst", coeff_args.bfirst, "Blocks start with B");
    afirst->excludes(bfirst);
    coeff->add_option("--backend", coeff_args.backend, "Integer backend")
        ->check(CLI::IsMember({"auto", "64", "128", "big"}));
    coeff->add_option("--format", coeff_args.format, "Output format")
        ->check(CLI::IsMember({"text", "tsv", "json"}));
    coeff->add_option("--out", coeff_args.out_path, "Write output to a file");

    DnArgs dn_args;
    CLI::App* dn = app.add_subcommand("dn", "Denominator data for one degree");
    dn->add_option("n", dn_args.n, "Degree")->required()->check(CLI::PositiveNumber);
    dn->add_option("--format", dn_args.format, "Output format")
        ->check(CLI::IsMember({"text", "tsv", "json"}));
    dn->add_option("--out", dn_args.out_path, "Write output to a file");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "Coefficient table for all degrees up to N");
    table->add_option("N", table_args.n, "Largest degree")->required()->check(CLI::PositiveNumber);
    table->add_option("--backend", table_args.backend, "Integer backend")
        ->check(CLI::IsMember({"auto", "64", "128", "big"}));
    table->add_option("--format", table_args.format, "Output format")
        ->check(CLI::IsMember({"text", "tsv", "json"}));
    table->add_option("--out", table_args.out_path, "Write output to a file");
    table->add_option("--threads", table_args.threads, "Worker threads")
        ->check(CLI::Range(1, 256));

    DynkinArgs dynkin_args;
    CLI::App* dynkin = app.add_subcommand("dynkin", "Degree-n component as nested commutators");
    dynkin->add_option("n", dynkin_args.n, "Degree")->required()->check(CLI::PositiveNumber);
    dynkin->add_option("--backend", dynkin_args.backend, "Integer backend")
        ->check(CLI::IsMember({"auto", "64", "128", "big"}));
    dynkin->add_option("--format", dynkin_args.format, "Output format")
        ->check(CLI::IsMember({"text", "tsv", "json"}));
    dynkin->add_option("--out", dynkin_args.out_path, "Write output to a file");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Cross-check the recursion against the oracle");
    verify->add_option("N", verify_args.n, "Largest degree to check")
        ->required()
        ->check(CLI::PositiveNumber);

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Time the table computation");
    bench->add_option("N", bench_args.n, "Largest degree")->required()->check(CLI::PositiveNumber);
    bench->add_option("--backend", bench_args.backend, "Integer backend")
        ->check(CLI::IsMember({"auto", "64", "128", "big"}));
    bench->add_option("--reps", bench_args.reps, "Repetitions")->check(CLI::Range(1, 1000));
    bench->add_option("--threads", bench_args.threads, "Worker threads")
        ->check(CLI::Range(1, 256));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bch");
    for (const std::string& s : args)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (coeff->parsed())
            return run_coeff(coeff_args, out, err);
        if (dn->parsed())
            return run_dn(dn_args, out, err);
        if (table->parsed())
            return run_table(table_args, out, err);
        if (dynkin->parsed())
            return run_dynkin(dynkin_args, out, err);
        if (verify->parsed())
            return run_verify(verify_args, out, err);
        if (bench->parsed())
            return run_bench(bench_args, out, err);
    } catch (const InvalidWord& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const OracleRangeExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const BackendOverflow& e) {
        err << "error: " << e.what() << '\n';
        return exit_overflow;
    } catch (const InexactDivision& e) {
        err << "error: " << e.what() << '\n';
        return exit_verify_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

} // namespace bch::cli
