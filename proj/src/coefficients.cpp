#include "bch/coefficients.hpp"

#include "bch/denominators.hpp"
#include "bch/errors.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bch {

namespace {

// Walks the word back to front, one letter per step, maintaining for the
// current suffix v of length l the scaled coefficients C[k][l] = d * (the
// coefficient of v in Y^k), where Y = exp(A) exp(B) - 1 and d is a common
// denominator that keeps every entry integral. A suffix of the word enters
// Y^k either through a full A^i B^j factor at its front or by splitting the
// front A-run against the following B-run, which is why only the current
// block's offsets j and the cross terms over the next block contribute.
// After the final letter, column n holds d * coeff(w, Y^k) for all k and
// the coefficient of w in log(1 + Y) is their alternating sum over k,
// divided by d.
template <class Ops>
Rational engine(const BlockWord& w, int denominator_scale) {
    using I = typename Ops::value_type;

    const int m = w.length();
    const int n = w.degree();
    const Integer big_d = common_denominator(n) * denominator_scale;

    const I d = Ops::narrow(big_d);
    std::vector<I> fact(static_cast<std::size_t>(n) + 1);
    {
        Integer f = 1;
        fact[0] = Ops::narrow(f);
        for (int i = 1; i <= n; ++i) {
            f *= i;
            fact[static_cast<std::size_t>(i)] = Ops::narrow(f);
        }
    }

    // C is (k, l)-indexed with 1 <= k, l <= n, column-major.
    std::vector<I> c(static_cast<std::size_t>(n) * n, I{});
    const auto cell = [&](int k, int l) -> I& {
        return c[static_cast<std::size_t>(l - 1) * n + (k - 1)];
    };

    // Whether the block being consumed is a run of A. The last block is A
    // exactly when the word starts with A and has an odd number of blocks.
    bool a_current = (w.a_first == (m % 2 != 0));
    int l = 0;
    for (int i = m; i >= 1; --i) {
        const int qi = w.blocks[static_cast<std::size_t>(i - 1)];
        for (int r = 1; r <= qi; ++r) {
            ++l;
            I h{};
            if (i == m) {
                // Suffix is a single run: one factor A^l or B^l.
                h = Ops::divexact(d, fact[static_cast<std::size_t>(l)], "run seed");
            } else if (a_current && i == m - 1) {
                // Suffix is A^r B^{q_m}: one factor A^r B^{q_m}.
                h = Ops::divexact(
                    d,
                    Ops::mul(fact[static_cast<std::size_t>(r)],
                             fact[static_cast<std::size_t>(w.blocks[static_cast<std::size_t>(m - 1)])]),
                    "run pair seed");
            }
            cell(1, l) = h;
            for (int k = 2; k <= l - 1; ++k) {
                h = I{};
                // Front factor B^j (or A^j with nothing following) of the
                // current run, j < r letters of it.
                for (int j = 1; j <= r; ++j) {
                    if (l > j && !Ops::is_zero(cell(k - 1, l - j)))
                        h = Ops::add(h, Ops::divexact(cell(k - 1, l - j),
                                                      fact[static_cast<std::size_t>(j)],
                                                      "run term"));
                }
                if (a_current && i <= m - 1) {
                    // Front factor A^r B^j spanning into the next run.
                    const int qnext = w.blocks[static_cast<std::size_t>(i)];
                    const I rfact = fact[static_cast<std::size_t>(r)];
                    for (int j = 1; j <= qnext; ++j) {
                        if (l > r + j && !Ops::is_zero(cell(k - 1, l - r - j)))
                            h = Ops::add(h,
                                         Ops::divexact(cell(k - 1, l - r - j),
                                                       Ops::mul(rfact, fact[static_cast<std::size_t>(j)]),
                                                       "cross term"));
                    }
                }
                cell(k, l) = h;
            }
            // The suffix splits into l single letters in exactly one way.
            cell(l, l) = d;
        }
        a_current = !a_current;
    }

    I acc{};
    for (int k = 1; k <= n; ++k) {
        const I term = Ops::divexact(cell(k, n), Ops::from_int(k), "log term");
        acc = (k % 2 != 0) ? Ops::add(acc, term) : Ops::sub(acc, term);
    }
    return make_rational(Ops::widen_out(acc), big_d);
}

} // namespace

Rational bch_coefficient(const BlockWord& w, const CoeffOptions& opt) {
    validate(w);
    if (opt.denominator_scale < 1)
        throw std::invalid_argument("denominator_scale must be positive");
    const BackendKind kind = resolve_backend(opt.backend, w.degree());
    const bool checked = (opt.check == CheckMode::Checked);
    switch (kind) {
        case BackendKind::Fixed64:
            return checked ? engine<FixedOps<std::int64_t, CheckMode::Checked>>(w, opt.denominator_scale)
                           : engine<FixedOps<std::int64_t, CheckMode::Unchecked>>(w, opt.denominator_scale);
        case BackendKind::Fixed128:
            return checked ? engine<FixedOps<int128, CheckMode::Checked>>(w, opt.denominator_scale)
                           : engine<FixedOps<int128, CheckMode::Unchecked>>(w, opt.denominator_scale);
        default:
            return checked ? engine<BigOps<CheckMode::Checked>>(w, opt.denominator_scale)
                           : engine<BigOps<CheckMode::Unchecked>>(w, opt.denominator_scale);
    }
}

Rational bch_coefficient(std::string_view letters, const CoeffOptions& opt) {
    return bch_coefficient(parse_word(letters), opt);
}

} // namespace bch
