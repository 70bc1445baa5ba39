#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "ternmin/code.hpp"

namespace ternmin {
namespace {

std::shared_ptr<const PartialSpread> spread(int t) { return std::make_shared<const PartialSpread>(spread_construct(t)); }

SpreadFunction family_function(const std::shared_ptr<const PartialSpread> &sp, Family fam, int s) {
    std::vector<std::size_t> a;
    for (int i = 0; i < (fam == Family::Ternary ? 2 * s : s); ++i) a.push_back(static_cast<std::size_t>(i));
    return fam == Family::Ternary ? ternary_sum(sp, a) : char_sum(sp, a);
}

// Direct count of nonzero coordinates alpha f(x) + w.x over x != 0.
std::int64_t direct_weight(const SpreadFunction &f, int alpha, const TritVec &w) {
    std::int64_t count = 0;
    for (std::int64_t x = 1; x < pow3(f.n()); ++x) {
        const int value = (alpha * f(x).value() + dot(w, index_vec(x, f.n())).value()) % 3;
        count += value != 0 ? 1 : 0;
    }
    return count;
}

TEST(Codeword, Examples) {
    const auto f = char_sum(spread(1), {1});
    EXPECT_EQ(codeword(f, Gf3(0), TritVec{0, 0}), TritVec::zero(8));
    for (std::int64_t w = 1; w < 9; ++w) EXPECT_EQ(codeword(f, Gf3(0), index_vec(w, 2)).weight(), 6u);
    const auto c = codeword(f, Gf3(2), TritVec{1, 2});
    EXPECT_EQ(static_cast<std::int64_t>(c.weight()), direct_weight(f, 2, TritVec{1, 2}));
    EXPECT_EQ(c.weight(), 8u);
    EXPECT_THROW(codeword(f, Gf3(1), TritVec{1}), std::invalid_argument);
}

TEST(BuildCode, Parameters) {
    const auto code = build_code(char_sum(spread(1), {1}));
    EXPECT_EQ(code.length(), 8u);
    EXPECT_EQ(code.dimension(), 3u);
    std::set<TritVec> words;
    for (std::int64_t m = 0; m < code.message_count(); ++m) words.insert(code.codeword(m));
    EXPECT_EQ(words.size(), 27u);

    const auto code4 = build_code(family_function(spread(2), Family::Ternary, 3));
    EXPECT_EQ(code4.length(), 80u);
    EXPECT_EQ(code4.dimension(), 5u);
    EXPECT_EQ(code4.generator().size(), 5u);
}

TEST(BuildCode, GeneratorLayout) {
    const auto f = family_function(spread(1), Family::Ternary, 1);
    const auto code = build_code(f);
    for (std::size_t j = 0; j < code.length(); ++j) {
        const auto x = index_vec(static_cast<std::int64_t>(j) + 1, 2);
        EXPECT_EQ(code.generator()[0][j], f(x));
        EXPECT_EQ(code.generator()[1][j], x[0]);
        EXPECT_EQ(code.generator()[2][j], x[1]);
    }
    const TritVec w{2, 1};
    EXPECT_EQ(code.codeword(TernaryLinearCode::message_index(Gf3(1), w)), codeword(f, Gf3(1), w));
}

TEST(BuildCode, RejectsLinearFunction) {
    EXPECT_THROW(build_code(linear_function(TritVec{1, 2, 0, 1})), LinearFunctionError);
    try {
        build_code(linear_function(TritVec{1, 2}));
    } catch (const LinearFunctionError &e) {
        EXPECT_EQ(e.witness(), (TritVec{1, 2}));
    }
}

TEST(BuildCode, FullRankAndDistinctWords) {
    for (int t = 1; t <= 2; ++t) {
        const auto sp = spread(t);
        for (Family fam : {Family::Characteristic, Family::Ternary})
            for (int s = 1; s <= max_s(fam, 2 * t); ++s) {
                const auto code = build_code(family_function(sp, fam, s));
                EXPECT_EQ(code.dimension(), static_cast<std::size_t>(2 * t + 1));
                std::set<TritVec> words;
                for (std::int64_t m = 0; m < code.message_count(); ++m) words.insert(code.codeword(m));
                EXPECT_EQ(static_cast<std::int64_t>(words.size()), pow3(2 * t + 1));
            }
    }
    const auto sp3 = spread(3);
    for (int s : {1, 2, 14, 28}) EXPECT_EQ(build_code(family_function(sp3, Family::Characteristic, s)).dimension(), 7u);
}

TEST(WeightFromWalsh, Examples) {
    EXPECT_EQ(weight_from_walsh(Gf3(2), 2 * 81, 4), 0);
    EXPECT_EQ(weight_from_walsh(Gf3(2), 114, 4), 16);
    EXPECT_EQ(weight_from_walsh(Gf3(1), -15, 4), 59);
    EXPECT_THROW(weight_from_walsh(Gf3(1), 113, 4), std::logic_error);
    EXPECT_THROW(weight_from_walsh(Gf3(0), 114, 4), std::invalid_argument);
}

TEST(WeightFromWalsh, AgreesWithEveryCodewordN4) {
    for (Family fam : {Family::Characteristic, Family::Ternary})
        for (int s = 1; s <= max_s(fam, 4); ++s) {
            const auto f = family_function(spread(2), fam, s);
            const auto code = build_code(f);
            const auto table = walsh_table(f);
            for (std::int64_t w = 0; w < 81; ++w) {
                const auto wv = index_vec(w, 4);
                const auto neg = vec_index(-wv);
                EXPECT_EQ(static_cast<std::int64_t>(code.codeword(TernaryLinearCode::message_index(Gf3(2), wv)).weight()),
                          weight_from_walsh(Gf3(2), table.twice_re(w), 4));
                EXPECT_EQ(static_cast<std::int64_t>(code.codeword(TernaryLinearCode::message_index(Gf3(1), wv)).weight()),
                          weight_from_walsh(Gf3(1), table.twice_re(neg), 4));
            }
        }
}

TEST(WeightDistribution, FrozenBruteForceN4) {
    const auto sp = spread(2);
    const WeightDistribution char2{{0, 1}, {16, 2}, {54, 80}, {52, 128}, {61, 32}};
    const WeightDistribution tern2{{0, 1}, {32, 2}, {54, 80}, {50, 96}, {59, 64}};
    EXPECT_EQ(weight_distribution_bruteforce(build_code(family_function(sp, Family::Characteristic, 2))), char2);
    EXPECT_EQ(weight_distribution_bruteforce(build_code(family_function(sp, Family::Ternary, 2))), tern2);
    EXPECT_EQ(char2.total(), 243);
    EXPECT_EQ(char2.total_weight(), 12960);
}

TEST(WeightDistribution, ClosedFormN6) {
    const WeightDistribution expected{{0, 1}, {52, 2}, {486, 728}, {484, 1352}, {511, 104}};
    const auto d = weight_distribution_closed(Family::Characteristic, 6, 2);
    EXPECT_EQ(d, expected);
    EXPECT_EQ(d.total(), 2187);
    EXPECT_EQ(d.total_weight(), 728 * 2 * 729);
    EXPECT_THROW(weight_distribution_closed(Family::Ternary, 6, 15), std::invalid_argument);
    EXPECT_THROW(weight_distribution_closed(Family::Characteristic, 4, 0), std::invalid_argument);
}

TEST(WeightDistribution, TransposedAssignmentBreaksIdentity) {
    EXPECT_EQ(weight_distribution_transposed(Family::Characteristic, 4, 2).total_weight(), 13824);
    EXPECT_EQ(weight_distribution_closed(Family::Characteristic, 4, 2).total_weight(), 12960);
}

TEST(WeightDistribution, ClosedEqualsBruteForceAllS) {
    for (int t = 1; t <= 3; ++t) {
        const auto sp = spread(t);
        const int n = 2 * t;
        for (Family fam : {Family::Characteristic, Family::Ternary})
            for (int s = 1; s <= max_s(fam, n); ++s) {
                const auto f = family_function(sp, fam, s);
                const auto brute = weight_distribution_bruteforce(build_code(f));
                EXPECT_EQ(brute, weight_distribution_closed(fam, n, s)) << family_name(fam) << " n=" << n << " s=" << s;
                EXPECT_EQ(brute, weight_distribution_from_walsh(walsh_table(f)));
                EXPECT_EQ(brute.total(), pow3(n + 1));
                EXPECT_EQ(brute[0], 1);
                EXPECT_EQ(brute.total_weight(), (pow3(n) - 1) * 2 * pow3(n));
            }
    }
}

TEST(WeightDistribution, Accessors) {
    const WeightDistribution d{{0, 1}, {5, 1}, {6, 1}};
    EXPECT_EQ(d.min_nonzero(), 5);
    EXPECT_EQ(d.max_nonzero(), 6);
    EXPECT_EQ(d[7], 0);
    EXPECT_THROW(WeightDistribution({{0, 1}}).min_nonzero(), std::domain_error);
}

}  // namespace
}  // namespace ternmin
