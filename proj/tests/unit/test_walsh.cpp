#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>

#include "ternmin/walsh.hpp"

namespace ternmin {
namespace {

std::shared_ptr<const PartialSpread> spread(int t) { return std::make_shared<const PartialSpread>(spread_construct(t)); }

std::vector<SpreadFunction> family_functions(const std::shared_ptr<const PartialSpread> &sp, Family fam) {
    std::vector<SpreadFunction> out;
    const int order = static_cast<int>(sp->order());
    const int hi = fam == Family::Characteristic ? order : order / 2;
    for (int s = 1; s <= hi; ++s) {
        std::vector<std::size_t> a;
        for (int i = 0; i < (fam == Family::Ternary ? 2 * s : s); ++i) a.push_back(static_cast<std::size_t>(i));
        out.push_back(fam == Family::Ternary ? ternary_sum(sp, a) : char_sum(sp, a));
    }
    return out;
}

// Floating-point oracle: sum of exp(2 pi i (f(x) - w.x) / 3).
std::complex<double> complex_walsh(const SpreadFunction &f, const TritVec &w) {
    std::complex<double> sum = 0;
    for (std::int64_t x = 0; x < pow3(f.n()); ++x) {
        const int e = (f(x) - dot(w, index_vec(x, f.n()))).value();
        sum += std::polar(1.0, 2.0 * std::numbers::pi * e / 3.0);
    }
    return sum;
}

std::complex<double> to_complex(Eisenstein z) {
    const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    return static_cast<double>(z.a) + static_cast<double>(z.b) * omega;
}

TEST(Eisenstein, RingArithmetic) {
    const Eisenstein w{0, 1};
    EXPECT_EQ(w * w, (Eisenstein{-1, -1}));
    EXPECT_EQ(w * w * w, (Eisenstein{1, 0}));
    EXPECT_EQ(w.times_omega(), w * w);
    EXPECT_EQ((Eisenstein{1, 0} + w + w * w), (Eisenstein{0, 0}));
    const Eisenstein z{7, 2};
    EXPECT_EQ(z.twice_re(), 12);
    EXPECT_EQ(z.norm(), 49 - 14 + 4);
    EXPECT_EQ(z * z.conj(), (Eisenstein{z.norm(), 0}));
    EXPECT_NEAR(std::norm(to_complex(z)), static_cast<double>(z.norm()), 1e-9);
}

TEST(Walsh, ZeroFunction) {
    const auto f = SpreadFunction::custom(2, std::vector<Gf3>(9));
    EXPECT_EQ(walsh_transform(f, TritVec{0, 0}), (Eisenstein{9, 0}));
    for (std::int64_t w = 1; w < 9; ++w) EXPECT_EQ(walsh_transform(f, index_vec(w, 2)), (Eisenstein{0, 0}));
}

TEST(Walsh, SmallCharacteristicExample) {
    // A = {span{(1,1)}}, t = s = 1
    const auto f = char_sum(spread(1), {1});
    const auto in_dual = walsh_transform(f, TritVec{1, 2});
    const auto at_zero = walsh_transform(f, TritVec{0, 0});
    const auto oracle_dual = complex_walsh(f, TritVec{1, 2});
    const auto oracle_zero = complex_walsh(f, TritVec{0, 0});
    EXPECT_NEAR(std::abs(to_complex(in_dual) - oracle_dual), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(to_complex(at_zero) - oracle_zero), 0.0, 1e-9);

    EXPECT_EQ(in_dual, (Eisenstein{-2, 2}));
    EXPECT_EQ(in_dual.twice_re(), -6);
    EXPECT_EQ(at_zero, (Eisenstein{7, 2}));
    EXPECT_EQ(at_zero.twice_re(), 12);  // 2(3^2 - (3/2)(3 - 1))
    EXPECT_THROW(walsh_transform(f, TritVec{1}), std::invalid_argument);
}

TEST(Walsh, ExactMatchesFloatingOracle) {
    for (Family fam : {Family::Characteristic, Family::Ternary})
        for (const auto &f : family_functions(spread(2), fam))
            for (std::int64_t w = 0; w < 81; ++w) {
                const auto wv = index_vec(w, 4);
                EXPECT_NEAR(std::abs(to_complex(walsh_transform(f, wv)) - complex_walsh(f, wv)), 0.0, 1e-8);
            }
}

TEST(Walsh, ButterflyEqualsDirect) {
    for (int t = 1; t <= 3; ++t)
        for (Family fam : {Family::Characteristic, Family::Ternary}) {
            const auto fs = family_functions(spread(t), fam);
            for (std::size_t i = 0; i < fs.size(); i += (t == 3 ? 7 : 1))
                EXPECT_EQ(walsh_table(fs[i]).values, walsh_table(fs[i], WalshMethod::Direct).values);
        }
}

TEST(Walsh, ParsevalAndInversion) {
    for (int t = 1; t <= 2; ++t)
        for (Family fam : {Family::Characteristic, Family::Ternary})
            for (const auto &f : family_functions(spread(t), fam)) {
                const auto table = walsh_table(f);
                std::int64_t energy = 0;
                Eisenstein sum;
                for (const auto &z : table.values) {
                    EXPECT_GE(z.norm(), 0);
                    energy += z.norm();
                    sum += z;
                }
                EXPECT_EQ(energy, pow3(4 * t));
                EXPECT_EQ(sum, (Eisenstein{pow3(2 * t), 0}));
            }
}

TEST(Walsh, NegationPreservesRealPart) {
    for (int t = 1; t <= 2; ++t)
        for (Family fam : {Family::Characteristic, Family::Ternary})
            for (const auto &f : family_functions(spread(t), fam)) {
                const auto table = walsh_table(f);
                for (std::int64_t w = 0; w < pow3(2 * t); ++w)
                    EXPECT_EQ(table.twice_re(w), table.twice_re(vec_index(-index_vec(w, 2 * t))));
            }
}

TEST(Classify, Cases) {
    const auto f = char_sum(spread(1), {1});
    EXPECT_EQ(classify(f, TritVec{0, 0}).kind, SpectrumCase::Kind::ZeroVector);
    const auto c = classify(f, TritVec{1, 2});
    EXPECT_EQ(c.kind, SpectrumCase::Kind::InDualOf);
    EXPECT_EQ(c.member, 1u);
    EXPECT_EQ(classify(f, TritVec{1, 0}).kind, SpectrumCase::Kind::OutsideAllDuals);
    EXPECT_THROW(classify(SpreadFunction::custom(2, std::vector<Gf3>(9)), TritVec{1, 0}), std::invalid_argument);

    const auto g = ternary_sum(spread(2), {0, 1, 2, 3});
    const auto &duals = g.spread()->duals();
    const TritVec in0 = duals[0].basis()[0], in3 = duals[3].basis()[0];
    EXPECT_EQ(classify(g, in0), (SpectrumCase{SpectrumCase::Kind::InDualOf, 0, SpectrumCase::Side::First}));
    EXPECT_EQ(classify(g, in3), (SpectrumCase{SpectrumCase::Kind::InDualOf, 3, SpectrumCase::Side::Second}));
}

TEST(Classify, FullSpreadClassifiesUniquely) {
    const auto sp = spread(2);
    for (std::int64_t w = 1; w < 81; ++w) {
        int members = 0;
        for (const auto &d : sp->duals()) members += d.contains(index_vec(w, 4)) ? 1 : 0;
        EXPECT_EQ(members, 1);
    }
}

TEST(ClosedForm, TwiceReExamples) {
    using K = SpectrumCase::Kind;
    EXPECT_EQ(twice_re_closed_form(Family::Characteristic, 4, 2, {K::ZeroVector}), 114);
    EXPECT_EQ(twice_re_closed_form(Family::Ternary, 4, 2, {K::InDualOf, 0, SpectrumCase::Side::First}), -15);
    EXPECT_EQ(twice_re_closed_form(Family::Ternary, 4, 2, {K::InDualOf, 0, SpectrumCase::Side::Second}), -15);
    EXPECT_EQ(twice_re_closed_form(Family::Characteristic, 2, 1, {K::InDualOf}), -6);
    EXPECT_EQ(full_closed_form(Family::Characteristic, 2, 1, {K::InDualOf}), (Eisenstein{-2, 2}));
    EXPECT_EQ(full_closed_form(Family::Characteristic, 2, 1, {K::ZeroVector}), (Eisenstein{7, 2}));
    for (int s = 1; s <= 14; ++s) EXPECT_EQ(full_closed_form(Family::Ternary, 6, s, {K::OutsideAllDuals}).b, 0);
    EXPECT_THROW(full_closed_form(Family::Custom, 2, 1, {}), std::invalid_argument);
}

TEST(ClosedForm, MatchesDirectSumExhaustive) {
    for (int t = 1; t <= 2; ++t)
        for (Family fam : {Family::Characteristic, Family::Ternary})
            for (const auto &f : family_functions(spread(t), fam))
                for (std::int64_t w = 0; w < pow3(2 * t); ++w) {
                    const auto wv = index_vec(w, 2 * t);
                    const auto c = classify(f, wv);
                    const auto z = walsh_transform(f, wv);
                    EXPECT_EQ(z, full_closed_form(fam, 2 * t, f.s(), c)) << family_name(fam) << " s=" << f.s() << " w=" << w;
                    EXPECT_EQ(z.twice_re(), twice_re_closed_form(fam, 2 * t, f.s(), c));
                }
}

TEST(ClosedForm, IndependentOfIndexChoice) {
    const auto sp = spread(2);
    const auto f = char_sum(sp, {7, 2, 9});
    const auto g = ternary_sum(sp, {8, 3, 1, 6});
    for (std::int64_t w = 0; w < 81; ++w) {
        const auto wv = index_vec(w, 4);
        EXPECT_EQ(walsh_transform(f, wv), full_closed_form(Family::Characteristic, 4, 3, classify(f, wv)));
        EXPECT_EQ(walsh_transform(g, wv), full_closed_form(Family::Ternary, 4, 2, classify(g, wv)));
    }
}

}  // namespace
}  // namespace ternmin
