#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "ternmin/subspace.hpp"

namespace ternmin {
namespace {

TritVec random_vec(std::mt19937 &rng, std::size_t n) {
    std::uniform_int_distribution<int> digit(0, 2);
    TritVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, Gf3(digit(rng)));
    return v;
}

Subspace random_subspace(std::mt19937 &rng, std::size_t n, std::size_t m) {
    for (;;) {
        std::vector<TritVec> gens;
        for (std::size_t i = 0; i < m; ++i) gens.push_back(random_vec(rng, n));
        Subspace w = Subspace::span(n, gens);
        if (w.dim() == m) return w;
    }
}

TEST(Subspace, Contains) {
    const auto w = Subspace::span(2, {TritVec{1, 1}});
    EXPECT_TRUE(w.contains(TritVec{2, 2}));
    EXPECT_FALSE(w.contains(TritVec{1, 2}));
    EXPECT_TRUE(w.contains(TritVec{0, 0}));
    EXPECT_THROW((void)w.contains(TritVec{1, 1, 1}), std::invalid_argument);
}

TEST(Subspace, CanonicalBasis) {
    const auto a = Subspace::span(3, {TritVec{1, 2, 0}, TritVec{0, 1, 1}});
    const auto b = Subspace::span(3, {TritVec{1, 0, 1}, TritVec{2, 2, 1}, TritVec{1, 2, 0}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_EQ(a.size(), 9);
    EXPECT_EQ(a.elements().size(), 9u);
}

TEST(Subspace, DualExamples) {
    EXPECT_EQ(Subspace::span(2, {TritVec{1, 1}}).dual(), Subspace::span(2, {TritVec{1, 2}}));
    EXPECT_EQ(Subspace::full(3).dual(), Subspace::zero(3));
    EXPECT_EQ(Subspace::zero(3).dual(), Subspace::full(3));
}

TEST(Subspace, DualIsOrthogonalComplement) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const std::size_t m = static_cast<std::size_t>(trial) % (n + 1);
        const Subspace w = random_subspace(rng, n, m);
        const Subspace d = w.dual();
        EXPECT_EQ(d.dim(), n - m);
        EXPECT_EQ(d.dual(), w);
        for (const auto &x : w.basis())
            for (const auto &u : d.basis()) EXPECT_EQ(dot(x, u), Gf3(0));
    }
}

TEST(Spread, TOneMembers) {
    const PartialSpread sp = spread_construct(1);
    ASSERT_EQ(sp.order(), 4u);
    EXPECT_EQ(sp[0].basis(), std::vector<TritVec>{(TritVec{1, 0})});
    EXPECT_EQ(sp[1].basis(), std::vector<TritVec>{(TritVec{1, 1})});
    EXPECT_EQ(sp[2].basis(), std::vector<TritVec>{(TritVec{1, 2})});
    EXPECT_EQ(sp[3].basis(), std::vector<TritVec>{(TritVec{0, 1})});
    EXPECT_TRUE(sp.is_full());
}

TEST(Spread, PairwiseDisjointAndPartition) {
    for (int t = 1; t <= 3; ++t) {
        const PartialSpread sp = spread_construct(t);
        const int n = 2 * t;
        ASSERT_EQ(static_cast<std::int64_t>(sp.order()), pow3(t) + 1);
        for (std::size_t i = 0; i < sp.order(); ++i)
            for (std::size_t j = i + 1; j < sp.order(); ++j) {
                std::vector<TritVec> stacked = sp[i].basis();
                stacked.insert(stacked.end(), sp[j].basis().begin(), sp[j].basis().end());
                EXPECT_EQ(rank(stacked), static_cast<std::size_t>(n));
            }
        // every nonzero vector in exactly one member, and in exactly one member dual
        std::vector<int> hits(static_cast<std::size_t>(pow3(n)), 0), dual_hits(hits.size(), 0);
        for (std::size_t i = 0; i < sp.order(); ++i) {
            for (const auto &x : sp[i].elements()) ++hits[static_cast<std::size_t>(vec_index(x))];
            for (const auto &x : sp[i].dual().elements()) ++dual_hits[static_cast<std::size_t>(vec_index(x))];
        }
        for (std::size_t x = 1; x < hits.size(); ++x) {
            EXPECT_EQ(hits[x], 1);
            EXPECT_EQ(dual_hits[x], 1);
        }
        std::int64_t nonzero = 0;
        for (const auto &m : sp.members()) nonzero += m.size() - 1;
        EXPECT_EQ(nonzero, pow3(n) - 1);
    }
}

TEST(Spread, TTwoCoversEightyVectors) {
    const PartialSpread sp = spread_construct(2);
    EXPECT_EQ(sp.order(), 10u);
    std::set<TritVec> covered;
    for (const auto &m : sp.members())
        for (const auto &x : m.elements())
            if (!x.is_zero()) covered.insert(x);
    EXPECT_EQ(covered.size(), 80u);
}

TEST(Spread, DualsOfMembersAreDisjoint) {
    for (int t = 1; t <= 3; ++t) {
        const PartialSpread sp = spread_construct(t);
        for (std::size_t i = 0; i < sp.order(); ++i)
            for (std::size_t j = i + 1; j < sp.order(); ++j) EXPECT_TRUE(intersects_trivially(sp.duals()[i], sp.duals()[j]));
    }
}

TEST(Spread, RejectsBadInput) {
    EXPECT_THROW(spread_construct(0), std::out_of_range);
    EXPECT_THROW(spread_construct(5), std::out_of_range);
    const auto a = Subspace::span(2, {TritVec{1, 1}});
    EXPECT_THROW(PartialSpread(2, {a, Subspace::span(2, {TritVec{2, 2}})}), std::invalid_argument);
    EXPECT_THROW(PartialSpread(3, {}), std::invalid_argument);
    EXPECT_THROW(PartialSpread(4, {a}), std::invalid_argument);
    const PartialSpread partial(2, {a, Subspace::span(2, {TritVec{1, 0}})});
    EXPECT_FALSE(partial.is_full());
}

TEST(SectionCount, Examples) {
    const auto w = Subspace::span(2, {TritVec{1, 1}});
    EXPECT_EQ(section_count(w, TritVec{1, 0}), (std::array<std::int64_t, 3>{1, 1, 1}));
    EXPECT_EQ(section_count(w, TritVec{1, 2}), (std::array<std::int64_t, 3>{3, 0, 0}));
    EXPECT_THROW(section_count(w, TritVec{1}), std::invalid_argument);
}

TEST(SectionCount, EquidistributedOutsideDual) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const Subspace w = random_subspace(rng, 6, 3);
        const TritVec y = random_vec(rng, 6);
        const auto counts = section_count(w, y);
        EXPECT_EQ(counts[0] + counts[1] + counts[2], 27);
        if (w.dual().contains(y))
            EXPECT_EQ(counts, (std::array<std::int64_t, 3>{27, 0, 0}));
        else
            EXPECT_EQ(counts, (std::array<std::int64_t, 3>{9, 9, 9}));
    }
}

}  // namespace
}  // namespace ternmin
