#include "ternmin/spread_function.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ternmin {

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::Characteristic:
        return "char";
    case Family::Ternary:
        return "ternary";
    case Family::Custom:
        break;
    }
    return "custom";
}

SpreadFunction SpreadFunction::custom(int n, std::vector<Gf3> table) {
    if (n < 1 || n > 16) throw std::invalid_argument("SpreadFunction::custom: n outside [1, 16]");
    if (static_cast<std::int64_t>(table.size()) != pow3(n))
        throw std::invalid_argument("SpreadFunction::custom: table must have 3^n entries");
    SpreadFunction f;
    f.n_ = n;
    f.table_ = std::move(table);
    return f;
}

std::size_t SpreadFunction::support_size() const {
    return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](Gf3 v) { return !v.is_zero(); }));
}

SpreadFunction make_spread_function(std::shared_ptr<const PartialSpread> spread, Family family,
                                    std::vector<std::size_t> indices) {
    if (!spread) throw std::invalid_argument("spread function: null spread");
    const std::size_t order = spread->order();
    for (auto i : indices)
        if (i >= order)
            throw std::out_of_range("spread function: member index " + std::to_string(i) + " >= spread order " +
                                    std::to_string(order));
    if (std::set<std::size_t>(indices.begin(), indices.end()).size() != indices.size())
        throw std::invalid_argument("spread function: duplicate member indices");
    if (indices.empty()) throw std::invalid_argument("spread function: empty index set");
    if (family == Family::Ternary && indices.size() % 2 != 0)
        throw std::invalid_argument("spread function: ternary family needs an even number of indices");

    SpreadFunction f;
    f.n_ = static_cast<int>(spread->ambient_dim());
    f.family_ = family;
    f.s_ = static_cast<int>(family == Family::Ternary ? indices.size() / 2 : indices.size());

    // value assigned to each member; 0 for members outside A
    std::vector<std::uint8_t> member_value(order, 0);
    for (std::size_t k = 0; k < indices.size(); ++k)
        member_value[indices[k]] = (family == Family::Ternary && k >= static_cast<std::size_t>(f.s_)) ? 2 : 1;

    const auto &member_of = spread->member_of();
    f.table_.resize(member_of.size());
    for (std::size_t x = 0; x < member_of.size(); ++x)
        if (member_of[x] >= 0) f.table_[x] = Gf3(member_value[static_cast<std::size_t>(member_of[x])]);

    f.indices_ = std::move(indices);
    f.spread_ = std::move(spread);
    return f;
}

SpreadFunction char_indicator(std::shared_ptr<const PartialSpread> spread, std::size_t i) {
    return make_spread_function(std::move(spread), Family::Characteristic, {i});
}

SpreadFunction pair_indicator(std::shared_ptr<const PartialSpread> spread, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("pair_indicator: indices must differ");
    return make_spread_function(std::move(spread), Family::Ternary, {i, j});
}

SpreadFunction char_sum(std::shared_ptr<const PartialSpread> spread, std::vector<std::size_t> indices) {
    return make_spread_function(std::move(spread), Family::Characteristic, std::move(indices));
}

SpreadFunction ternary_sum(std::shared_ptr<const PartialSpread> spread, std::vector<std::size_t> indices) {
    return make_spread_function(std::move(spread), Family::Ternary, std::move(indices));
}

std::optional<TritVec> is_linear(const SpreadFunction &f) {
    const int n = f.n();
    if (!f.table()[0].is_zero()) return std::nullopt;
    // A linear function is pinned down by its values on the unit vectors.
    TritVec w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w.set(static_cast<std::size_t>(k), f(pow3(k)));
    for (std::int64_t x = 0; x < pow3(n); ++x)
        if (f(x) != dot(w, index_vec(x, n))) return std::nullopt;
    return w;
}

SpreadFunction linear_function(const TritVec &w) {
    const int n = static_cast<int>(w.size());
    std::vector<Gf3> table(static_cast<std::size_t>(pow3(n)));
    for (std::int64_t x = 0; x < pow3(n); ++x) table[static_cast<std::size_t>(x)] = dot(w, index_vec(x, n));
    return SpreadFunction::custom(n, std::move(table));
}

}  // namespace ternmin
