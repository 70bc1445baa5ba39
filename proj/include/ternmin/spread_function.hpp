#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "ternmin/gf3.hpp"
#include "ternmin/subspace.hpp"

namespace ternmin {

enum class Family { Characteristic, Ternary, Custom };

std::string_view family_name(Family f) noexcept;

/// Ternary function F_3^n -> F_3, fully tabulated in vec_index order.
///
/// Characteristic: 1 on the nonzero vectors of the members listed in
/// `indices`, 0 elsewhere; s = |indices|.
/// Ternary: 1 on the first s listed members, 2 on the last s, 0 elsewhere;
/// |indices| = 2s.
class SpreadFunction {
  public:
    /// Arbitrary tabulated function; table.size() must be 3^n.
    static SpreadFunction custom(int n, std::vector<Gf3> table);

    int n() const noexcept { return n_; }
    Family family() const noexcept { return family_; }
    int s() const noexcept { return s_; }
    const std::vector<std::size_t> &indices() const noexcept { return indices_; }
    /// Null for Custom functions.
    const std::shared_ptr<const PartialSpread> &spread() const noexcept { return spread_; }

    const std::vector<Gf3> &table() const noexcept { return table_; }
    Gf3 operator()(std::int64_t x_index) const { return table_.at(static_cast<std::size_t>(x_index)); }
    Gf3 operator()(const TritVec &x) const { return (*this)(vec_index(x)); }

    /// Number of x with f(x) != 0.
    std::size_t support_size() const;

  private:
    friend SpreadFunction make_spread_function(std::shared_ptr<const PartialSpread>, Family,
                                               std::vector<std::size_t>);
    SpreadFunction() = default;

    int n_ = 0;
    Family family_ = Family::Custom;
    int s_ = 0;
    std::vector<std::size_t> indices_;
    std::shared_ptr<const PartialSpread> spread_;
    std::vector<Gf3> table_;
};

/// Indicator of W_i \ {0}. Throws std::out_of_range if i >= order.
SpreadFunction char_indicator(std::shared_ptr<const PartialSpread> spread, std::size_t i);

/// 1 on W_i \ {0}, 2 on W_j \ {0}. Throws std::invalid_argument if i == j, std::out_of_range if out of range.
SpreadFunction pair_indicator(std::shared_ptr<const PartialSpread> spread, std::size_t i, std::size_t j);

/// Sum of char_indicator over the distinct indices A (1 <= |A| <= order).
SpreadFunction char_sum(std::shared_ptr<const PartialSpread> spread, std::vector<std::size_t> indices);

/// Sum over k of pair_indicator(A[k], A[s+k]) with |A| = 2s distinct indices.
SpreadFunction ternary_sum(std::shared_ptr<const PartialSpread> spread, std::vector<std::size_t> indices);

/// The w with f(x) = w.x for every x, if there is one.
std::optional<TritVec> is_linear(const SpreadFunction &f);

/// The function x -> w.x over F_3^n, tabulated.
SpreadFunction linear_function(const TritVec &w);

}  // namespace ternmin
