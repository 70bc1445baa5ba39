#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ternmin/gf3.hpp"

namespace ternmin {

/// Reduced row-echelon form of the given rows; zero rows are dropped.
/// All rows must share one length.
std::vector<TritVec> row_reduce(std::vector<TritVec> rows);

/// Rank over F_3 of the matrix whose rows are given.
std::size_t rank(std::vector<TritVec> rows);

/// Subspace of F_3^n held by its canonical RREF basis.
///
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
  public:
    /// Span of arbitrary vectors of length n (dependent or zero vectors allowed).
    static Subspace span(std::size_t n, std::vector<TritVec> vectors);
    static Subspace zero(std::size_t n) { return span(n, {}); }
    static Subspace full(std::size_t n);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<TritVec> &basis() const noexcept { return basis_; }
    /// 3^dim.
    std::int64_t size() const noexcept { return pow3(static_cast<int>(basis_.size())); }

    bool contains(const TritVec &v) const;

    /// Orthogonal complement under the standard inner product.
    Subspace dual() const;

    /// All 3^dim elements, ordered by vec_index of their coordinate vector in the basis.
    std::vector<TritVec> elements() const;

    friend bool operator==(const Subspace &, const Subspace &) = default;

  private:
    Subspace(std::size_t n, std::vector<TritVec> basis) : n_(n), basis_(std::move(basis)) {}

    std::size_t n_ = 0;
    std::vector<TritVec> basis_;
};

/// True iff the two subspaces meet only in 0 (rank of stacked bases equals the sum of dimensions).
bool intersects_trivially(const Subspace &a, const Subspace &b);

/// counts[k] = |{x in W : y.x = k}| for k = 0, 1, 2.
std::array<std::int64_t, 3> section_count(const Subspace &w, const TritVec &y);

/// Ordered collection of pairwise trivially-intersecting t-dimensional subspaces of F_3^{2t}.
class PartialSpread {
  public:
    /// Validates dimensions and pairwise disjointness; throws std::invalid_argument.
    PartialSpread(std::size_t n, std::vector<Subspace> members);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t half_dim() const noexcept { return n_ / 2; }
    std::size_t order() const noexcept { return members_.size(); }
    /// 3^t + 1 members: the nonzero vectors of the members partition F_3^n \ {0}.
    bool is_full() const noexcept;

    const std::vector<Subspace> &members() const noexcept { return members_; }
    const Subspace &operator[](std::size_t i) const { return members_.at(i); }
    /// Duals of the members, same order.
    const std::vector<Subspace> &duals() const noexcept { return duals_; }

    /// member_of[vec_index(x)] is the member containing x, or -1 (always -1 for x = 0).
    const std::vector<int> &member_of() const noexcept { return member_of_; }
    /// dual_of[vec_index(w)] is the member whose dual contains w, or -1 (always -1 for w = 0).
    const std::vector<int> &dual_of() const noexcept { return dual_of_; }

  private:
    std::size_t n_;
    std::vector<Subspace> members_;
    std::vector<Subspace> duals_;
    std::vector<int> member_of_;
    std::vector<int> dual_of_;
};

/// Full spread of F_3^{2t} from the model F_3^{2t} = GF(3^t)^2.
///
/// Members are W_a = {(x, a x)} for a in GF(3^t) in index order, then
/// W_inf = {(0, y)}. Throws std::out_of_range unless 1 <= t <= 4.
PartialSpread spread_construct(int t);

}  // namespace ternmin
