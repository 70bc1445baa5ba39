#include "ternmin/subspace.hpp"

#include <stdexcept>
#include <string>

#include "ternmin/ext_field.hpp"

namespace ternmin {

std::vector<TritVec> row_reduce(std::vector<TritVec> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    for (const auto &r : rows)
        if (r.size() != cols) throw std::invalid_argument("row_reduce: rows of unequal length");

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        rows[pivot_row] = rows[pivot_row][col].inverse() * rows[pivot_row];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            rows[r] -= rows[r][col] * rows[pivot_row];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::size_t rank(std::vector<TritVec> rows) { return row_reduce(std::move(rows)).size(); }

Subspace Subspace::span(std::size_t n, std::vector<TritVec> vectors) {
    for (const auto &v : vectors)
        if (v.size() != n) throw std::invalid_argument("Subspace::span: vector length differs from ambient dimension");
    return Subspace(n, row_reduce(std::move(vectors)));
}

Subspace Subspace::full(std::size_t n) {
    std::vector<TritVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        TritVec e(n);
        e.set(i, Gf3::one());
        rows.push_back(std::move(e));
    }
    return Subspace(n, std::move(rows));
}

bool Subspace::contains(const TritVec &v) const {
    if (v.size() != n_) throw std::invalid_argument("Subspace::contains: length mismatch");
    // Reduce v against the RREF rows; v is in the span iff the remainder vanishes.
    TritVec rem = v;
    for (const auto &row : basis_) {
        std::size_t pivot = 0;
        while (row[pivot].is_zero()) ++pivot;
        if (!rem[pivot].is_zero()) rem -= rem[pivot] * row;
    }
    return rem.is_zero();
}

Subspace Subspace::dual() const {
    std::vector<bool> is_pivot(n_, false);
    std::vector<std::size_t> pivots;
    for (const auto &row : basis_) {
        std::size_t p = 0;
        while (row[p].is_zero()) ++p;
        is_pivot[p] = true;
        pivots.push_back(p);
    }
    std::vector<TritVec> kernel;
    for (std::size_t free = 0; free < n_; ++free) {
        if (is_pivot[free]) continue;
        TritVec u(n_);
        u.set(free, Gf3::one());
        for (std::size_t i = 0; i < basis_.size(); ++i) u.set(pivots[i], -basis_[i][free]);
        kernel.push_back(std::move(u));
    }
    return span(n_, std::move(kernel));
}

std::vector<TritVec> Subspace::elements() const {
    const int m = static_cast<int>(dim());
    std::vector<TritVec> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::int64_t i = 0; i < size(); ++i) {
        const TritVec coef = index_vec(i, m);
        TritVec x(n_);
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (!coef[k].is_zero()) x += coef[k] * basis_[k];
        out.push_back(std::move(x));
    }
    return out;
}

bool intersects_trivially(const Subspace &a, const Subspace &b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersects_trivially: ambient mismatch");
    std::vector<TritVec> stacked = a.basis();
    stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
    return rank(std::move(stacked)) == a.dim() + b.dim();
}

std::array<std::int64_t, 3> section_count(const Subspace &w, const TritVec &y) {
    if (y.size() != w.ambient_dim()) throw std::invalid_argument("section_count: length mismatch");
    std::array<std::int64_t, 3> counts{0, 0, 0};
    for (const auto &x : w.elements()) ++counts[dot(y, x).value()];
    return counts;
}

PartialSpread::PartialSpread(std::size_t n, std::vector<Subspace> members) : n_(n), members_(std::move(members)) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("PartialSpread: ambient dimension must be even and positive");
    if (n > 16) throw std::invalid_argument("PartialSpread: ambient dimension too large to tabulate");
    const std::size_t t = n / 2;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].ambient_dim() != n || members_[i].dim() != t)
            throw std::invalid_argument("PartialSpread: member " + std::to_string(i) + " is not a " +
                                        std::to_string(t) + "-dimensional subspace of F_3^" + std::to_string(n));
        for (std::size_t j = 0; j < i; ++j)
            if (!intersects_trivially(members_[i], members_[j]))
                throw std::invalid_argument("PartialSpread: members " + std::to_string(j) + " and " +
                                            std::to_string(i) + " intersect nontrivially");
    }
    const auto space = static_cast<std::size_t>(pow3(static_cast<int>(n)));
    member_of_.assign(space, -1);
    dual_of_.assign(space, -1);
    duals_.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        duals_.push_back(members_[i].dual());
        for (const auto &x : members_[i].elements())
            if (!x.is_zero()) member_of_[static_cast<std::size_t>(vec_index(x))] = static_cast<int>(i);
        for (const auto &w : duals_.back().elements()) {
            if (w.is_zero()) continue;
            auto &slot = dual_of_[static_cast<std::size_t>(vec_index(w))];
            if (slot != -1) throw std::logic_error("PartialSpread: duals of disjoint complementary members overlap");
            slot = static_cast<int>(i);
        }
    }
}

bool PartialSpread::is_full() const noexcept {
    return static_cast<std::int64_t>(members_.size()) == pow3(static_cast<int>(n_ / 2)) + 1;
}

PartialSpread spread_construct(int t) {
    if (t < 1 || t > 4) throw std::out_of_range("spread_construct: t=" + std::to_string(t) + " outside [1, 4]");
    const auto half = static_cast<std::size_t>(t);
    const std::size_t n = 2 * half;
    std::vector<Subspace> members;
    for (std::int64_t ai = 0; ai < pow3(t); ++ai) {
        const ExtFieldElem a = ExtFieldElem::from_index(t, ai);
        std::vector<TritVec> gens;
        for (std::size_t k = 0; k < half; ++k) {
            TritVec e(half);
            e.set(k, Gf3::one());
            const ExtFieldElem x(t, e);
            gens.push_back(x.coeffs().concat((a * x).coeffs()));
        }
        members.push_back(Subspace::span(n, std::move(gens)));
    }
    std::vector<TritVec> inf;
    for (std::size_t k = 0; k < half; ++k) {
        TritVec e(half);
        e.set(k, Gf3::one());
        inf.push_back(TritVec(half).concat(e));
    }
    members.push_back(Subspace::span(n, std::move(inf)));
    return PartialSpread(n, std::move(members));
}

}  // namespace ternmin
