#pragma once

#include <cstdint>

#include "ternmin/gf3.hpp"

namespace ternmin {

inline constexpr int kMaxExtDegree = 8;

/// Lexicographically smallest monic irreducible polynomial of degree t over F_3.
///
/// Candidates are ordered by their low-degree coefficients, c_0 first. The
/// result has t+1 coefficients, constant term first, leading 1 last.
/// Throws std::out_of_range unless 1 <= t <= 8.
const TritVec &irreducible_poly(int t);

/// True if the polynomial (constant term first, trailing zeros ignored) has no
/// factor of positive degree smaller than its own degree.
bool is_irreducible(const TritVec &coeffs);

/// Element of GF(3^t) = F_3[x] / irreducible_poly(t), stored as t coefficients.
class ExtFieldElem {
  public:
    ExtFieldElem(int t, TritVec coeffs);

    static ExtFieldElem zero(int t);
    static ExtFieldElem one(int t);
    /// Element whose coefficient vector is index_vec(i, t).
    static ExtFieldElem from_index(int t, std::int64_t i);

    int degree() const noexcept { return t_; }
    const TritVec &coeffs() const noexcept { return coeffs_; }
    std::int64_t index() const { return vec_index(coeffs_); }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }

    ExtFieldElem pow(std::int64_t e) const;

    friend ExtFieldElem operator+(const ExtFieldElem &a, const ExtFieldElem &b);
    friend ExtFieldElem operator*(const ExtFieldElem &a, const ExtFieldElem &b);
    friend bool operator==(const ExtFieldElem &, const ExtFieldElem &) = default;

  private:
    int t_;
    TritVec coeffs_;
};

/// Product reduced modulo irreducible_poly(t). Throws std::invalid_argument if degrees differ.
ExtFieldElem ext_mul(const ExtFieldElem &a, const ExtFieldElem &b);

}  // namespace ternmin
