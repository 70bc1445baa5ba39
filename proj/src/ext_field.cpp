#include "ternmin/ext_field.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace ternmin {

namespace {

using Poly = std::vector<int>;  // constant term first, entries in {0,1,2}

void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo monic-or-unit-led b over F_3.
Poly poly_mod(Poly a, const Poly &b) {
    trim(a);
    const int lead_inv = b.back();  // 1 and 2 are self-inverse
    while (a.size() >= b.size()) {
        const int factor = (a.back() * lead_inv) % 3;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - factor * b[i]) % 3 + 3) % 3;
        trim(a);
    }
    return a;
}

Poly to_poly(const TritVec &v) {
    Poly p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i].value();
    trim(p);
    return p;
}

TritVec find_irreducible(int t) {
    const std::int64_t candidates = pow3(t);
    // index_vec enumerates c_0 as the least significant digit; lexicographic
    // order with c_0 most significant needs the digits reversed.
    for (std::int64_t rank = 0; rank < candidates; ++rank) {
        TritVec low = index_vec(rank, t);
        TritVec coeffs(static_cast<std::size_t>(t) + 1);
        for (int k = 0; k < t; ++k) coeffs.set(static_cast<std::size_t>(k), low[static_cast<std::size_t>(t - 1 - k)]);
        coeffs.set(static_cast<std::size_t>(t), Gf3::one());
        if (is_irreducible(coeffs)) return coeffs;
    }
    throw std::logic_error("no irreducible polynomial of degree " + std::to_string(t));
}

}  // namespace

bool is_irreducible(const TritVec &coeffs) {
    const Poly p = to_poly(coeffs);
    if (p.size() < 2) return false;
    const int deg = static_cast<int>(p.size()) - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        for (std::int64_t i = 0; i < pow3(d); ++i) {
            Poly divisor(static_cast<std::size_t>(d) + 1);
            std::int64_t rest = i;
            for (int k = 0; k < d; ++k) {
                divisor[static_cast<std::size_t>(k)] = static_cast<int>(rest % 3);
                rest /= 3;
            }
            divisor[static_cast<std::size_t>(d)] = 1;
            if (poly_mod(p, divisor).empty()) return false;
        }
    }
    return true;
}

const TritVec &irreducible_poly(int t) {
    if (t < 1 || t > kMaxExtDegree)
        throw std::out_of_range("irreducible_poly: degree " + std::to_string(t) + " outside [1, 8]");
    static const std::array<TritVec, kMaxExtDegree + 1> table = [] {
        std::array<TritVec, kMaxExtDegree + 1> out{};
        for (int d = 1; d <= kMaxExtDegree; ++d) out[static_cast<std::size_t>(d)] = find_irreducible(d);
        return out;
    }();
    return table[static_cast<std::size_t>(t)];
}

ExtFieldElem::ExtFieldElem(int t, TritVec coeffs) : t_(t), coeffs_(std::move(coeffs)) {
    if (t < 1 || t > kMaxExtDegree) throw std::out_of_range("ExtFieldElem: degree outside [1, 8]");
    if (coeffs_.size() != static_cast<std::size_t>(t))
        throw std::invalid_argument("ExtFieldElem: expected " + std::to_string(t) + " coefficients");
}

ExtFieldElem ExtFieldElem::zero(int t) { return ExtFieldElem(t, TritVec(static_cast<std::size_t>(t))); }

ExtFieldElem ExtFieldElem::one(int t) {
    TritVec c(static_cast<std::size_t>(t));
    c.set(0, Gf3::one());
    return ExtFieldElem(t, std::move(c));
}

ExtFieldElem ExtFieldElem::from_index(int t, std::int64_t i) { return ExtFieldElem(t, index_vec(i, t)); }

ExtFieldElem ExtFieldElem::pow(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("ExtFieldElem::pow: negative exponent");
    ExtFieldElem result = one(t_);
    ExtFieldElem base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

ExtFieldElem operator+(const ExtFieldElem &a, const ExtFieldElem &b) {
    if (a.t_ != b.t_) throw std::invalid_argument("ExtFieldElem: degree mismatch");
    return ExtFieldElem(a.t_, a.coeffs_ + b.coeffs_);
}

ExtFieldElem operator*(const ExtFieldElem &a, const ExtFieldElem &b) {
    if (a.t_ != b.t_) throw std::invalid_argument("ExtFieldElem: degree mismatch");
    const auto t = static_cast<std::size_t>(a.t_);
    Poly prod(2 * t - 1, 0);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) prod[i + j] += a.coeffs_[i].value() * b.coeffs_[j].value();
    for (auto &c : prod) c %= 3;
    const Poly rem = poly_mod(std::move(prod), to_poly(irreducible_poly(a.t_)));
    TritVec out(t);
    for (std::size_t i = 0; i < rem.size(); ++i) out.set(i, Gf3(rem[i]));
    return ExtFieldElem(a.t_, std::move(out));
}

ExtFieldElem ext_mul(const ExtFieldElem &a, const ExtFieldElem &b) { return a * b; }

}  // namespace ternmin
