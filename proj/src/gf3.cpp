#include "ternmin/gf3.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternmin {

Gf3 Gf3::inverse() const {
    if (is_zero()) throw std::domain_error("Gf3: zero has no inverse");
    return *this;
}

std::ostream &operator<<(std::ostream &os, Gf3 x) { return os << static_cast<int>(x.value()); }

TritVec::TritVec(std::initializer_list<int> digits) {
    digits_.reserve(digits.size());
    for (int d : digits) digits_.push_back(Gf3(d).value());
}

TritVec::TritVec(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto &d : digits_) d %= 3;
}

bool TritVec::is_zero() const noexcept {
    return std::all_of(digits_.begin(), digits_.end(), [](std::uint8_t d) { return d == 0; });
}

std::size_t TritVec::weight() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(digits_.begin(), digits_.end(), [](std::uint8_t d) { return d != 0; }));
}

namespace {

void require_same_length(const TritVec &a, const TritVec &b, const char *what) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
}

constexpr std::uint8_t kAdd[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
constexpr std::uint8_t kSub[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};

}  // namespace

TritVec &TritVec::operator+=(const TritVec &o) {
    require_same_length(*this, o, "TritVec::operator+=");
    for (std::size_t i = 0; i < digits_.size(); ++i) digits_[i] = kAdd[digits_[i]][o.digits_[i]];
    return *this;
}

TritVec &TritVec::operator-=(const TritVec &o) {
    require_same_length(*this, o, "TritVec::operator-=");
    for (std::size_t i = 0; i < digits_.size(); ++i) digits_[i] = kSub[digits_[i]][o.digits_[i]];
    return *this;
}

TritVec TritVec::operator-() const { return Gf3(2) * *this; }

TritVec operator*(Gf3 c, const TritVec &v) {
    TritVec r(v.size());
    const std::uint8_t k = c.value();
    for (std::size_t i = 0; i < v.size(); ++i) r.digits_[i] = static_cast<std::uint8_t>((k * v.digits_[i]) % 3);
    return r;
}

TritVec TritVec::concat(const TritVec &tail) const {
    TritVec r = *this;
    r.digits_.insert(r.digits_.end(), tail.digits_.begin(), tail.digits_.end());
    return r;
}

std::string TritVec::to_string() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::ostream &operator<<(std::ostream &os, const TritVec &v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

Gf3 dot(const TritVec &u, const TritVec &v) {
    require_same_length(u, v, "dot");
    unsigned acc = 0;
    auto a = u.digits();
    auto b = v.digits();
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<unsigned>(a[i] * b[i]);
    return Gf3(static_cast<int>(acc % 3));
}

std::int64_t vec_index(const TritVec &v) {
    std::int64_t idx = 0;
    auto d = v.digits();
    for (std::size_t k = d.size(); k-- > 0;) idx = idx * 3 + d[k];
    return idx;
}

TritVec index_vec(std::int64_t i, int n) {
    if (n < 0 || n > 39 || i < 0 || i >= pow3(n))
        throw std::out_of_range("index_vec: index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    TritVec v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        v.set(static_cast<std::size_t>(k), Gf3(static_cast<int>(i % 3)));
        i /= 3;
    }
    return v;
}

}  // namespace ternmin
