#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ternmin {

/// Element of the prime field F_3.
class Gf3 {
  public:
    constexpr Gf3() noexcept = default;
    constexpr explicit Gf3(int v) noexcept : value_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    static constexpr Gf3 zero() noexcept { return Gf3(0); }
    static constexpr Gf3 one() noexcept { return Gf3(1); }

    constexpr std::uint8_t value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }

    friend constexpr Gf3 operator+(Gf3 a, Gf3 b) noexcept { return Gf3(a.value_ + b.value_); }
    friend constexpr Gf3 operator-(Gf3 a, Gf3 b) noexcept { return Gf3(a.value_ + 3 - b.value_); }
    friend constexpr Gf3 operator*(Gf3 a, Gf3 b) noexcept { return Gf3(a.value_ * b.value_); }
    constexpr Gf3 operator-() const noexcept { return Gf3(3 - value_); }
    constexpr Gf3 &operator+=(Gf3 o) noexcept { return *this = *this + o; }
    constexpr Gf3 &operator*=(Gf3 o) noexcept { return *this = *this * o; }

    /// Multiplicative inverse; 1 and 2 are self-inverse. Throws on zero.
    Gf3 inverse() const;

    friend constexpr bool operator==(Gf3, Gf3) noexcept = default;

  private:
    std::uint8_t value_ = 0;
};

std::ostream &operator<<(std::ostream &os, Gf3 x);

/// 3^k as a 64-bit integer (k <= 39).
constexpr std::int64_t pow3(int k) noexcept {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= 3;
    return r;
}

/// Fixed-length vector over F_3, one byte per digit.
///
/// Also used for codewords. Index i of a vector of length n corresponds to
/// the base-3 digit of weight 3^i in vec_index().
class TritVec {
  public:
    TritVec() = default;
    explicit TritVec(std::size_t len) : digits_(len, 0) {}
    TritVec(std::initializer_list<int> digits);
    explicit TritVec(std::vector<std::uint8_t> digits);

    static TritVec zero(std::size_t len) { return TritVec(len); }

    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }

    Gf3 operator[](std::size_t i) const noexcept { return Gf3(digits_[i]); }
    void set(std::size_t i, Gf3 v) noexcept { digits_[i] = v.value(); }

    std::span<const std::uint8_t> digits() const noexcept { return digits_; }

    bool is_zero() const noexcept;
    std::size_t weight() const noexcept;

    TritVec &operator+=(const TritVec &o);
    TritVec &operator-=(const TritVec &o);
    friend TritVec operator+(TritVec a, const TritVec &b) { return a += b; }
    friend TritVec operator-(TritVec a, const TritVec &b) { return a -= b; }
    TritVec operator-() const;
    friend TritVec operator*(Gf3 c, const TritVec &v);

    /// Concatenation (this, tail).
    TritVec concat(const TritVec &tail) const;

    std::string to_string() const;

    friend bool operator==(const TritVec &, const TritVec &) = default;
    friend auto operator<=>(const TritVec &, const TritVec &) = default;

  private:
    std::vector<std::uint8_t> digits_;
};

std::ostream &operator<<(std::ostream &os, const TritVec &v);

/// Standard inner product. Throws std::invalid_argument on length mismatch.
Gf3 dot(const TritVec &u, const TritVec &v);

/// Little-endian base-3 index: sum of v_k * 3^k.
std::int64_t vec_index(const TritVec &v);

/// Inverse of vec_index for vectors of length n. Throws std::out_of_range.
TritVec index_vec(std::int64_t i, int n);

}  // namespace ternmin
