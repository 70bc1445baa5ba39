#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ternmin/gf3.hpp"
#include "ternmin/spread_function.hpp"

namespace ternmin {

/// Eisenstein integer a + b*omega, omega a primitive cube root of unity (omega^2 = -1 - omega).
struct Eisenstein {
    std::int64_t a = 0;
    std::int64_t b = 0;

    /// omega^e for e in F_3.
    static constexpr Eisenstein root(Gf3 e) noexcept {
        switch (e.value()) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        default:
            return {-1, -1};
        }
    }

    /// 2 Re(z) = 2a - b; always an integer.
    constexpr std::int64_t twice_re() const noexcept { return 2 * a - b; }
    /// |z|^2 = a^2 - ab + b^2.
    constexpr std::int64_t norm() const noexcept { return a * a - a * b + b * b; }

    constexpr Eisenstein times_omega() const noexcept { return {-b, a - b}; }
    constexpr Eisenstein conj() const noexcept { return {a - b, -b}; }

    constexpr Eisenstein &operator+=(Eisenstein o) noexcept {
        a += o.a;
        b += o.b;
        return *this;
    }
    friend constexpr Eisenstein operator+(Eisenstein x, Eisenstein y) noexcept { return x += y; }
    friend constexpr Eisenstein operator-(Eisenstein x, Eisenstein y) noexcept { return {x.a - y.a, x.b - y.b}; }
    friend constexpr Eisenstein operator*(Eisenstein x, Eisenstein y) noexcept {
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend constexpr Eisenstein operator*(std::int64_t k, Eisenstein x) noexcept { return {k * x.a, k * x.b}; }
    friend constexpr bool operator==(Eisenstein, Eisenstein) noexcept = default;
};

std::ostream &operator<<(std::ostream &os, Eisenstein z);

/// Which member of the spread's dual partition a spectral point falls in.
struct SpectrumCase {
    enum class Kind { ZeroVector, OutsideAllDuals, InDualOf };
    /// For ternary functions: whether the member carries value 1 (First) or 2 (Second).
    enum class Side { First, Second };

    Kind kind = Kind::ZeroVector;
    std::size_t member = 0;  // meaningful for InDualOf
    Side side = Side::First;  // meaningful for InDualOf

    std::string to_string() const;
    friend bool operator==(const SpectrumCase &, const SpectrumCase &) = default;
};

/// Direct character sum over all 3^n points x of omega^(f(x) - w.x).
Eisenstein walsh_transform(const SpreadFunction &f, const TritVec &w);

/// Complete spectrum, indexed by vec_index(w).
struct WalshTable {
    int n = 0;
    std::vector<Eisenstein> values;

    const Eisenstein &operator[](std::int64_t w_index) const { return values.at(static_cast<std::size_t>(w_index)); }
    std::int64_t twice_re(std::int64_t w_index) const { return (*this)[w_index].twice_re(); }
};

enum class WalshMethod { Butterfly, Direct };

/// Spectrum of f. Butterfly runs in O(n 3^n); Direct repeats walsh_transform for every w.
WalshTable walsh_table(const SpreadFunction &f, WalshMethod method = WalshMethod::Butterfly);

/// Case of w for a Characteristic or Ternary function. Throws std::invalid_argument for Custom.
SpectrumCase classify(const SpreadFunction &f, const TritVec &w);

/// 2 Re(f^(w)) predicted for a spectral case of the given family.
///
///   Characteristic: 2*3^n - 3s(3^t-1) | 3s | -3^(t+1) + 3s
///   Ternary:        2*3^n - 6s(3^t-1) | 6s | -3^(t+1) + 6s
std::int64_t twice_re_closed_form(Family family, int n, int s, const SpectrumCase &c);

/// Exact f^(w) predicted for a spectral case (t = n/2).
Eisenstein full_closed_form(Family family, int n, int s, const SpectrumCase &c);

}  // namespace ternmin
