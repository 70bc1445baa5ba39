#include "ternmin/walsh.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternmin {

std::ostream &operator<<(std::ostream &os, Eisenstein z) { return os << '(' << z.a << ' ' << (z.b < 0 ? '-' : '+') << ' ' << (z.b < 0 ? -z.b : z.b) << "w)"; }

std::string SpectrumCase::to_string() const {
    switch (kind) {
    case Kind::ZeroVector:
        return "zero";
    case Kind::OutsideAllDuals:
        return "outside";
    case Kind::InDualOf:
        break;
    }
    return "dual:" + std::to_string(member) + (side == Side::First ? ":first" : ":second");
}

Eisenstein walsh_transform(const SpreadFunction &f, const TritVec &w) {
    if (w.size() != static_cast<std::size_t>(f.n())) throw std::invalid_argument("walsh_transform: length mismatch");
    // counts[e] = #{x : f(x) - w.x = e}
    std::int64_t counts[3] = {0, 0, 0};
    const auto &table = f.table();
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(table.size()); ++x)
        ++counts[(table[static_cast<std::size_t>(x)] - dot(w, index_vec(x, f.n()))).value()];
    // counts[0]*1 + counts[1]*w + counts[2]*(-1 - w)
    return {counts[0] - counts[2], counts[1] - counts[2]};
}

namespace {

WalshTable butterfly(const SpreadFunction &f) {
    const int n = f.n();
    WalshTable out{n, {}};
    out.values.reserve(f.table().size());
    for (Gf3 v : f.table()) out.values.push_back(Eisenstein::root(v));

    // Transform one base-3 digit at a time:
    //   out_j = v0 + w^{-j} v1 + w^{-2j} v2
    auto &v = out.values;
    for (int k = 0; k < n; ++k) {
        const std::size_t stride = static_cast<std::size_t>(pow3(k));
        for (std::size_t block = 0; block < v.size(); block += 3 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t i0 = block + off;
                const Eisenstein v0 = v[i0], v1 = v[i0 + stride], v2 = v[i0 + 2 * stride];
                const Eisenstein v1w = v1.times_omega(), v1w2 = v1w.times_omega();
                const Eisenstein v2w = v2.times_omega(), v2w2 = v2w.times_omega();
                v[i0] = v0 + v1 + v2;
                v[i0 + stride] = v0 + v1w2 + v2w;
                v[i0 + 2 * stride] = v0 + v1w + v2w2;
            }
        }
    }
    return out;
}

}  // namespace

WalshTable walsh_table(const SpreadFunction &f, WalshMethod method) {
    if (method == WalshMethod::Butterfly) return butterfly(f);
    WalshTable out{f.n(), {}};
    out.values.reserve(f.table().size());
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(f.table().size()); ++w)
        out.values.push_back(walsh_transform(f, index_vec(w, f.n())));
    return out;
}

SpectrumCase classify(const SpreadFunction &f, const TritVec &w) {
    if (f.family() == Family::Custom || !f.spread()) throw std::invalid_argument("classify: function has no spread family");
    if (w.size() != static_cast<std::size_t>(f.n())) throw std::invalid_argument("classify: length mismatch");
    if (w.is_zero()) return {};

    const auto &indices = f.indices();
    const auto &duals = f.spread()->duals();
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (duals[indices[k]].contains(w)) {
            const bool second = f.family() == Family::Ternary && k >= static_cast<std::size_t>(f.s());
            return {SpectrumCase::Kind::InDualOf, indices[k],
                    second ? SpectrumCase::Side::Second : SpectrumCase::Side::First};
        }
    }
    return {SpectrumCase::Kind::OutsideAllDuals, 0, SpectrumCase::Side::First};
}

std::int64_t twice_re_closed_form(Family family, int n, int s, const SpectrumCase &c) {
    return full_closed_form(family, n, s, c).twice_re();
}

Eisenstein full_closed_form(Family family, int n, int s, const SpectrumCase &c) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("full_closed_form: n must be even and positive");
    const std::int64_t q = pow3(n / 2);  // 3^t
    const std::int64_t full = pow3(n);
    const std::int64_t S = s;
    using Kind = SpectrumCase::Kind;

    if (family == Family::Characteristic) {
        switch (c.kind) {
        case Kind::ZeroVector:
            return {full - q * S + S, S * (q - 1)};
        case Kind::OutsideAllDuals:
            return {S, -S};
        case Kind::InDualOf:
            // 1 + (3^t - 1)w - (s - 1)w - (3^t + 1 - s); the leading 1 cancels
            // against the W_i term and must not be dropped.
            return {S - q, q - S};
        }
    } else if (family == Family::Ternary) {
        switch (c.kind) {
        case Kind::ZeroVector:
            return {full - 3 * S * (q - 1), 0};
        case Kind::OutsideAllDuals:
            return {3 * S, 0};
        case Kind::InDualOf:
            // Member carrying value 1: 3^t(w - 1) + 3s.  Value 2: 3^t(w^2 - 1) + 3s.
            if (c.side == SpectrumCase::Side::First) return {3 * S - q, q};
            return {3 * S - 2 * q, -q};
        }
    }
    throw std::invalid_argument("full_closed_form: no closed form for custom functions");
}

}  // namespace ternmin
