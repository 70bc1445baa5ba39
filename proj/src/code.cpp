#include "ternmin/code.hpp"

#include <ostream>
#include <string>

#include "ternmin/subspace.hpp"

namespace ternmin {

LinearFunctionError::LinearFunctionError(const TritVec &w)
    : std::invalid_argument("function is linear: f(x) = w.x with w = " + w.to_string()), w_(w) {}

TritVec codeword(const SpreadFunction &f, Gf3 alpha, const TritVec &w) {
    const int n = f.n();
    if (w.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("codeword: length mismatch");
    const std::int64_t points = pow3(n);
    TritVec c(static_cast<std::size_t>(points - 1));
    for (std::int64_t j = 1; j < points; ++j) c.set(static_cast<std::size_t>(j - 1), alpha * f(j) + dot(w, index_vec(j, n)));
    return c;
}

TernaryLinearCode build_code(const SpreadFunction &f) {
    if (auto w = is_linear(f)) throw LinearFunctionError(*w);
    TernaryLinearCode code(f);
    const int n = f.n();
    code.n_ = n;
    const std::size_t len = code.length();
    code.generator_.assign(static_cast<std::size_t>(n) + 1, TritVec(len));
    for (std::size_t j = 0; j < len; ++j) {
        const auto x = static_cast<std::int64_t>(j) + 1;
        code.generator_[0].set(j, f(x));
        const TritVec point = index_vec(x, n);
        for (int k = 0; k < n; ++k) code.generator_[static_cast<std::size_t>(k) + 1].set(j, point[static_cast<std::size_t>(k)]);
    }
    code.rank_ = rank(code.generator_);
    return code;
}

TritVec TernaryLinearCode::codeword(std::int64_t message) const {
    if (message < 0 || message >= message_count()) throw std::out_of_range("TernaryLinearCode::codeword: bad message index");
    const std::int64_t per_alpha = pow3(n_);
    TritVec c = Gf3(static_cast<int>(message / per_alpha)) * generator_[0];
    const TritVec w = index_vec(message % per_alpha, n_);
    for (int k = 0; k < n_; ++k) {
        const Gf3 coef = w[static_cast<std::size_t>(k)];
        if (!coef.is_zero()) c += coef * generator_[static_cast<std::size_t>(k) + 1];
    }
    return c;
}

WeightDistribution::WeightDistribution(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> entries) {
    for (const auto &[w, m] : entries) add(w, m);
}

void WeightDistribution::add(std::int64_t weight, std::int64_t count) {
    if (count == 0) return;
    entries_[weight] += count;
}

std::int64_t WeightDistribution::operator[](std::int64_t weight) const {
    auto it = entries_.find(weight);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightDistribution::total() const {
    std::int64_t sum = 0;
    for (const auto &[w, m] : entries_) sum += m;
    return sum;
}

std::int64_t WeightDistribution::total_weight() const {
    std::int64_t sum = 0;
    for (const auto &[w, m] : entries_) sum += w * m;
    return sum;
}

std::int64_t WeightDistribution::min_nonzero() const {
    for (const auto &[w, m] : entries_)
        if (w > 0 && m > 0) return w;
    throw std::domain_error("weight distribution has no nonzero weight");
}

std::int64_t WeightDistribution::max_nonzero() const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        if (it->first > 0 && it->second > 0) return it->first;
    throw std::domain_error("weight distribution has no nonzero weight");
}

std::ostream &operator<<(std::ostream &os, const WeightDistribution &d) {
    os << '{';
    bool first = true;
    for (const auto &[w, m] : d.entries()) {
        os << (first ? "" : ", ") << w << ':' << m;
        first = false;
    }
    return os << '}';
}

std::int64_t weight_from_walsh(Gf3 alpha, std::int64_t twice_re, int n) {
    if (alpha.is_zero()) throw std::invalid_argument("weight_from_walsh: alpha must be nonzero");
    const std::int64_t numer = 2 * pow3(n) - twice_re;
    if (numer % 3 != 0)
        throw std::logic_error("weight_from_walsh: 2*3^n - 2Re = " + std::to_string(numer) + " is not divisible by 3");
    const std::int64_t weight = numer / 3;
    if (weight < 0 || weight > pow3(n) - 1)
        throw std::logic_error("weight_from_walsh: weight " + std::to_string(weight) + " out of range");
    return weight;
}

WeightDistribution weight_distribution_bruteforce(const TernaryLinearCode &code) {
    WeightDistribution dist;
    for (std::int64_t m = 0; m < code.message_count(); ++m)
        dist.add(static_cast<std::int64_t>(code.codeword(m).weight()));
    return dist;
}

WeightDistribution weight_distribution_from_walsh(const WalshTable &table) {
    const int n = table.n;
    const std::int64_t points = pow3(n);
    WeightDistribution dist;
    dist.add(0);
    dist.add(points - pow3(n - 1), points - 1);
    for (std::int64_t w = 0; w < points; ++w) {
        const std::int64_t neg = vec_index(-index_vec(w, n));
        dist.add(weight_from_walsh(Gf3(2), table.twice_re(w), n));
        dist.add(weight_from_walsh(Gf3(1), table.twice_re(neg), n));
    }
    return dist;
}

int max_s(Family family, int n) {
    const auto q = static_cast<int>(pow3(n / 2));
    switch (family) {
    case Family::Characteristic:
        return q + 1;
    case Family::Ternary:
        return (q + 1) / 2;
    case Family::Custom:
        break;
    }
    throw std::invalid_argument("max_s: custom family has no s");
}

namespace {

struct ClosedRows {
    std::int64_t light, simplex, outside_weight, outside_count, dual_weight, dual_count;
};

// Rows: {0:1, light:2, simplex:3^n-1, outside_weight:outside_count, dual_weight:dual_count}
ClosedRows closed_rows(Family family, int n, int s) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("closed form: n must be even and >= 2");
    if (s < 1 || s > max_s(family, n))
        throw std::invalid_argument("closed form: s=" + std::to_string(s) + " outside [1, " +
                                    std::to_string(max_s(family, n)) + "]");
    const std::int64_t q = pow3(n / 2);
    const std::int64_t simplex = pow3(n) - pow3(n - 1);
    // Number of members carrying a nonzero value.
    const std::int64_t used = family == Family::Ternary ? 2 * std::int64_t{s} : s;
    return {used * (q - 1), simplex, simplex - used, 2 * (q + 1 - used) * (q - 1), simplex + q - used,
            2 * used * (q - 1)};
}

}  // namespace

WeightDistribution weight_distribution_closed(Family family, int n, int s) {
    const ClosedRows r = closed_rows(family, n, s);
    WeightDistribution d;
    d.add(0);
    d.add(r.light, 2);
    d.add(r.simplex, pow3(n) - 1);
    d.add(r.outside_weight, r.outside_count);
    d.add(r.dual_weight, r.dual_count);
    return d;
}

WeightDistribution weight_distribution_transposed(Family family, int n, int s) {
    const ClosedRows r = closed_rows(family, n, s);
    WeightDistribution d;
    d.add(0);
    d.add(r.light, 2);
    d.add(r.simplex, pow3(n) - 1);
    d.add(r.outside_weight, r.dual_count);
    d.add(r.dual_weight, r.outside_count);
    return d;
}

}  // namespace ternmin
