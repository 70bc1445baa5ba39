#include "ternmin/minimality.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace ternmin {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

bool covers(const TritVec &c1, const TritVec &c2) {
    if (c1.size() != c2.size()) throw std::invalid_argument("covers: length mismatch");
    for (std::size_t i = 0; i < c1.size(); ++i)
        if (!c1[i].is_zero() && c2[i].is_zero()) return false;
    return true;
}

bool covers_via_weight_identity(const TritVec &c1, const TritVec &c2) {
    if (c1.size() != c2.size()) throw std::invalid_argument("covers_via_weight_identity: length mismatch");
    const auto lhs = static_cast<std::int64_t>((c2 + c1).weight() + (c2 + Gf3(2) * c1).weight());
    const auto rhs = 2 * static_cast<std::int64_t>(c2.weight()) - static_cast<std::int64_t>(c1.weight());
    return lhs == rhs;
}

std::string_view verdict_name(Verdict v) noexcept { return v == Verdict::Minimal ? "Minimal" : "NotMinimal"; }

std::string_view method_name(Method m) noexcept {
    switch (m) {
    case Method::BruteForce:
        return "brute";
    case Method::WalshCriterion:
        return "walsh";
    case Method::WeightIdentity:
        break;
    }
    return "weight-identity";
}

AbResult ab_check(const WeightDistribution &dist) {
    const Rational ratio = Rational::make(dist.min_nonzero(), dist.max_nonzero());
    return {ratio, ratio > Rational{2, 3}};
}

namespace {

void fill_ratio(MinimalityReport &report, const WeightDistribution &dist) {
    const AbResult ab = ab_check(dist);
    report.wt_min = dist.min_nonzero();
    report.wt_max = dist.max_nonzero();
    report.ratio = ab.ratio;
    report.ab_satisfied = ab.satisfied;
}

struct Codebook {
    std::vector<TritVec> words;
    std::vector<std::int64_t> weights;
    std::vector<std::uint64_t> supports;  // words_per_support 64-bit blocks per codeword
    std::size_t words_per_support = 0;

    const std::uint64_t *support(std::int64_t m) const {
        return supports.data() + static_cast<std::size_t>(m) * words_per_support;
    }
};

Codebook enumerate(const TernaryLinearCode &code) {
    Codebook book;
    const auto count = static_cast<std::size_t>(code.message_count());
    book.words_per_support = (code.length() + 63) / 64;
    book.words.reserve(count);
    book.weights.reserve(count);
    book.supports.assign(count * book.words_per_support, 0);
    for (std::size_t m = 0; m < count; ++m) {
        TritVec c = code.codeword(static_cast<std::int64_t>(m));
        auto *bits = book.supports.data() + m * book.words_per_support;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!c[j].is_zero()) bits[j / 64] |= std::uint64_t{1} << (j % 64);
        book.weights.push_back(static_cast<std::int64_t>(c.weight()));
        book.words.push_back(std::move(c));
    }
    return book;
}

WeightDistribution distribution_of(const Codebook &book) {
    WeightDistribution d;
    for (auto w : book.weights) d.add(w);
    return d;
}

// Message indices are base-3 numbers (w digits low, alpha high); this adds
// two messages as vectors over F_3.
class MessageArithmetic {
  public:
    explicit MessageArithmetic(int digits) : digits_(digits) {}

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t out = 0, place = 1;
        for (int k = 0; k < digits_; ++k) {
            out += ((a % 3 + b % 3) % 3) * place;
            a /= 3;
            b /= 3;
            place *= 3;
        }
        return out;
    }
    std::int64_t scale2(std::int64_t a) const { return add(a, a); }

  private:
    int digits_;
};

}  // namespace

MinimalityReport is_minimal_bruteforce(const TernaryLinearCode &code) {
    const Codebook book = enumerate(code);
    MinimalityReport report;
    report.method = Method::BruteForce;
    fill_ratio(report, distribution_of(book));

    const auto count = static_cast<std::int64_t>(book.words.size());
    const std::size_t blocks = book.words_per_support;
    for (std::int64_t m1 = 0; m1 < count; ++m1) {
        if (book.weights[static_cast<std::size_t>(m1)] == 0) continue;
        const std::uint64_t *s1 = book.support(m1);
        const TritVec &c1 = book.words[static_cast<std::size_t>(m1)];
        for (std::int64_t m2 = 0; m2 < count; ++m2) {
            if (m1 == m2 || book.weights[static_cast<std::size_t>(m1)] > book.weights[static_cast<std::size_t>(m2)])
                continue;
            const std::uint64_t *s2 = book.support(m2);
            bool inside = true;
            for (std::size_t b = 0; b < blocks && inside; ++b) inside = (s1[b] & ~s2[b]) == 0;
            if (!inside) continue;
            const TritVec &c2 = book.words[static_cast<std::size_t>(m2)];
            if (c1 == c2 || c1 == Gf3(2) * c2) continue;
            report.verdict = Verdict::NotMinimal;
            report.witness = CoveringPair{m1, m2, c1, c2};
            return report;
        }
    }
    return report;
}

MinimalityReport is_minimal_weight_identity(const TernaryLinearCode &code) {
    const auto count = code.message_count();
    std::vector<std::int64_t> weight(static_cast<std::size_t>(count));
    for (std::int64_t m = 0; m < count; ++m) weight[static_cast<std::size_t>(m)] = static_cast<std::int64_t>(code.codeword(m).weight());

    MinimalityReport report;
    report.method = Method::WeightIdentity;
    WeightDistribution dist;
    for (auto w : weight) dist.add(w);
    fill_ratio(report, dist);

    const MessageArithmetic msg(code.n() + 1);
    for (std::int64_t m1 = 0; m1 < count; ++m1) {
        const std::int64_t w1 = weight[static_cast<std::size_t>(m1)];
        if (w1 == 0) continue;
        const std::int64_t m1x2 = msg.scale2(m1);
        for (std::int64_t m2 = 0; m2 < count; ++m2) {
            const std::int64_t w2 = weight[static_cast<std::size_t>(m2)];
            if (m1 == m2 || w1 > w2) continue;
            const std::int64_t lhs =
                weight[static_cast<std::size_t>(msg.add(m2, m1))] + weight[static_cast<std::size_t>(msg.add(m2, m1x2))];
            if (lhs != 2 * w2 - w1) continue;
            // Covered; a scalar multiple of c2 is the only allowed cover.
            // c1 == c2 iff c1 + 2 c2 = 0; c1 == 2 c2 iff c1 + c2 = 0.
            if (weight[static_cast<std::size_t>(msg.add(m1, msg.scale2(m2)))] == 0 ||
                weight[static_cast<std::size_t>(msg.add(m1, m2))] == 0)
                continue;
            report.verdict = Verdict::NotMinimal;
            report.witness = CoveringPair{m1, m2, code.codeword(m1), code.codeword(m2)};
            return report;
        }
    }
    return report;
}

MinimalityReport check_walsh_conditions(const WalshTable &table) {
    const int n = table.n;
    const std::int64_t points = pow3(n);
    const std::int64_t target = 2 * points;  // compare 2 * LHS against 2 * 3^n

    MinimalityReport report;
    report.method = Method::WalshCriterion;
    fill_ratio(report, weight_distribution_from_walsh(table));

    const MessageArithmetic vec(n);
    std::vector<std::int64_t> tr(static_cast<std::size_t>(points));
    for (std::int64_t w = 0; w < points; ++w) tr[static_cast<std::size_t>(w)] = table.twice_re(w);

    for (std::int64_t w1 = 0; w1 < points; ++w1) {
        const std::int64_t neg_w1 = vec.scale2(w1);
        for (std::int64_t w2 = 0; w2 < points; ++w2) {
            if (w2 == w1) continue;
            const std::int64_t w3 = vec.add(neg_w1, vec.scale2(w2));
            if (w3 == w1 || w3 == w2) continue;
            const std::int64_t r1 = tr[static_cast<std::size_t>(w1)];
            const std::int64_t r2 = tr[static_cast<std::size_t>(w2)];
            const std::int64_t r3 = tr[static_cast<std::size_t>(w3)];
            int condition = 0;
            if (r1 + r2 + r3 == target)
                condition = 1;
            else if (r1 + r2 - 2 * r3 == target)
                condition = 2;
            if (condition == 0) continue;
            report.verdict = Verdict::NotMinimal;
            report.witness = SpectralTriple{index_vec(w1, n), index_vec(w2, n), index_vec(w3, n), condition};
            return report;
        }
    }
    return report;
}

MinimalityReport check_walsh_conditions(const SpreadFunction &f, WalshSource source) {
    if (auto w = is_linear(f)) throw LinearFunctionError(*w);
    if (source == WalshSource::Computed) return check_walsh_conditions(walsh_table(f));

    WalshTable table{f.n(), {}};
    const std::int64_t points = pow3(f.n());
    table.values.reserve(static_cast<std::size_t>(points));
    for (std::int64_t w = 0; w < points; ++w)
        table.values.push_back(full_closed_form(f.family(), f.n(), f.s(), classify(f, index_vec(w, f.n()))));
    return check_walsh_conditions(table);
}

HypothesisStatus hypotheses(Family family, int n, int s) {
    HypothesisStatus h;
    if (family == Family::Custom || n < 6 || n % 2 != 0) return h;
    const auto q = static_cast<int>(pow3(n / 2));
    if (family == Family::Characteristic)
        h.minimality = s >= 1 && s <= q + 1 && s != 1 && s != q && s != q + 1;
    else
        h.minimality = s >= 1 && s <= (q + 1) / 2 && 2 * s != q + 1;
    h.ratio_bound = h.minimality && s <= static_cast<int>(pow3(n / 2 - 2));
    return h;
}

}  // namespace ternmin
