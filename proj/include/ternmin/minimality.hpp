#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ternmin/code.hpp"
#include "ternmin/gf3.hpp"
#include "ternmin/spread_function.hpp"
#include "ternmin/walsh.hpp"

namespace ternmin {

/// Reduced fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &x, const Rational &y) {
        return x.num * y.den <=> y.num * x.den;
    }
};

/// True iff Supp(c1) is contained in Supp(c2). Throws std::invalid_argument on length mismatch.
bool covers(const TritVec &c1, const TritVec &c2);

/// Support inclusion decided from weights only:
/// wt(c2 + c1) + wt(c2 + 2 c1) == 2 wt(c2) - wt(c1).
bool covers_via_weight_identity(const TritVec &c1, const TritVec &c2);

enum class Verdict { Minimal, NotMinimal };
enum class Method { BruteForce, WalshCriterion, WeightIdentity };

std::string_view verdict_name(Verdict v) noexcept;
std::string_view method_name(Method m) noexcept;

/// c2 covers c1 although c1 is not a scalar multiple of c2.
struct CoveringPair {
    std::int64_t message1 = 0;
    std::int64_t message2 = 0;
    TritVec c1;
    TritVec c2;
};

/// Pairwise distinct w1, w2, w3 with w1 + w2 + w3 = 0 violating one of
///   Re f^(w1) + Re f^(w2) + Re f^(w3) != 3^n            (condition 1)
///   Re f^(w1) + Re f^(w2) - 2 Re f^(w3) != 3^n          (condition 2)
struct SpectralTriple {
    TritVec w1;
    TritVec w2;
    TritVec w3;
    int condition = 1;
};

using Witness = std::variant<CoveringPair, SpectralTriple>;

struct MinimalityReport {
    Verdict verdict = Verdict::Minimal;
    Method method = Method::BruteForce;
    std::optional<Witness> witness;  // present iff NotMinimal
    std::int64_t wt_min = 0;
    std::int64_t wt_max = 0;
    Rational ratio;
    bool ab_satisfied = false;
};

struct AbResult {
    Rational ratio;
    bool satisfied = false;
};

/// wt_min / wt_max over nonzero weights, and whether it exceeds 2/3.
/// Throws std::domain_error if there is no nonzero weight.
AbResult ab_check(const WeightDistribution &dist);

/// Sweeps every ordered pair of nonzero codewords looking for a non-trivial cover.
/// The witness is the first pair in (message1, message2) order.
MinimalityReport is_minimal_bruteforce(const TernaryLinearCode &code);

/// Same sweep, deciding cover with covers_via_weight_identity evaluated through
/// the weight of every message (c2 + c c1 is the codeword of m2 + c m1).
MinimalityReport is_minimal_weight_identity(const TernaryLinearCode &code);

enum class WalshSource { Computed, ClosedForm };

/// Evaluates both spectral conditions over every triple. Values come from the
/// computed spectrum, or from full_closed_form(classify(w)) for ClosedForm.
/// Throws LinearFunctionError if f is linear.
MinimalityReport check_walsh_conditions(const SpreadFunction &f, WalshSource source = WalshSource::Computed);

/// As above from a precomputed spectrum of f.
MinimalityReport check_walsh_conditions(const WalshTable &table);

/// Which hypotheses of the family's minimality and ratio-bound claims hold for (n, s).
struct HypothesisStatus {
    /// n >= 6 and s outside the excluded values (char: {1, 3^t, 3^t+1}; ternary: (3^t+1)/2).
    bool minimality = false;
    /// minimality hypotheses plus s <= 3^(t-2): predicts wt_min/wt_max <= 1/3.
    bool ratio_bound = false;
};

HypothesisStatus hypotheses(Family family, int n, int s);

}  // namespace ternmin
