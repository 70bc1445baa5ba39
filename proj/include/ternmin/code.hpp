#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ternmin/gf3.hpp"
#include "ternmin/spread_function.hpp"
#include "ternmin/walsh.hpp"

namespace ternmin {

/// Raised when a construction needs f to be non-linear but f(x) = w.x for some w.
class LinearFunctionError : public std::invalid_argument {
  public:
    explicit LinearFunctionError(const TritVec &w);
    const TritVec &witness() const noexcept { return w_; }

  private:
    TritVec w_;
};

/// The code {(alpha f(x) + w.x)_{x != 0} : alpha in F_3, w in F_3^n}.
///
/// Coordinate j (0-based) is the point x = index_vec(j + 1, n). Generator row 0
/// is the f row, row k (1..n) holds coordinate k-1 of every point.
class TernaryLinearCode {
  public:
    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return static_cast<std::size_t>(pow3(n_) - 1); }
    /// Rank of the generator matrix over F_3.
    std::size_t dimension() const noexcept { return rank_; }
    const std::vector<TritVec> &generator() const noexcept { return generator_; }
    const SpreadFunction &function() const noexcept { return f_; }

    /// 3^(n+1): one message per (alpha, w).
    std::int64_t message_count() const noexcept { return pow3(n_ + 1); }
    /// Message order: alpha major, then vec_index(w).
    static std::int64_t message_index(Gf3 alpha, const TritVec &w) {
        return alpha.value() * pow3(static_cast<int>(w.size())) + vec_index(w);
    }
    TritVec codeword(std::int64_t message) const;

  private:
    friend TernaryLinearCode build_code(const SpreadFunction &f);
    explicit TernaryLinearCode(SpreadFunction f) : f_(std::move(f)) {}

    int n_ = 0;
    std::size_t rank_ = 0;
    SpreadFunction f_;
    std::vector<TritVec> generator_;
};

/// Codeword (alpha f(x) + w.x) over x = index_vec(1..3^n-1).
TritVec codeword(const SpreadFunction &f, Gf3 alpha, const TritVec &w);

/// Materializes the generator matrix and its rank. Throws LinearFunctionError if f is linear.
TernaryLinearCode build_code(const SpreadFunction &f);

/// Weight map: weight -> number of codewords of that weight.
class WeightDistribution {
  public:
    WeightDistribution() = default;
    WeightDistribution(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> entries);

    void add(std::int64_t weight, std::int64_t count = 1);
    std::int64_t operator[](std::int64_t weight) const;
    const std::map<std::int64_t, std::int64_t> &entries() const noexcept { return entries_; }

    /// Sum of multiplicities.
    std::int64_t total() const;
    /// Sum of weight * multiplicity.
    std::int64_t total_weight() const;
    /// Smallest and largest nonzero weight with positive multiplicity. Throw std::domain_error if none.
    std::int64_t min_nonzero() const;
    std::int64_t max_nonzero() const;

    friend bool operator==(const WeightDistribution &, const WeightDistribution &) = default;

  private:
    std::map<std::int64_t, std::int64_t> entries_;
};

std::ostream &operator<<(std::ostream &os, const WeightDistribution &d);

/// Hamming weight of the alpha = +-1 codeword whose spectral value has the given 2Re:
/// (2*3^n - twice_re) / 3. Throws std::logic_error if that is not an integer in [0, 3^n - 1].
std::int64_t weight_from_walsh(Gf3 alpha, std::int64_t twice_re, int n);

/// Counts the weight of every codeword by enumeration.
WeightDistribution weight_distribution_bruteforce(const TernaryLinearCode &code);

/// Assembles the distribution from a spectrum: alpha = 2 reads f^(w), alpha = 1 reads f^(-w),
/// alpha = 0 gives the simplex words.
WeightDistribution weight_distribution_from_walsh(const WalshTable &table);

/// Distribution predicted for a full spread (t = n/2); coinciding weights merge.
/// Throws std::invalid_argument if s is outside the family's admissible range.
WeightDistribution weight_distribution_closed(Family family, int n, int s);

/// The closed form with the multiplicities of the last two weight rows exchanged.
/// Kept only to report how that assignment fails the total-weight identity.
WeightDistribution weight_distribution_transposed(Family family, int n, int s);

/// Largest admissible s: 3^t + 1 for Characteristic, (3^t + 1)/2 for Ternary.
int max_s(Family family, int n);

}  // namespace ternmin
