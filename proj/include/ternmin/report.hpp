#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ternmin/code.hpp"
#include "ternmin/minimality.hpp"
#include "ternmin/spread_function.hpp"
#include "ternmin/walsh.hpp"

namespace ternmin {

inline constexpr int kSchemaVersion = 1;

/// Invalid user input (CLI exit code 2).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int n = 4;
    Family family = Family::Characteristic;
    int s = 1;
    std::optional<std::vector<std::size_t>> indices;

    /// Throws ConfigError unless n is even in [2, 8], s is admissible for the
    /// family and explicit indices are distinct, in range and of size s (char) or 2s (ternary).
    void validate() const;

    /// Explicit indices, or the first s (char) / 2s (ternary) members in spread order.
    std::vector<std::size_t> effective_indices() const;
};

Family parse_family(const std::string &name);

/// Builds the full spread for n and the configured family function.
SpreadFunction make_function(const RunConfig &config);

/// "weight,multiplicity" header followed by one row per weight, ascending.
std::string weights_csv(const WeightDistribution &dist);
nlohmann::json weights_json(const RunConfig &config, const WeightDistribution &dist);

/// Header "w_index,a,b,twice_re,case" and one row per w in vec_index order.
std::string walsh_csv(const SpreadFunction &f, const WalshTable &table);

/// n+1 lines of 3^n-1 digits, f row first.
std::string gmatrix_text(const TernaryLinearCode &code);

nlohmann::json config_json(const RunConfig &config);
nlohmann::json witness_json(const Witness &w);
/// {schema, n, family, s, indices, verdict, method, witness, wt_min, wt_max, ratio, ab_satisfied, runtime_ms}
nlohmann::json minimality_json(const RunConfig &config, const MinimalityReport &report, double runtime_ms);

enum class ClaimStatus { Match, Mismatch, Corrected };

struct ClaimEntry {
    std::string id;
    std::string location;
    nlohmann::json expected;
    nlohmann::json computed;
    ClaimStatus status = ClaimStatus::Match;
};

struct ReproductionReport {
    std::vector<ClaimEntry> entries;

    bool ok() const;
    nlohmann::json to_json() const;
};

/// Exhaustive checks at n = 2, 4 and spot checks at n = 6.
ReproductionReport reproduce();

}  // namespace ternmin
