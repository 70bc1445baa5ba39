// ternmin: build the spread-based ternary codes, inspect their spectra and
// weight distributions, and decide minimality.
//
// Exit codes: 0 success / Minimal, 1 internal error, 2 invalid input, 3 NotMinimal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ternmin/code.hpp"
#include "ternmin/minimality.hpp"
#include "ternmin/report.hpp"
#include "ternmin/walsh.hpp"

namespace {

using namespace ternmin;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotMinimal = 3;

struct Options {
    int n = 4;
    std::string family = "char";
    int s = 1;
    std::vector<std::size_t> indices;
    std::string output;
    std::string format;
    std::string method;
};

void add_code_options(CLI::App *cmd, Options &opt) {
    cmd->add_option("--n", opt.n, "ambient dimension (even, 2..8)")->required();
    cmd->add_option("--family", opt.family, "char or ternary")->required();
    cmd->add_option("--s", opt.s, "number of spread members (char) or member pairs (ternary)")->required();
    cmd->add_option("--indices", opt.indices, "explicit member indices, comma separated")->delimiter(',');
}

RunConfig to_config(const Options &opt) {
    RunConfig cfg;
    cfg.n = opt.n;
    cfg.family = parse_family(opt.family);
    cfg.s = opt.s;
    if (!opt.indices.empty()) cfg.indices = opt.indices;
    cfg.validate();
    return cfg;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

int cmd_construct(const Options &opt) {
    const RunConfig cfg = to_config(opt);
    const TernaryLinearCode code = build_code(make_function(cfg));
    const std::string path = opt.output.empty() ? "code.gmatrix" : opt.output;
    emit(gmatrix_text(code), path);
    nlohmann::json meta = config_json(cfg);
    meta["schema"] = kSchemaVersion;
    meta["length"] = code.length();
    meta["dimension"] = code.dimension();
    meta["gmatrix"] = path;
    emit(meta.dump(2) + "\n", path + ".json");
    std::cout << "[" << code.length() << "," << code.dimension() << "]\n";
    return kExitOk;
}

int cmd_weights(const Options &opt) {
    const RunConfig cfg = to_config(opt);
    const SpreadFunction f = make_function(cfg);
    std::string method = opt.method.empty() ? (cfg.n <= 6 ? "brute" : "walsh") : opt.method;
    WeightDistribution dist;
    if (method == "brute") {
        if (cfg.n > 6) throw ConfigError("brute-force enumeration is limited to n <= 6");
        dist = weight_distribution_bruteforce(build_code(f));
    } else if (method == "walsh") {
        dist = weight_distribution_from_walsh(walsh_table(f));
    } else if (method == "closed") {
        dist = weight_distribution_closed(cfg.family, cfg.n, cfg.s);
    } else {
        throw ConfigError("unknown weights method '" + method + "'");
    }
    if (opt.format == "json")
        emit(weights_json(cfg, dist).dump(2) + "\n", opt.output);
    else
        emit(weights_csv(dist), opt.output);
    return kExitOk;
}

int cmd_walsh(const Options &opt) {
    const RunConfig cfg = to_config(opt);
    const SpreadFunction f = make_function(cfg);
    emit(walsh_csv(f, walsh_table(f)), opt.output);
    return kExitOk;
}

int cmd_verify(const Options &opt) {
    const RunConfig cfg = to_config(opt);
    const SpreadFunction f = make_function(cfg);
    const std::string method = opt.method.empty() ? "both" : opt.method;
    if (method != "brute" && method != "walsh" && method != "both" && method != "identity")
        throw ConfigError("unknown verify method '" + method + "'");
    if ((method == "brute" || method == "both" || method == "identity") && cfg.n > 6)
        throw ConfigError("the brute-force oracle is limited to n <= 6");

    auto timed = [&](auto &&run) {
        const auto start = std::chrono::steady_clock::now();
        MinimalityReport r = run();
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        return std::pair{r, ms.count()};
    };

    nlohmann::json out;
    Verdict verdict = Verdict::Minimal;
    if (method == "both") {
        const auto [brute, brute_ms] = timed([&] { return is_minimal_bruteforce(build_code(f)); });
        const auto [walsh, walsh_ms] = timed([&] { return check_walsh_conditions(f); });
        out = minimality_json(cfg, brute, brute_ms + walsh_ms);
        out["method"] = "both";
        out["methods"] = {{"brute", minimality_json(cfg, brute, brute_ms)},
                          {"walsh", minimality_json(cfg, walsh, walsh_ms)}};
        out["agree"] = brute.verdict == walsh.verdict;
        verdict = brute.verdict;
        if (brute.verdict != walsh.verdict) {
            std::cout << out.dump(2) << "\n";
            std::cerr << "error: brute-force and spectral verdicts disagree\n";
            return kExitError;
        }
    } else {
        const auto [report, ms] = timed([&] {
            if (method == "walsh") return check_walsh_conditions(f);
            const TernaryLinearCode code = build_code(f);
            return method == "brute" ? is_minimal_bruteforce(code) : is_minimal_weight_identity(code);
        });
        out = minimality_json(cfg, report, ms);
        verdict = report.verdict;
    }
    emit(out.dump(2) + "\n", opt.output);
    return verdict == Verdict::Minimal ? kExitOk : kExitNotMinimal;
}

int cmd_export(const Options &opt) {
    const RunConfig cfg = to_config(opt);
    const TernaryLinearCode code = build_code(make_function(cfg));
    const std::string format = opt.format.empty() ? "gmatrix" : opt.format;
    if (format == "gmatrix") {
        emit(gmatrix_text(code), opt.output);
    } else if (format == "json") {
        nlohmann::json j = config_json(cfg);
        j["schema"] = kSchemaVersion;
        j["length"] = code.length();
        j["dimension"] = code.dimension();
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : code.generator()) rows.push_back(row.to_string());
        j["generator"] = std::move(rows);
        emit(j.dump(2) + "\n", opt.output);
    } else {
        throw ConfigError("unknown export format '" + format + "'");
    }
    return kExitOk;
}

int cmd_reproduce(const Options &opt) {
    const ReproductionReport rep = reproduce();
    emit(rep.to_json().dump(2) + "\n", opt.output);
    return rep.ok() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Ternary minimal codes from spreads"};
    app.require_subcommand(1);
    Options opt;

    auto *construct = app.add_subcommand("construct", "build the code and write its generator matrix");
    add_code_options(construct, opt);
    construct->add_option("--output", opt.output, "gmatrix path (metadata goes to <path>.json)");

    auto *weights = app.add_subcommand("weights", "weight distribution");
    add_code_options(weights, opt);
    weights->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    weights->add_option("--method", opt.method, "brute, walsh or closed")->check(CLI::IsMember({"brute", "walsh", "closed"}));
    weights->add_option("--output", opt.output, "output path (default stdout)");

    auto *walsh = app.add_subcommand("walsh", "Walsh spectrum as CSV");
    add_code_options(walsh, opt);
    walsh->add_option("--output", opt.output, "output path (default stdout)");

    auto *verify = app.add_subcommand("verify", "decide minimality");
    add_code_options(verify, opt);
    verify->add_option("--method", opt.method, "brute, walsh, both or identity")
        ->check(CLI::IsMember({"brute", "walsh", "both", "identity"}));
    verify->add_option("--output", opt.output, "output path (default stdout)");

    auto *exporter = app.add_subcommand("export", "write the generator matrix");
    add_code_options(exporter, opt);
    exporter->add_option("--format", opt.format, "gmatrix or json")->check(CLI::IsMember({"gmatrix", "json"}));
    exporter->add_option("--output", opt.output, "output path (default stdout)");

    auto *repro = app.add_subcommand("reproduce", "run every reproduction check and emit a JSON report");
    repro->add_option("--output", opt.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*construct) return cmd_construct(opt);
        if (*weights) return cmd_weights(opt);
        if (*walsh) return cmd_walsh(opt);
        if (*verify) return cmd_verify(opt);
        if (*exporter) return cmd_export(opt);
        if (*repro) return cmd_reproduce(opt);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const LinearFunctionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
