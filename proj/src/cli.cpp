#include "partid/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "partid/counting.hpp"
#include "partid/identities.hpp"
#include "partid/oracle.hpp"
#include "partid/report.hpp"
#include "partid/solutions.hpp"

namespace partid {
namespace {

enum class Format { plain, json, csv };

const std::map<std::string, Format> format_names{
    {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

struct RunConfig {
    std::string set_spec;
    std::string stat = "p";
    std::optional<unsigned> alpha;
    std::size_t max_n = 0;
    std::size_t order = 128;
    std::size_t n = 0;
    std::size_t base = 2;
    std::string identity;
    std::string mode = "both";
    std::optional<std::size_t> cap;
    bool allow_odd_alpha = false;
    Format format = Format::plain;
    std::string output;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void add_output_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    sub->add_option("--output", cfg.output, "Write output to this file instead of stdout");
}

unsigned require_alpha(const RunConfig& cfg) {
    if (!cfg.alpha) {
        throw UsageError("--alpha is required");
    }
    if (*cfg.alpha == 0) {
        throw UsageError("--alpha must be >= 1");
    }
    return *cfg.alpha;
}

Statistic parse_stat(const RunConfig& cfg) {
    const std::string& s = cfg.stat;
    if (s == "p" || s == "pbar") {
        if (cfg.alpha) {
            throw UsageError("--stat " + s + " takes no --alpha");
        }
        return s == "p" ? Statistic::unrestricted() : Statistic::signed_unrestricted();
    }
    if (s == "p_alpha") {
        return Statistic::bounded(require_alpha(cfg));
    }
    if (s == "pbar_alpha") {
        return Statistic::signed_bounded(require_alpha(cfg));
    }
    MultiplicityCap cap = cfg.alpha ? MultiplicityCap::at_most(require_alpha(cfg)) : MultiplicityCap::unbounded();
    return s == "even" ? Statistic::even_parts(cap) : Statistic::odd_parts(cap);
}

void write_values(std::ostream& os, Format format, const Json& json, const std::vector<BigInt>& values,
                  const std::string& header) {
    switch (format) {
    case Format::json:
        os << json.dump() << '\n';
        break;
    case Format::csv:
        os << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n) {
            os << n << ',' << values[n] << '\n';
        }
        break;
    case Format::plain:
        os << "# " << header << '\n';
        for (std::size_t n = 0; n < values.size(); ++n) {
            os << n << '\t' << values[n] << '\n';
        }
        break;
    }
}

int cmd_count(const RunConfig& cfg, std::ostream& os) {
    const Statistic stat = parse_stat(cfg);
    const PartSet set = parse_partset(cfg.set_spec);
    const CountTable table = count(stat, set, cfg.max_n);
    write_values(os, cfg.format, to_json(table), table.values,
                 stat.name() + " alpha=" + stat.cap.to_string() + " set=" + set.label());
    return exit_ok;
}

int cmd_solutions(const RunConfig& cfg, std::ostream& os) {
    const std::size_t cap = cfg.cap.value_or(60);
    if (cfg.n > cap) {
        throw UsageError("solutions: n=" + std::to_string(cfg.n) + " exceeds the enumeration cap " +
                         std::to_string(cap) + " (raise with --cap)");
    }
    const SolutionMatrix matrix = enumerate_solutions(cfg.n, cfg.base);
    if (cfg.format == Format::json) {
        os << to_json(matrix).dump() << '\n';
        return exit_ok;
    }
    for (const auto& row : matrix.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i];
        }
        os << '\n';
    }
    return exit_ok;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& os) {
    const unsigned alpha = require_alpha(cfg);
    const PartSet set = parse_partset(cfg.set_spec);
    const std::size_t cap = cfg.cap.value_or(60);
    const CountTable signed_counts = count(Statistic::signed_unrestricted(), set, cfg.max_n);
    const GammaTable gamma = gamma_table_series(alpha, signed_counts, cfg.max_n);
    const GammaTable by_rows = gamma_table(alpha, signed_counts, std::min(cfg.max_n, cap));
    for (std::size_t n = 0; n <= by_rows.max_n(); ++n) {
        if (by_rows.values[n] != gamma.values[n]) {
            throw InvariantError("gamma: solution-matrix and series values differ at n=" + std::to_string(n));
        }
    }
    write_values(os, cfg.format, to_json(gamma), gamma.values,
                 "gamma alpha=" + std::to_string(alpha) + " set=" + set.label());
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
    const IdentityId identity = parse_identity(cfg.identity);
    const unsigned alpha = cfg.alpha.value_or(1);
    if (alpha == 0) {
        throw UsageError("--alpha must be >= 1");
    }
    const PartSet set = parse_partset(cfg.set_spec);
    VerifyOptions options;
    options.mode = parse_eval_mode(cfg.mode);
    options.enumeration_cap = cfg.cap.value_or(options.enumeration_cap);
    options.allow_odd_alpha = cfg.allow_odd_alpha;

    const VerificationReport report = verify(identity, set, alpha, cfg.max_n, options);
    switch (cfg.format) {
    case Format::json:
        os << to_json(report).dump() << '\n';
        break;
    case Format::csv:
        write_csv(os, report);
        break;
    case Format::plain:
        write_plain(os, report);
        break;
    }
    if (!report.evaluators_agree) {
        throw InvariantError("verify: enumerative and convolution evaluators disagree");
    }
    if (report.exploration) {
        return exit_ok;
    }
    return report.all_equal ? exit_ok : exit_inequality;
}

int cmd_series_check(const RunConfig& cfg, std::ostream& os) {
    const unsigned alpha = require_alpha(cfg);
    const PartSet set = parse_partset(cfg.set_spec);
    const auto checks = series_checks(set, alpha, cfg.order);
    bool all = true;
    if (cfg.format == Format::json) {
        Json j;
        j["set"] = set.label();
        j["alpha"] = alpha;
        j["order"] = cfg.order;
        Json arr = Json::array();
        for (const auto& c : checks) {
            Json item;
            item["check"] = c.name;
            item["holds"] = c.holds;
            if (c.first_mismatch) {
                item["first_mismatch"] = *c.first_mismatch;
            }
            arr.push_back(std::move(item));
            all = all && c.holds;
        }
        j["checks"] = std::move(arr);
        j["all_hold"] = all;
        os << j.dump() << '\n';
    } else {
        os << "series-check set " << set.label() << "  alpha " << alpha << "  order " << cfg.order << '\n';
        for (const auto& c : checks) {
            os << (c.holds ? "holds  " : "FAILS  ") << c.name;
            if (c.first_mismatch) {
                os << "  (first mismatch at q^" << *c.first_mismatch << ')';
            }
            os << '\n';
            all = all && c.holds;
        }
    }
    return all ? exit_ok : exit_inequality;
}

int cmd_oracle_check(const RunConfig& cfg, std::ostream& os) {
    const std::size_t cap = cfg.cap.value_or(oracle::default_cap);
    const auto summary = oracle::agreement_suite(cap);
    if (cfg.format == Format::json) {
        Json j;
        j["cap"] = cap;
        j["comparisons"] = summary.comparisons;
        j["mismatches"] = summary.mismatches;
        j["ok"] = summary.ok();
        os << j.dump() << '\n';
    } else {
        os << "oracle-check cap " << cap << ": " << summary.comparisons << " comparisons, "
           << summary.mismatches.size() << " mismatches\n";
        for (const auto& m : summary.mismatches) {
            os << "  " << m << '\n';
        }
    }
    return summary.ok() ? exit_ok : exit_inequality;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition counts over arbitrary part sets and verification of part-set-independent identities",
                 "partid"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int(const RunConfig&, std::ostream&)> handler;

    auto* count_cmd = app.add_subcommand("count", "Tabulate a partition statistic for n = 0..max-n");
    count_cmd->add_option("--set", cfg.set_spec, "Part set spec")->required();
    count_cmd->add_option("--stat", cfg.stat, "Statistic")
        ->required()
        ->check(CLI::IsMember({"p", "p_alpha", "pbar", "pbar_alpha", "even", "odd"}));
    count_cmd->add_option("--alpha", cfg.alpha, "Multiplicity cap");
    count_cmd->add_option("--max-n", cfg.max_n, "Largest n")->required();
    add_output_options(count_cmd, cfg);
    count_cmd->callback([&] { handler = cmd_count; });

    auto* sol_cmd = app.add_subcommand("solutions", "Solution matrix of n = sum base^i N_i");
    sol_cmd->add_option("--n", cfg.n, "Target n")->required();
    sol_cmd->add_option("--base", cfg.base, "Base (>= 2)")->check(CLI::Range(std::size_t{2}, SIZE_MAX));
    sol_cmd->add_option("--cap", cfg.cap, "Largest n to enumerate (default 60)");
    add_output_options(sol_cmd, cfg);
    sol_cmd->callback([&] { handler = cmd_solutions; });

    auto* gamma_cmd = app.add_subcommand("gamma", "Tabulate the inverse-identity kernel Gamma_alpha");
    gamma_cmd->add_option("--set", cfg.set_spec, "Part set spec")->required();
    gamma_cmd->add_option("--alpha", cfg.alpha, "Multiplicity cap")->required();
    gamma_cmd->add_option("--max-n", cfg.max_n, "Largest n")->required();
    gamma_cmd->add_option("--cap", cfg.cap, "Largest n cross-checked via solution matrices (default 60)");
    add_output_options(gamma_cmd, cfg);
    gamma_cmd->callback([&] { handler = cmd_gamma; });

    auto* verify_cmd = app.add_subcommand("verify", "Verify an identity for n = 0..max-n");
    verify_cmd->add_option("--identity", cfg.identity, "Identity")
        ->required()
        ->check(CLI::IsMember({"forward", "forward-binary", "inverse", "signed-binary", "signed-general"}));
    verify_cmd->add_option("--set", cfg.set_spec, "Part set spec")->required();
    verify_cmd->add_option("--alpha", cfg.alpha, "Multiplicity cap (default 1)");
    verify_cmd->add_option("--max-n", cfg.max_n, "Largest n")->required();
    verify_cmd->add_option("--mode", cfg.mode, "Evaluator")
        ->check(CLI::IsMember({"both", "enumerative", "convolution"}));
    verify_cmd->add_option("--cap", cfg.cap, "Largest n evaluated via solution matrices (default 60)");
    verify_cmd->add_flag("--allow-odd-alpha", cfg.allow_odd_alpha,
                         "Explore signed-general with odd alpha (inequalities expected)");
    add_output_options(verify_cmd, cfg);
    verify_cmd->callback([&] { handler = cmd_verify; });

    auto* series_cmd = app.add_subcommand("series-check", "Check the generating-function factorizations");
    series_cmd->add_option("--set", cfg.set_spec, "Part set spec")->required();
    series_cmd->add_option("--alpha", cfg.alpha, "Multiplicity cap")->required();
    series_cmd->add_option("--order", cfg.order, "Truncation order (default 128)");
    add_output_options(series_cmd, cfg);
    series_cmd->callback([&] { handler = cmd_series_check; });

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Brute force vs DP vs series agreement suite");
    oracle_cmd->add_option("--cap", cfg.cap, "Largest n (default 40)");
    add_output_options(oracle_cmd, cfg);
    oracle_cmd->callback([&] { handler = cmd_oracle_check; });

    std::vector<const char*> argv{"partid"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "partid: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        std::ofstream file;
        if (!cfg.output.empty()) {
            file.open(cfg.output);
            if (!file) {
                throw UsageError("cannot open output file '" + cfg.output + "'");
            }
        }
        std::ostream& os = cfg.output.empty() ? out : file;
        return handler(cfg, os);
    } catch (const InvariantError& e) {
        err << "partid: internal invariant violated: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::invalid_argument& e) {
        err << "partid: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "partid: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "partid: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

}  // namespace partid
