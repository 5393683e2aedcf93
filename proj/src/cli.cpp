#include "sympbranch/cli.hpp"

#include "sympbranch/charoracle.hpp"
#include "sympbranch/gzbasis.hpp"
#include "sympbranch/rearrange.hpp"
#include "sympbranch/sl2.hpp"
#include "sympbranch/verify.hpp"
#include "sympbranch/weights.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace sympbranch {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

unsigned thread_budget()
{
    if (const char* env = std::getenv("SYMPBRANCH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const Report& report, bool as_json, const std::string& text, std::ostream& out)
{
    if (as_json) {
        json j{{"command", report.command},
               {"inputs", report.inputs},
               {"results", report.results},
               {"status", report.ok ? "OK" : "FAIL"},
               {"elapsed_ms", report.elapsed_ms}};
        out << j.dump(2) << "\n";
    } else {
        out << text;
        out << "status: " << (report.ok ? "OK" : "FAIL") << " (" << report.elapsed_ms << " ms)\n";
    }
}

int cmd_mult(const std::string& shape_text, bool as_json, std::ostream& out)
{
    const auto start = Clock::now();
    const auto p = SkewShape::parse(shape_text);

    Report report;
    report.command = "mult";
    report.inputs = {{"shape", p.to_string()}};

    std::string text = "shape: " + p.to_string() + "\n";
    const long long dim = dim_mult_space(p);
    report.results["dim"] = dim;
    text += "dim:   " + std::to_string(dim) + "\n";
    if (in_branching_semigroup(p)) {
        const auto r = r_values(p);
        json types = json::array();
        std::string types_text;
        for (const auto& sigma : order_types_of(p)) {
            types.push_back(sigma.to_string());
            if (!types_text.empty()) types_text += " ";
            types_text += sigma.to_string();
        }
        report.results["r"] = r;
        report.results["order_types"] = types;
        std::string r_text;
        for (std::size_t i = 0; i < r.size(); ++i) r_text += (i ? "," : "") + std::to_string(r[i]);
        text += "r:     " + r_text + "\n";
        text += "order types: " + types_text + "\n";
    } else {
        report.results["in_semigroup"] = false;
        text += "not in the branching semigroup\n";
    }
    report.elapsed_ms = ms_since(start);
    emit(report, as_json, text, out);
    return report.ok ? 0 : 1;
}

int cmd_basis(const std::string& shape_text, bool as_json, std::ostream& out)
{
    const auto start = Clock::now();
    const auto p = SkewShape::parse(shape_text);
    if (!in_branching_semigroup(p)) {
        throw std::invalid_argument("shape " + p.to_string() + " is not in the branching semigroup");
    }

    Report report;
    report.command = "basis";
    report.inputs = {{"shape", p.to_string()}};

    json records = json::array();
    std::string text = "shape: " + p.to_string() + "\n";
    for (const auto& el : basis_of(p)) {
        records.push_back({{"lambda", el.shape.lambda().entries()},
                           {"mu", el.shape.mu().entries()},
                           {"gamma", el.gamma.entries()},
                           {"weight", el.weight}});
        std::string wtext;
        for (std::size_t i = 0; i < el.weight.size(); ++i) {
            wtext += (i ? "," : "") + std::to_string(el.weight[i]);
        }
        text += "gamma: " + el.gamma.to_string() + "  weight: " + wtext + "\n";
    }
    report.results = records;
    text += std::to_string(records.size()) + " basis element(s)\n";
    report.elapsed_ms = ms_since(start);
    emit(report, as_json, text, out);
    return report.ok ? 0 : 1;
}

int cmd_branch(const std::string& lambda_text, bool check, bool as_json, std::ostream& out)
{
    const auto start = Clock::now();
    const auto lambda = DominantWeight::parse(lambda_text);
    if (lambda.size() == 0) {
        throw std::invalid_argument("branch needs a weight of positive length");
    }

    Report report;
    report.command = "branch";
    report.inputs = {{"lambda", lambda.to_string()}, {"check", check}};

    const auto table = branch_decompose(lambda);
    json rows = json::array();
    std::string text = "lambda: " + lambda.to_string() + "\n";
    long long total_mult = 0;
    for (const auto& [mu, mult] : table) {
        rows.push_back({{"mu", mu.entries()}, {"multiplicity", mult}});
        text += "  mu = " + (mu.size() ? mu.to_string() : "()") + "  multiplicity " +
                std::to_string(mult) + "\n";
        total_mult += mult;
    }
    report.results["table"] = rows;
    report.results["components"] = table.size();
    text += std::to_string(table.size()) + " component(s), total multiplicity " +
            std::to_string(total_mult) + "\n";

    if (check) {
        const std::size_t n = lambda.size();
        Int restricted = 0;
        for (const auto& [mu, mult] : table) {
            restricted += Int(mult) * dim_from_char(sp_char(mu, n - 1));
        }
        const Int full = dim_from_char(sp_char(lambda, n));
        report.ok = restricted == full;
        report.results["dim_check"] = {{"restricted", restricted.str()}, {"full", full.str()}};
        text += "dimension check: " + restricted.str() + " vs " + full.str() +
                (report.ok ? " (match)\n" : " (MISMATCH)\n");
    }
    report.elapsed_ms = ms_since(start);
    emit(report, as_json, text, out);
    return report.ok ? 0 : 1;
}

int cmd_verify(int max_rank, int max_entry, const std::string& suite, bool as_json, std::ostream& out)
{
    const auto start = Clock::now();

    Report report;
    report.command = "verify";
    report.inputs = {{"max_rank", max_rank}, {"max_entry", max_entry}, {"suite", suite}};

    SweepOptions opts;
    opts.max_rank = max_rank;
    opts.max_entry = max_entry;
    opts.threads = thread_budget();

    std::string text;
    SweepOutcome total;
    auto run_suite = [&](const std::string& name, SweepOutcome (*sweep)(const SweepOptions&)) {
        const auto t0 = Clock::now();
        const auto outcome = sweep(opts);
        total.merge(outcome);
        text += name + ": " + (outcome.ok ? "ok" : "FAIL") + " (" + std::to_string(outcome.checks) +
                " checks, " + std::to_string(ms_since(t0)) + " ms)\n";
        if (!outcome.ok) text += "  counterexample: " + outcome.counterexample + "\n";
        json j{{"ok", outcome.ok}, {"checks", outcome.checks}};
        if (!outcome.ok) j["counterexample"] = outcome.counterexample;
        report.results[name] = j;
    };

    if (suite == "semigroup" || suite == "all") run_suite("semigroup", sweep_semigroup);
    if (suite == "decomp" || suite == "all") run_suite("decomp", sweep_decomp);
    if (suite == "characters" || suite == "all") run_suite("characters", sweep_characters);

    report.ok = total.ok;
    report.elapsed_ms = ms_since(start);
    emit(report, as_json, text, out);
    return report.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact combinatorics of symplectic branching multiplicity spaces"};
    app.name("sympbranch");
    app.require_subcommand(1);

    std::string shape_text, lambda_text;
    bool as_json = false, check = false;
    int max_rank = 3, max_entry = 3;
    std::string suite = "all";

    auto* mult = app.add_subcommand("mult", "Multiplicity and SL2^n structure of a shape LAMBDA/MU");
    mult->add_option("shape", shape_text, "skew shape, e.g. 2,1,0/2,0")->required();
    mult->add_flag("--json", as_json, "emit a JSON report");

    auto* basis = app.add_subcommand("basis", "Canonical one-dimensional decomposition of a shape");
    basis->add_option("shape", shape_text, "skew shape, e.g. 2,1,0/2,0")->required();
    basis->add_flag("--json", as_json, "emit a JSON report");

    auto* branch = app.add_subcommand("branch", "Branching table of a dominant weight");
    branch->add_option("lambda", lambda_text, "dominant weight, e.g. 2,1,0")->required();
    branch->add_flag("--check", check, "cross-check total dimension against Weyl characters");
    branch->add_flag("--json", as_json, "emit a JSON report");

    auto* verify = app.add_subcommand("verify", "Exhaustive invariant sweeps");
    verify->add_option("--max-rank", max_rank, "largest rank n to sweep")->check(CLI::Range(1, 16));
    verify->add_option("--max-entry", max_entry, "largest weight entry to sweep")->check(CLI::Range(0, 64));
    verify->add_option("--suite", suite, "semigroup, decomp, characters, or all")
        ->check(CLI::IsMember({"semigroup", "decomp", "characters", "all"}));
    verify->add_flag("--json", as_json, "emit a JSON report");

    // CLI11 wants argv in reverse order when parsing from a vector
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (mult->parsed()) return cmd_mult(shape_text, as_json, out);
        if (basis->parsed()) return cmd_basis(shape_text, as_json, out);
        if (branch->parsed()) return cmd_branch(lambda_text, check, as_json, out);
        return cmd_verify(max_rank, max_entry, suite, as_json, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace sympbranch
