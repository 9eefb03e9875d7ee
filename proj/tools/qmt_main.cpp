// qmt: toric data, min-value solver, cone counts and Chow rings of the
// quasimap moduli spaces of P^1 x P^1.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "qmt/commands.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"qmt - quasimap moduli toric toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    qmt::RunConfig cfg;
    std::optional<std::uint64_t> budget;
    std::optional<std::string> out_path;
    std::string format = "json";

    app.add_option("--d1", cfg.d1, "first degree (d1 >= d2 > 0)")->required();
    app.add_option("--d2", cfg.d2, "second degree")->required();
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--budget", budget, "node budget for enumerations (overrides QMT_BUDGET)");
    app.add_option("--kmax", cfg.kmax, "largest cone size to count");
    app.add_option("--format", format, "json, pretty, or csv (emit only)")
        ->check(CLI::IsMember({"json", "pretty", "csv"}));
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    app.add_subcommand("build", "weight matrix, vertex matrix and primitive collections");
    auto* verify = app.add_subcommand("verify", "exactness, column identities, min-value and simpliciality checks");
    verify->add_option("--trials", cfg.trials, "random instances per check");
    verify->add_flag("--tamper-weight", cfg.tamper_weight, "flip one entry of W before checking (debug)");
    auto* solve = app.add_subcommand("solve-amvc", "solve the min-value system for one y");
    solve->add_option("--y", cfg.y, "JSON vector of length r (integers or \"p/q\" strings); random if absent");
    solve->add_flag("--oracle", cfg.oracle, "compare with exhaustive activity-pattern enumeration");
    app.add_subcommand("count", "count cones by size");
    app.add_subcommand("poincare", "Betti numbers and Poincare polynomial");
    auto* chow = app.add_subcommand("chow", "Chow ring presentation");
    chow->add_option("--graded-kmax", cfg.graded_kmax, "compute graded dimensions up to this degree");
    chow->add_option("--emit", cfg.dialect, "script dialect: generic or plain");
    chow->add_option("--script", cfg.script_path, "write the script to FILE");
    auto* report = app.add_subcommand("report", "cone counts, Poincare polynomial and Chow cross-check");
    report->add_option("--graded-kmax", cfg.graded_kmax, "graded dimensions to cross-check (default 2)");
    auto* emit = app.add_subcommand("emit", "print W or V");
    emit->add_option("--what", cfg.what, "weight or vertex")->check(CLI::IsMember({"weight", "vertex"}));

    CLI11_PARSE(app, argc, argv);

    static const std::map<std::string, qmt::OutputFormat> formats{
        {"json", qmt::OutputFormat::json}, {"pretty", qmt::OutputFormat::pretty}, {"csv", qmt::OutputFormat::csv}};
    cfg.format = formats.at(format);

    qmt::CommandResult res;
    try {
        cfg.budget = qmt::resolve_budget(budget, std::getenv("QMT_BUDGET"));
        res = qmt::run_command(app.get_subcommands().front()->get_name(), cfg);
    } catch (const qmt::Error& e) {
        qmt::json doc{{"schema_version", qmt::schema_version},
                      {"error", {{"code", qmt::to_string(e.code())}, {"message", e.what()}}}};
        res = {doc, doc.dump(2) + "\n", 2};
    }

    if (out_path) {
        std::ofstream out(*out_path);
        if (!(out << res.text)) {
            std::cerr << "qmt: cannot write " << *out_path << "\n";
            return 2;
        }
    } else {
        std::cout << res.text;
    }
    return res.exit_code;
}
