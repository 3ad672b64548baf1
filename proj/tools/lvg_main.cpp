#include <iostream>

#include <CLI11.hpp>

#include <lvg/cli/commands.hpp>

int main(int argc, char** argv) {
    using namespace lvg::cli;
    CLI::App app{"Variogram of nearest-neighbour intrinsic autoregressions on Z^2"};
    app.require_subcommand(1);
    Options o;

    auto add_coeffs = [&](CLI::App* c) {
        c->add_option("--a", o.a, "coefficient a")->required();
        c->add_option("--b", o.b, "coefficient b")->required();
    };
    const std::vector<std::string> methods{"auto", "exact", "edge", "symmetric", "diagonal", "quad", "bessel"};

    auto* eval = app.add_subcommand("eval", "evaluate one lag");
    add_coeffs(eval);
    eval->add_option("--s", o.s, "lag s")->required();
    eval->add_option("--t", o.t, "lag t")->required();
    eval->add_option("--method", o.method)->check(CLI::IsMember(methods));
    eval->add_option("--tol", o.tol, "series tolerance")->check(CLI::PositiveNumber);
    eval->add_option("--max-terms", o.max_terms, "cap on series terms per evaluation")->check(CLI::PositiveNumber);
    eval->add_flag("--json", o.json, "JSON instead of CSV");

    auto* table = app.add_subcommand("table", "evaluate 0..smax x 0..tmax");
    add_coeffs(table);
    table->add_option("--smax", o.smax)->required();
    table->add_option("--tmax", o.tmax)->required();
    table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--method", o.method)->check(CLI::IsMember(methods));
    table->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    table->add_option("--max-terms", o.max_terms)->check(CLI::PositiveNumber);
    table->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "cross-check every applicable method and both oracles");
    add_coeffs(verify);
    verify->add_option("--s", o.s)->required();
    verify->add_option("--t", o.t)->required();
    verify->add_option("--tol", o.verify_tol, "allowed discrepancy beyond reported errors")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", o.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : int(usage_or_domain);
    }

    if (*eval) return cmd_eval(o, std::cout, std::cerr);
    if (*table) return cmd_table(o, std::cout, std::cerr);
    return cmd_verify(o, std::cout, std::cerr);
}
