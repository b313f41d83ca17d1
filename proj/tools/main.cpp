#include <CLI11.hpp>

#include "gaussmap/runner.hpp"

using gaussmap::Command;
using gaussmap::RunConfig;

namespace {

void add_surface_opts(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--surface", cfg.surface,
                    "built-in surface: plane, cylinder, sphere, torus, "
                    "catenoid, helicoid, quadric1, quadric2");
    cmd->add_option("--config", cfg.config_path,
                    "surface config file (key = value lines)");
}

void add_common_opts(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--count", cfg.count, "sample point count");
    cmd->add_option("--seed", cfg.seed, "deterministic sampling seed");
    cmd->add_option("--out", cfg.out_path,
                    "report path ('-' for stdout; default: "
                    "$GAUSSMAP_OUT/<command>_<label>.<ext>)");
}

void add_exact_opts(CLI::App* cmd, RunConfig& cfg, bool need_kind) {
    auto* kind = cmd->add_option("--kind", cfg.kind, "quadric kind (1 or 2)");
    if (need_kind) kind->required();
    cmd->add_option("--a", cfg.a_text, "parameter a, exact 'p/q'");
    cmd->add_option("--b", cfg.b_text, "parameter b, exact 'p/q'");
    cmd->add_option("--c", cfg.c_text, "parameter c, exact 'p/q' (kind 1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gaussmap: checks when a surface's Gauss map is an eigenmap of the "
        "first-fundamental-form Laplacian, numerically and in exact "
        "arithmetic"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* verify = app.add_subcommand(
        "verify", "identity residuals |Delta x + 2Hn| and "
                  "|Delta n - grad 2H - (4H^2-2K)n| over seeded samples");
    add_surface_opts(verify, cfg);
    add_common_opts(verify, cfg);
    verify->add_option("--tol-identity", cfg.tol.identity,
                       "residual/scale threshold");

    auto* fit = app.add_subcommand(
        "fit", "least-squares constant matrix with L n ~ Delta n");
    add_surface_opts(fit, cfg);
    add_common_opts(fit, cfg);
    fit->add_option("--fit-satisfy", cfg.tol.fit_satisfy,
                    "residual bound for verdict 'satisfies'");
    fit->add_option("--fit-fail", cfg.tol.fit_fail,
                    "residual bound beyond which the verdict is 'fails'");

    auto* classify = app.add_subcommand(
        "classify", "sweep a quadric family grid and fit every cell");
    classify->add_option("--family", cfg.family, "quadric1 | quadric2")
        ->required();
    classify->add_option("--grid", cfg.grid,
                         "axes 'a=lo:hi:n,b=lo:hi:n[,c=lo:hi:n]'")
        ->required();
    add_common_opts(classify, cfg);
    classify->add_option("--format", cfg.format, "json | csv");
    classify->add_option("--fit-satisfy", cfg.tol.fit_satisfy);
    classify->add_option("--fit-fail", cfg.tol.fit_fail);

    auto* certify = app.add_subcommand(
        "certify",
        "exact feasibility of Delta n = L n by big-rational elimination");
    add_exact_opts(certify, cfg, true);
    certify->add_option("--out", cfg.out_path, "report path");

    auto* cross = app.add_subcommand(
        "cross-check",
        "numeric-vs-symbolic and generic-vs-closed-form operator agreement");
    add_exact_opts(cross, cfg, true);
    add_common_opts(cross, cfg);
    cross->add_option("--tol-agree", cfg.tol.agree, "agreement threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (verify->parsed()) cfg.command = Command::Verify;
    if (fit->parsed()) cfg.command = Command::Fit;
    if (classify->parsed()) cfg.command = Command::Classify;
    if (certify->parsed()) cfg.command = Command::Certify;
    if (cross->parsed()) cfg.command = Command::CrossCheck;

    return gaussmap::run(cfg);
}
