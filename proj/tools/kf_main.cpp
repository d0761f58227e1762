// kf — Kaczmarz solvers and frame diagnostics for row systems.
#include <iostream>

#include <CLI11.hpp>

#include "kf/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Kaczmarz solvers and frame diagnostics"};
    app.require_subcommand(1);

    kf::RunConfig cfg;

    auto add_tols = [&cfg](CLI::App* cmd) {
        cmd->add_option("--frame-tol", cfg.tols.frame_tol, "positivity threshold for frame bounds");
        cmd->add_option("--tight-tol", cfg.tols.tight_tol, "tightness tolerance on |A-1|, |B-1|");
        cmd->add_option("--onb-tol", cfg.tols.onb_tol, "Gram-identity tolerance");
        cmd->add_option("--effective-tol", cfg.tols.effective_tol, "effectiveness defect tolerance");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve A x = b by row projections");
    solve->add_option("--matrix", cfg.matrix_path, "MatrixMarket file with A")->required();
    solve->add_option("--rhs", cfg.rhs_path, "right-hand side, one value per line")->required();
    solve->add_option("--mode", cfg.mode, "cyclic or pass")
        ->check(CLI::IsMember({"cyclic", "pass"}));
    solve->add_option("--sweeps", cfg.sweeps, "sweep (or pass) budget")
        ->check(CLI::PositiveNumber);
    solve->add_option("--tol", cfg.tol, "residual tolerance relative to ||b||");
    solve->add_option("--trace", cfg.trace_path, "write per-iteration CSV trace here");

    CLI::App* analyze = app.add_subcommand("analyze", "frame and effectiveness diagnostics");
    analyze->add_option("--matrix", cfg.matrix_path, "MatrixMarket file whose rows are the system")
        ->required();
    analyze->add_flag("--normalize", cfg.normalize, "accept non-unit rows by normalizing them");
    add_tols(analyze);

    CLI::App* gseq = app.add_subcommand("gseq", "write the auxiliary sequence and M, C factors");
    gseq->add_option("--matrix", cfg.matrix_path, "MatrixMarket file whose rows are the system")
        ->required();
    gseq->add_option("--out-prefix", cfg.out_prefix, "prefix for <prefix>_{g,M,C}.mtx")->required();
    gseq->add_flag("--normalize", cfg.normalize, "accept non-unit rows by normalizing them");

    CLI::App* bound = app.add_subcommand("bound", "single-pass residual bound for the row system");
    bound->add_option("--matrix", cfg.matrix_path, "MatrixMarket file whose rows are the system")
        ->required();
    bound->add_flag("--normalize", cfg.normalize, "accept non-unit rows by normalizing them");
    add_tols(bound);

    CLI::App* generate = app.add_subcommand("generate", "write a reference system");
    generate
        ->add_option("--kind", cfg.kind,
                     "onb, perturbed_onb, repeated_vector, remark, parseval_rows, random_unit")
        ->required()
        ->check(CLI::IsMember({"onb", "perturbed_onb", "repeated_vector", "remark",
                               "parseval_rows", "random_unit"}));
    generate->add_option("--dim", cfg.dim, "ambient dimension")->required()
        ->check(CLI::PositiveNumber);
    generate->add_option("--count", cfg.count, "number of vectors")->required()
        ->check(CLI::PositiveNumber);
    generate->add_option("--seed", cfg.seed, "RNG seed");
    generate->add_option("--out", cfg.out_path, "output MatrixMarket file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error
        return code == 0 ? 0 : 1;
    }

    if (solve->parsed()) cfg.command = kf::RunConfig::Command::solve;
    if (analyze->parsed()) cfg.command = kf::RunConfig::Command::analyze;
    if (gseq->parsed()) cfg.command = kf::RunConfig::Command::gseq;
    if (bound->parsed()) cfg.command = kf::RunConfig::Command::bound;
    if (generate->parsed()) cfg.command = kf::RunConfig::Command::generate;

    return kf::run(cfg, std::cout, std::cerr);
}
