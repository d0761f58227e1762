// commands.hpp — the operations behind the CLI subcommands, separated from
// argument parsing so tests can drive them directly.
//
// Exit codes: 0 success (for solve: converged), 2 solve budget exhausted,
// 1 invalid input or processing error.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kf/diagnostics.hpp"
#include "kf/systems.hpp"

namespace kf {

struct RunConfig {
    enum class Command { solve, analyze, gseq, bound, generate };

    Command command = Command::solve;

    std::string matrix_path;
    std::string rhs_path;
    std::string trace_path;    // optional CSV trace (solve)
    std::string out_prefix;    // gseq
    std::string out_path;      // generate

    std::string mode = "cyclic";  // solve: "cyclic" or "pass"
    std::size_t sweeps = 500;     // sweep/pass budget
    double tol = 1e-10;           // residual tolerance, relative to ||b||

    bool normalize = false;       // analyze/gseq/bound: scale non-unit rows
    DiagnosticTols tols;

    // generate
    std::string kind = "onb";
    std::size_t dim = 0;
    std::size_t count = 0;
    std::uint64_t seed = 0;
};

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_gseq(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace kf
