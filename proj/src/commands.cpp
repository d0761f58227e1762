#include "kf/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "kf/errors.hpp"
#include "kf/json_writer.hpp"
#include "kf/kaczmarz.hpp"
#include "kf/log.hpp"
#include "kf/matrix_market.hpp"

namespace kf {

namespace {

// Rows of the file are the functionals a_n; the corresponding unit system is
// e_n = conj(a_n) / ||a_n||.  Without `normalize`, rows must already be unit.
struct LoadedSystem {
    UnitVectorSystem system;
    std::vector<double> scales;
    bool was_normalized = false;
};

LoadedSystem load_system(const std::string& path, bool normalize) {
    Matrix a = parse_matrix_market_file(path);
    LinearSystem ls(a, Vector(a.rows));  // b unused; reuses row validation
    NormalizedRows nr = normalize_rows(ls);
    bool any_scaled = false;
    for (double s : nr.scales)
        if (std::abs(s - 1.0) > 1e-12) any_scaled = true;
    if (any_scaled && !normalize)
        throw UnitNormError("matrix rows are not unit norm (rerun with --normalize)");
    return LoadedSystem{std::move(nr.system), std::move(nr.scales), any_scaled};
}

void write_trace(const std::string& path, const Trajectory& t) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write trace '" + path + "'");
    out << "iter,residual,error\n";
    for (std::size_t i = 0; i < t.residual_norms.size(); ++i) {
        out << i << "," << format_double(t.residual_norms[i]) << ",";
        if (i < t.error_norms.size()) out << format_double(t.error_norms[i]);
        out << "\n";
    }
}

void emit_solution(JsonWriter& w, const Vector& x) {
    w.begin_array();
    for (const Complex& v : x) {
        w.begin_array();
        w.value(v.real());
        w.value(v.imag());
        w.end_array();
    }
    w.end_array();
}

void emit_frame_report(JsonWriter& w, const FrameReport& r) {
    w.begin_object();
    w.key("lower").value(r.lower);
    w.key("upper").value(r.upper);
    w.key("gram_min_eig").value(r.gram_min_eig);
    w.key("is_frame").value(r.is_frame);
    w.key("is_tight_one").value(r.is_tight_one);
    w.key("is_riesz").value(r.is_riesz);
    w.key("is_onb").value(r.is_onb);
    w.end_object();
}

void emit_tols(JsonWriter& w, const DiagnosticTols& t) {
    w.begin_object();
    w.key("frame_tol").value(t.frame_tol);
    w.key("tight_tol").value(t.tight_tol);
    w.key("onb_tol").value(t.onb_tol);
    w.key("effective_tol").value(t.effective_tol);
    w.end_object();
}

int fail(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return 1;
}

SystemKind parse_kind(const std::string& s) {
    if (s == "onb") return SystemKind::onb;
    if (s == "perturbed_onb") return SystemKind::perturbed_onb;
    if (s == "repeated_vector") return SystemKind::repeated_vector;
    if (s == "remark") return SystemKind::remark;
    if (s == "parseval_rows") return SystemKind::parseval_rows;
    if (s == "random_unit") return SystemKind::random_unit;
    throw Error("unknown system kind '" + s + "'");
}

}  // namespace

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.mode != "cyclic" && cfg.mode != "pass")
            throw Error("unknown mode '" + cfg.mode + "' (expected cyclic or pass)");
        Matrix a = parse_matrix_market_file(cfg.matrix_path);
        Vector b = parse_vector_file(cfg.rhs_path);
        LinearSystem sys(std::move(a), std::move(b));
        log_info("solve: " + std::to_string(sys.rows()) + "x" + std::to_string(sys.cols()) +
                 " system, mode " + cfg.mode);

        Trajectory t;
        if (cfg.mode == "cyclic") {
            Vector x0(sys.cols());
            t = cyclic_solve(sys, x0, cfg.sweeps, cfg.tol);
        } else {
            t = data_driven_pass(sys, cfg.sweeps, cfg.tol);
        }
        if (!cfg.trace_path.empty()) write_trace(cfg.trace_path, t);
        log_debug("solve: " + std::to_string(t.sweeps) + " sweeps, final residual " +
                  format_double(t.residual_norms.back()));

        double b_norm = norm(sys.b);
        double resid = t.residual_norms.back();
        JsonWriter w;
        w.begin_object();
        w.key("command").value("solve");
        w.key("mode").value(cfg.mode);
        w.key("rows").value(sys.rows());
        w.key("cols").value(sys.cols());
        w.key("budget").value(cfg.sweeps);
        w.key("sweeps_executed").value(t.sweeps);
        w.key("tol").value(cfg.tol);
        w.key("converged").value(t.converged);
        w.key("residual").value(resid);
        w.key("relative_residual").value(b_norm > 0.0 ? resid / b_norm : resid);
        w.key("solution");
        emit_solution(w, t.iterates.back());
        w.end_object();
        out << w.str() << "\n";
        return t.converged ? 0 : 2;
    } catch (const Error& e) {
        return fail(err, e.what());
    }
}

int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        LoadedSystem loaded = load_system(cfg.matrix_path, cfg.normalize);
        const UnitVectorSystem& sys = loaded.system;
        log_info("analyze: " + std::to_string(sys.count()) + " vectors in dimension " +
                 std::to_string(sys.dim));

        FrameReport system_frame = frame_bounds(sys.vectors, cfg.tols);
        AuxiliarySequence g = auxiliary_sequence(sys);
        FrameReport aux_frame = frame_bounds(g.vectors, cfg.tols);
        log_debug("analyze: system bounds [" + format_double(system_frame.lower) + ", " +
                  format_double(system_frame.upper) + "]");

        std::optional<EffectivenessReport> eff;
        std::string eff_reason;
        try {
            eff = effectiveness_report(sys, cfg.tols);
        } catch (const NotSpanningError& e) {
            eff_reason = e.what();
        }

        std::optional<ConvergenceBound> cb;
        std::string cb_reason;
        try {
            cb = convergence_bound(sys, cfg.tols);
        } catch (const NotFrameError& e) {
            cb_reason = e.what();
        }

        std::optional<Solvability> solv;
        std::string solv_reason;
        if (sys.count() == sys.dim) {
            Matrix a(sys.count(), sys.dim);
            for (std::size_t i = 0; i < sys.count(); ++i)
                for (std::size_t j = 0; j < sys.dim; ++j) a(i, j) = std::conj(sys[i][j]);
            solv = kaczmarz_solvability(LinearSystem(std::move(a), Vector(sys.count())), cfg.tols);
        } else {
            solv_reason = "matrix is not square";
        }

        std::optional<double> duality;
        std::string duality_reason;
        try {
            duality = duality_defect(sys);
        } catch (const NotSpanningError& e) {
            duality_reason = e.what();
        }

        JsonWriter w;
        w.begin_object();
        w.key("command").value("analyze");
        w.key("rows").value(sys.count());
        w.key("cols").value(sys.dim);
        w.key("normalized").value(loaded.was_normalized);
        w.key("scales");
        if (loaded.was_normalized) {
            w.begin_array();
            for (double s : loaded.scales) w.value(s);
            w.end_array();
        } else {
            w.null();
        }
        w.key("tolerances");
        emit_tols(w, cfg.tols);
        w.key("system_frame");
        emit_frame_report(w, system_frame);
        w.key("auxiliary_frame");
        emit_frame_report(w, aux_frame);
        w.key("effectiveness");
        if (eff) {
            w.begin_object();
            w.key("effective").value(eff->effective);
            w.key("methods_agree").value(eff->methods_agree);
            w.key("tight_defect").value(eff->tight_defect);
            w.key("isometry_defect").value(eff->isometry_defect);
            w.key("almost_effective_bound").value_or_null(eff->almost_effective);
            w.key("c1_lower").value_or_null(eff->c1_lower);
            w.end_object();
        } else {
            w.null();
        }
        w.key("effectiveness_reason");
        eff ? w.null() : w.value(eff_reason);
        w.key("convergence_bound");
        if (cb) {
            w.begin_object();
            w.key("a1").value(cb->a1);
            w.key("a2").value(cb->a2);
            w.key("c1").value_or_null(cb->c1);
            w.key("bound").value_or_null(cb->bound);
            w.key("reason");
            cb->bound ? w.null() : w.value("c1 is not positive");
            w.end_object();
        } else {
            w.null();
        }
        w.key("convergence_bound_reason");
        cb ? w.null() : w.value(cb_reason);
        w.key("solvability");
        solv ? w.value(to_string(*solv)) : w.null();
        w.key("solvability_reason");
        solv ? w.null() : w.value(solv_reason);
        w.key("duality_defect");
        w.value_or_null(duality);
        w.key("duality_defect_reason");
        duality ? w.null() : w.value(duality_reason);
        w.end_object();
        out << w.str() << "\n";
        return 0;
    } catch (const Error& e) {
        return fail(err, e.what());
    }
}

int run_gseq(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        LoadedSystem loaded = load_system(cfg.matrix_path, cfg.normalize);
        const UnitVectorSystem& sys = loaded.system;
        TriangularPair pair = TriangularPair::build(sys);
        AuxiliarySequence g = auxiliary_sequence(sys);

        // file rows hold functionals: row n of the g file is conj(g_n), so
        // the file relates to g the same way the input relates to e
        Matrix gmat(g.count(), sys.dim);
        for (std::size_t n = 0; n < g.count(); ++n)
            for (std::size_t k = 0; k < sys.dim; ++k) gmat(n, k) = std::conj(g[n][k]);

        std::string g_path = cfg.out_prefix + "_g.mtx";
        std::string m_path = cfg.out_prefix + "_M.mtx";
        std::string c_path = cfg.out_prefix + "_C.mtx";
        write_matrix_market_file(g_path, gmat);
        write_unit_lower_coordinate_file(m_path, pair.M);
        write_unit_lower_coordinate_file(c_path, pair.C);
        log_info("gseq: wrote " + g_path + ", " + m_path + ", " + c_path);

        JsonWriter w;
        w.begin_object();
        w.key("command").value("gseq");
        w.key("rows").value(sys.count());
        w.key("cols").value(sys.dim);
        w.key("normalized").value(loaded.was_normalized);
        w.key("files");
        w.begin_object();
        w.key("g").value(g_path);
        w.key("m").value(m_path);
        w.key("c").value(c_path);
        w.end_object();
        w.end_object();
        out << w.str() << "\n";
        return 0;
    } catch (const Error& e) {
        return fail(err, e.what());
    }
}

int run_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        LoadedSystem loaded = load_system(cfg.matrix_path, cfg.normalize);
        std::optional<ConvergenceBound> cb;
        std::string reason;
        try {
            cb = convergence_bound(loaded.system, cfg.tols);
        } catch (const NotFrameError& e) {
            reason = e.what();
        }
        JsonWriter w;
        w.begin_object();
        w.key("command").value("bound");
        w.key("rows").value(loaded.system.count());
        w.key("cols").value(loaded.system.dim);
        w.key("a1");
        cb ? w.value(cb->a1) : w.null();
        w.key("a2");
        cb ? w.value(cb->a2) : w.null();
        w.key("c1");
        cb ? w.value_or_null(cb->c1) : w.null();
        w.key("bound");
        cb ? w.value_or_null(cb->bound) : w.null();
        w.key("reason");
        if (!cb)
            w.value(reason);
        else if (!cb->bound)
            w.value("c1 is not positive");
        else
            w.null();
        w.end_object();
        out << w.str() << "\n";
        return 0;
    } catch (const Error& e) {
        return fail(err, e.what());
    }
}

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        SystemKind kind = parse_kind(cfg.kind);
        UnitVectorSystem sys = generate_system(kind, cfg.dim, cfg.count, cfg.seed);
        Matrix rows(sys.count(), sys.dim);
        for (std::size_t n = 0; n < sys.count(); ++n)
            for (std::size_t k = 0; k < sys.dim; ++k) rows(n, k) = std::conj(sys[n][k]);
        write_matrix_market_file(cfg.out_path, rows);
        log_info("generate: wrote " + cfg.out_path);

        JsonWriter w;
        w.begin_object();
        w.key("command").value("generate");
        w.key("kind").value(cfg.kind);
        w.key("dim").value(cfg.dim);
        w.key("count").value(cfg.count);
        w.key("seed").value(static_cast<long long>(cfg.seed));
        w.key("out").value(cfg.out_path);
        w.end_object();
        out << w.str() << "\n";
        return 0;
    } catch (const Error& e) {
        return fail(err, e.what());
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    switch (cfg.command) {
        case RunConfig::Command::solve: return run_solve(cfg, out, err);
        case RunConfig::Command::analyze: return run_analyze(cfg, out, err);
        case RunConfig::Command::gseq: return run_gseq(cfg, out, err);
        case RunConfig::Command::bound: return run_bound(cfg, out, err);
        case RunConfig::Command::generate: return run_generate(cfg, out, err);
    }
    return fail(err, "unknown command");
}

}  // namespace kf
