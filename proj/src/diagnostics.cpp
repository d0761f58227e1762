#include "kf/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "kf/eig.hpp"
#include "kf/errors.hpp"

namespace kf {

namespace {

std::size_t common_dim(const std::vector<Vector>& vectors) {
    if (vectors.empty()) throw InvalidShapeError("frame_bounds: empty vector list");
    std::size_t d = vectors[0].size();
    for (const Vector& v : vectors)
        if (v.size() != d) throw ShapeMismatchError("frame_bounds: mixed vector lengths");
    if (d == 0) throw InvalidShapeError("frame_bounds: zero-dimensional vectors");
    return d;
}

void require_spanning(const UnitVectorSystem& sys, const DiagnosticTols& tols) {
    ExtremeEigs ee = hermitian_extreme_eigs(frame_operator(sys.vectors, sys.dim));
    if (ee.min <= tols.frame_tol)
        throw NotSpanningError("system does not span its space (lower frame bound " +
                               std::to_string(ee.min) + ")");
}

}  // namespace

FrameReport frame_bounds(const std::vector<Vector>& vectors, const DiagnosticTols& tols) {
    std::size_t d = common_dim(vectors);
    FrameReport r;
    ExtremeEigs s_eigs = hermitian_extreme_eigs(frame_operator(vectors, d));
    r.lower = s_eigs.min;
    r.upper = s_eigs.max;
    Matrix gram = gram_matrix(vectors);
    r.gram_min_eig = hermitian_extreme_eigs(gram).min;
    r.is_frame = r.lower > tols.frame_tol;
    r.is_tight_one = std::abs(r.lower - 1.0) <= tols.tight_tol &&
                     std::abs(r.upper - 1.0) <= tols.tight_tol;
    r.is_riesz = vectors.size() == d && r.gram_min_eig > tols.frame_tol && r.is_frame;
    r.is_onb = r.is_riesz && max_abs(sub(gram, Matrix::identity(vectors.size()))) <= tols.onb_tol;
    return r;
}

EffectivenessResult effectiveness_tight(const UnitVectorSystem& sys, double tol) {
    DiagnosticTols tols;
    require_spanning(sys, tols);
    AuxiliarySequence g = auxiliary_sequence(sys);
    ExtremeEigs eigs = hermitian_extreme_eigs(frame_operator(g.vectors, sys.dim));
    EffectivenessResult r;
    r.defect = std::abs(eigs.min - 1.0) + std::abs(eigs.max - 1.0);
    r.effective = std::abs(eigs.min - 1.0) <= tol && std::abs(eigs.max - 1.0) <= tol;
    return r;
}

EffectivenessResult effectiveness_isometry(const UnitVectorSystem& sys, double tol) {
    DiagnosticTols tols;
    require_spanning(sys, tols);
    TriangularPair pair = TriangularPair::build(sys);
    Matrix u = pair.u();
    Matrix p = matmul(adjoint(u), u);
    double idempotency = operator_norm(sub(matmul(p, p), p));
    double hermiticity = operator_norm(sub(adjoint(p), p));
    EffectivenessResult r;
    r.defect = idempotency + hermiticity;
    r.effective = r.defect <= tol;
    return r;
}

std::optional<double> almost_effective_bound(const UnitVectorSystem& sys,
                                             const DiagnosticTols& tols) {
    require_spanning(sys, tols);
    AuxiliarySequence g = auxiliary_sequence(sys);
    double a_g = hermitian_extreme_eigs(frame_operator(g.vectors, sys.dim)).min;
    if (a_g <= tols.frame_tol) return std::nullopt;
    return std::clamp(1.0 - a_g, 0.0, 1.0);
}

ConvergenceBound convergence_bound(const UnitVectorSystem& sys, const DiagnosticTols& tols) {
    ExtremeEigs row_eigs = hermitian_extreme_eigs(frame_operator(sys.vectors, sys.dim));
    if (row_eigs.min <= tols.frame_tol)
        throw NotFrameError("convergence_bound: rows are not a frame (lower bound " +
                            std::to_string(row_eigs.min) + ")");
    ConvergenceBound cb;
    cb.a1 = row_eigs.min;
    cb.a2 = row_eigs.max;
    TriangularPair pair = TriangularPair::build(sys);
    Matrix c = pair.C.dense();
    Matrix herm(c.rows, c.cols);
    for (std::size_t i = 0; i < c.rows; ++i)
        for (std::size_t j = 0; j < c.cols; ++j)
            herm(i, j) = 0.5 * (c(i, j) + std::conj(c(j, i)));
    double c1 = hermitian_extreme_eigs(herm).min;
    if (c1 > 0.0) {
        cb.c1 = c1;
        cb.bound = std::max(0.0, cb.a2 * (1.0 - cb.a1 * c1) / cb.a1);
    }
    return cb;
}

const char* to_string(Solvability v) {
    switch (v) {
        case Solvability::always_converges: return "always_converges";
        case Solvability::not_orthogonal_rows: return "not_orthogonal_rows";
        case Solvability::not_surjective: return "not_surjective";
    }
    return "?";
}

Solvability kaczmarz_solvability(const LinearSystem& s, const DiagnosticTols& tols) {
    if (s.rows() != s.cols())
        throw ShapeMismatchError("kaczmarz_solvability: matrix must be square");
    NormalizedRows nr = normalize_rows(s);
    // pairwise row orthogonality, measured on normalized rows
    Matrix gram = gram_matrix(nr.system.vectors);
    for (std::size_t i = 0; i < gram.rows; ++i)
        for (std::size_t j = 0; j < gram.cols; ++j)
            if (i != j && std::abs(gram(i, j)) > tols.onb_tol)
                return Solvability::not_orthogonal_rows;
    // surjectivity: smallest singular value of A via A* A
    Matrix ata = matmul(adjoint(s.a), s.a);
    double smin_sq = hermitian_extreme_eigs(ata).min;
    if (smin_sq <= tols.frame_tol * tols.frame_tol)
        return Solvability::not_surjective;
    return Solvability::always_converges;
}

Vector dual_expansion(const UnitVectorSystem& sys, const AuxiliarySequence& g, const Vector& f) {
    if (g.count() != sys.count())
        throw ShapeMismatchError("dual_expansion: sequence length does not match system");
    if (f.size() != sys.dim) throw ShapeMismatchError("dual_expansion: probe dimension mismatch");
    Vector out(sys.dim);
    for (std::size_t n = 0; n < sys.count(); ++n) axpy(inner(f, g[n]), sys[n], out);
    return out;
}

double duality_defect(const UnitVectorSystem& sys) {
    DiagnosticTols tols;
    require_spanning(sys, tols);
    AuxiliarySequence g = auxiliary_sequence(sys);
    // T = sum_n e_n inner(., g_n) as a dense matrix: T = sum_n outer(e_n, g_n)
    Matrix t(sys.dim, sys.dim);
    for (std::size_t n = 0; n < sys.count(); ++n)
        for (std::size_t i = 0; i < sys.dim; ++i)
            for (std::size_t j = 0; j < sys.dim; ++j)
                t(i, j) += sys[n][i] * std::conj(g[n][j]);
    return operator_norm(sub(t, Matrix::identity(sys.dim)));
}

EffectivenessReport effectiveness_report(const UnitVectorSystem& sys, const DiagnosticTols& tols) {
    EffectivenessReport rep;
    EffectivenessResult tight = effectiveness_tight(sys, tols.effective_tol);
    EffectivenessResult isom = effectiveness_isometry(sys, tols.effective_tol);
    rep.effective = tight.effective;
    rep.methods_agree = tight.effective == isom.effective;
    rep.tight_defect = tight.defect;
    rep.isometry_defect = isom.defect;
    rep.almost_effective = almost_effective_bound(sys, tols);
    try {
        ConvergenceBound cb = convergence_bound(sys, tols);
        rep.c1_lower = cb.c1;
    } catch (const NotFrameError&) {
        // unreachable: effectiveness_tight above already required spanning
    }
    return rep;
}

}  // namespace kf
