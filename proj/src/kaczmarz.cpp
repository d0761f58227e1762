#include "kf/kaczmarz.hpp"

#include <cmath>
#include <string>

#include "kf/errors.hpp"

namespace kf {

namespace {

std::vector<double> row_norms_checked(const Matrix& a) {
    std::vector<double> norms(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols; ++j) s += std::norm(a(i, j));
        norms[i] = std::sqrt(s);
        if (norms[i] <= 1e-12) throw ZeroRowError(i);
    }
    return norms;
}

double residual_norm(const Matrix& a, const Vector& x, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i) {
        Complex r = b[i];
        for (std::size_t j = 0; j < a.cols; ++j) r -= a(i, j) * x[j];
        s += std::norm(r);
    }
    return std::sqrt(s);
}

// x <- x + (b_i - (A x)_i) / ||a_i||^2 * conj(a_i)
void project_row(const Matrix& a, const Vector& b, const std::vector<double>& norms,
                 std::size_t i, Vector& x) {
    Complex r = b[i];
    for (std::size_t j = 0; j < a.cols; ++j) r -= a(i, j) * x[j];
    Complex coef = r / (norms[i] * norms[i]);
    for (std::size_t j = 0; j < a.cols; ++j) x[j] += coef * std::conj(a(i, j));
}

}  // namespace

LinearSystem::LinearSystem(Matrix a_, Vector b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.rows == 0 || a.cols == 0) throw InvalidShapeError("linear system: empty matrix");
    if (b.size() != a.rows)
        throw ShapeMismatchError("linear system: rhs length " + std::to_string(b.size()) +
                                 " does not match " + std::to_string(a.rows) + " rows");
    if (!all_finite(a) || !all_finite(b))
        throw Error("linear system: non-finite entries");
    row_norms_checked(a);  // reject zero rows up front
}

NormalizedRows normalize_rows(const LinearSystem& s) {
    std::vector<double> norms = row_norms_checked(s.a);
    std::vector<Vector> es;
    es.reserve(s.rows());
    Vector b_scaled(s.rows());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        Vector e(s.cols());
        for (std::size_t j = 0; j < s.cols(); ++j) e[j] = std::conj(s.a(i, j)) / norms[i];
        es.push_back(std::move(e));
        b_scaled[i] = s.b[i] / norms[i];
    }
    return NormalizedRows{UnitVectorSystem(s.cols(), std::move(es)), std::move(norms),
                          std::move(b_scaled)};
}

Trajectory cyclic_solve(const LinearSystem& s, const Vector& x0, std::size_t max_sweeps,
                        double tol) {
    if (x0.size() != s.cols()) throw ShapeMismatchError("cyclic_solve: x0 dimension mismatch");
    if (max_sweeps == 0) throw Error("cyclic_solve: sweep budget must be positive");
    std::vector<double> norms = row_norms_checked(s.a);
    double b_scale = std::max(norm(s.b), 1e-300);

    Trajectory t;
    Vector x = x0;
    t.iterates.push_back(x);
    t.residual_norms.push_back(residual_norm(s.a, x, s.b));
    if (t.residual_norms.back() <= tol * b_scale) {
        t.converged = true;
        return t;
    }
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        for (std::size_t i = 0; i < s.rows(); ++i) {
            project_row(s.a, s.b, norms, i, x);
            t.iterates.push_back(x);
        }
        ++t.sweeps;
        t.residual_norms.push_back(residual_norm(s.a, x, s.b));
        if (t.residual_norms.back() <= tol * b_scale) {
            t.converged = true;
            break;
        }
    }
    return t;
}

Trajectory single_pass(const UnitVectorSystem& sys, const Vector& x) {
    if (x.size() != sys.dim) throw ShapeMismatchError("single_pass: target dimension mismatch");
    Trajectory t;
    Vector xn(sys.dim);
    axpy(inner(x, sys[0]), sys[0], xn);
    t.iterates.push_back(xn);
    t.error_norms.push_back(dist(x, xn));
    for (std::size_t n = 1; n < sys.count(); ++n) {
        axpy(inner(sub(x, xn), sys[n]), sys[n], xn);
        t.iterates.push_back(xn);
        t.error_norms.push_back(dist(x, xn));
    }
    t.sweeps = 1;
    return t;
}

Vector partial_sum_via_g(const UnitVectorSystem& sys, const AuxiliarySequence& g,
                         const Vector& x, std::size_t n) {
    return reconstruct_from_g(sys, g, x, n);
}

Trajectory data_driven_pass(const LinearSystem& s, std::size_t passes, double tol) {
    if (passes == 0) throw Error("data_driven_pass: pass budget must be positive");
    std::vector<double> norms = row_norms_checked(s.a);
    double b_scale = std::max(norm(s.b), 1e-300);

    Trajectory t;
    Vector x(s.cols());
    // x_0 = b_0 * conj(a_0) / ||a_0||^2
    {
        Complex coef = s.b[0] / (norms[0] * norms[0]);
        for (std::size_t j = 0; j < s.cols(); ++j) x[j] = coef * std::conj(s.a(0, j));
    }
    t.iterates.push_back(x);
    t.residual_norms.push_back(residual_norm(s.a, x, s.b));
    for (std::size_t pass = 0; pass < passes; ++pass) {
        for (std::size_t i = (pass == 0) ? 1 : 0; i < s.rows(); ++i) {
            project_row(s.a, s.b, norms, i, x);
            t.iterates.push_back(x);
            t.residual_norms.push_back(residual_norm(s.a, x, s.b));
        }
        ++t.sweeps;
        if (tol > 0.0 && t.residual_norms.back() <= tol * b_scale) {
            t.converged = true;
            break;
        }
    }
    return t;
}

}  // namespace kf
