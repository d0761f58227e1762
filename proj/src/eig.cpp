#include "kf/eig.hpp"

#include <algorithm>
#include <cmath>

#include "kf/errors.hpp"

namespace kf {

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

void check_hermitian(const Matrix& h) {
    if (h.rows != h.cols) throw ShapeMismatchError("hermitian eigensolver: matrix not square");
    if (!all_finite(h)) throw NonHermitianError("hermitian eigensolver: non-finite entries");
    double scale = std::max(1.0, max_abs(h));
    for (std::size_t i = 0; i < h.rows; ++i) {
        if (std::abs(h(i, i).imag()) > 1e-12 * scale)
            throw NonHermitianError("hermitian eigensolver: diagonal not real");
        for (std::size_t j = i + 1; j < h.cols; ++j)
            if (std::abs(h(i, j) - std::conj(h(j, i))) > 1e-12 * scale)
                throw NonHermitianError("hermitian eigensolver: input deviates from H = H*");
    }
}

// One two-sided Jacobi rotation zeroing the (p, q) entry of the Hermitian
// matrix `a` (p < q).  With a_pq = beta * e^{i theta}, the rotation is
//   J = [[c, -s e^{i theta}], [s e^{-i theta}, c]]
// in the (p, q) plane, where tan(phi) solves t^2 + 2 tau t - 1 = 0 with
// tau = (a_pp - a_qq) / (2 beta).
void rotate(Matrix& a, std::size_t p, std::size_t q) {
    Complex apq = a(p, q);
    double beta = std::abs(apq);
    if (beta == 0.0) return;
    Complex phase = apq / beta;  // e^{i theta}
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double tau = (app - aqq) / (2.0 * beta);
    double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    std::size_t n = a.rows;
    // columns: A <- A J
    for (std::size_t k = 0; k < n; ++k) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = c * akp + s * std::conj(phase) * akq;
        a(k, q) = -s * phase * akp + c * akq;
    }
    // rows: A <- J* A
    for (std::size_t k = 0; k < n; ++k) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = c * apk + s * phase * aqk;
        a(q, k) = -s * std::conj(phase) * apk + c * aqk;
    }
    // the pivot pair is now annihilated up to roundoff
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex{a(p, p).real(), 0.0};
    a(q, q) = Complex{a(q, q).real(), 0.0};
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& h, double tol) {
    check_hermitian(h);
    std::size_t n = h.rows;
    if (n == 0) return {};
    if (n == 1) return {h(0, 0).real()};

    Matrix a = h;
    double fro = frobenius_norm(a);
    if (fro == 0.0) return std::vector<double>(n, 0.0);
    // Jacobi converges quadratically; push the off-diagonal mass well below
    // the requested tolerance (floored near machine precision).
    double stop = std::clamp(tol, 1e-15, 1e-13) * fro;

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
        if (sweep == max_sweeps - 1 && offdiag_norm(a) > stop)
            throw NoConvergenceError("jacobi eigensolver: sweep budget exhausted");
    }

    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i).real();
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

ExtremeEigs hermitian_extreme_eigs(const Matrix& h, double tol) {
    std::vector<double> eigs = hermitian_eigenvalues(h, tol);
    if (eigs.empty()) throw ShapeMismatchError("hermitian_extreme_eigs: empty matrix");
    return {eigs.front(), eigs.back()};
}

double operator_norm(const Matrix& t, double tol) {
    if (t.rows == 0 || t.cols == 0) return 0.0;
    // work on the smaller Gram form of the two
    Matrix g = (t.rows <= t.cols) ? matmul(t, adjoint(t)) : matmul(adjoint(t), t);
    double lmax = hermitian_extreme_eigs(g, tol).max;
    return std::sqrt(std::max(0.0, lmax));
}

}  // namespace kf
