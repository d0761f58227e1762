#include "kf/systems.hpp"

#include <cmath>
#include <string>

#include "kf/errors.hpp"

namespace kf {

UnitVectorSystem::UnitVectorSystem(std::size_t d, std::vector<Vector> vs)
    : dim(d), vectors(std::move(vs)) {
    if (dim == 0) throw InvalidShapeError("unit vector system: dimension must be positive");
    if (vectors.empty()) throw InvalidShapeError("unit vector system: needs at least one vector");
    for (std::size_t n = 0; n < vectors.size(); ++n) {
        const Vector& v = vectors[n];
        if (v.size() != dim)
            throw ShapeMismatchError("unit vector system: vector " + std::to_string(n) +
                                     " has length " + std::to_string(v.size()) +
                                     ", expected " + std::to_string(dim));
        if (!all_finite(v))
            throw Error("unit vector system: vector " + std::to_string(n) + " has non-finite entries");
        if (std::abs(norm(v) - 1.0) > 1e-12)
            throw UnitNormError("unit vector system: vector " + std::to_string(n) +
                                " is not unit norm");
    }
}

UnitLowerTriangular correlation_matrix(const UnitVectorSystem& sys) {
    std::size_t n = sys.count();
    UnitLowerTriangular m(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) m.entry(i, j) = inner(sys[i], sys[j]);
    return m;
}

TriangularPair TriangularPair::build(const UnitVectorSystem& sys) {
    TriangularPair pair;
    pair.M = correlation_matrix(sys);
    pair.C = invert_unit_lower_triangular(pair.M);
    // sanity: M C = I to 1e-12 (scaled by the size of C, whose entries can
    // grow for badly correlated systems)
    Matrix prod = matmul(pair.M.dense(), pair.C.dense());
    double scale = std::max(1.0, max_abs(pair.C.dense()));
    if (max_abs(sub(prod, Matrix::identity(sys.count()))) > 1e-12 * scale)
        throw Error("triangular pair: M * C deviates from the identity");
    return pair;
}

Matrix TriangularPair::u() const {
    Matrix u = C.dense();
    for (std::size_t i = 0; i < u.rows; ++i) u(i, i) = 0.0;
    return u;
}

AuxiliarySequence auxiliary_sequence(const UnitVectorSystem& sys) {
    AuxiliarySequence g;
    g.vectors.reserve(sys.count());
    for (std::size_t n = 0; n < sys.count(); ++n) {
        Vector gn = sys[n];
        for (std::size_t i = 0; i < n; ++i) axpy(-inner(sys[n], sys[i]), g.vectors[i], gn);
        g.vectors.push_back(std::move(gn));
    }
    return g;
}

AuxiliarySequence auxiliary_sequence_from_inverse(const UnitVectorSystem& sys,
                                                  const UnitLowerTriangular& c) {
    if (c.n != sys.count())
        throw ShapeMismatchError("auxiliary sequence: triangular size does not match system");
    AuxiliarySequence g;
    g.vectors.reserve(sys.count());
    for (std::size_t n = 0; n < sys.count(); ++n) {
        Vector gn = sys[n];
        for (std::size_t i = 0; i < n; ++i) axpy(c.entry(n, i), sys[i], gn);
        g.vectors.push_back(std::move(gn));
    }
    return g;
}

Vector reconstruct_from_g(const UnitVectorSystem& sys, const AuxiliarySequence& g,
                          const Vector& x, std::size_t n) {
    if (g.count() != sys.count())
        throw ShapeMismatchError("reconstruct_from_g: sequence length does not match system");
    if (n >= sys.count())
        throw IndexOutOfRangeError("reconstruct_from_g: step " + std::to_string(n) +
                                   " out of range for " + std::to_string(sys.count()) + " vectors");
    if (x.size() != sys.dim) throw ShapeMismatchError("reconstruct_from_g: target dimension mismatch");
    Vector xn(sys.dim);
    for (std::size_t i = 0; i <= n; ++i) axpy(inner(x, g[i]), sys[i], xn);
    return xn;
}

Matrix bessel_map(const std::vector<Vector>& vectors, std::size_t dim) {
    Matrix l(vectors.size(), dim);
    for (std::size_t n = 0; n < vectors.size(); ++n) {
        if (vectors[n].size() != dim) throw ShapeMismatchError("bessel_map: vector length mismatch");
        for (std::size_t k = 0; k < dim; ++k) l(n, k) = std::conj(vectors[n][k]);
    }
    return l;
}

Matrix frame_operator(const std::vector<Vector>& vectors, std::size_t dim) {
    Matrix s(dim, dim);
    for (const Vector& v : vectors) {
        if (v.size() != dim) throw ShapeMismatchError("frame_operator: vector length mismatch");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) s(i, j) += v[i] * std::conj(v[j]);
    }
    return s;
}

Matrix gram_matrix(const std::vector<Vector>& vectors) {
    std::size_t n = vectors.size();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = inner(vectors[i], vectors[j]);
    return g;
}

const char* to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::onb: return "onb";
        case SystemKind::perturbed_onb: return "perturbed_onb";
        case SystemKind::repeated_vector: return "repeated_vector";
        case SystemKind::remark: return "remark";
        case SystemKind::parseval_rows: return "parseval_rows";
        case SystemKind::random_unit: return "random_unit";
    }
    return "?";
}

namespace {

std::vector<Vector> unitary_columns(const Matrix& q) {
    std::vector<Vector> cols;
    cols.reserve(q.cols);
    for (std::size_t j = 0; j < q.cols; ++j) cols.push_back(q.col(j));
    return cols;
}

void require_shape(bool ok, SystemKind kind, const char* rule) {
    if (!ok)
        throw InvalidShapeError(std::string("generate_system(") + to_string(kind) +
                                "): " + rule);
}

}  // namespace

UnitVectorSystem generate_system(SystemKind kind, std::size_t d, std::size_t n,
                                 std::uint64_t seed) {
    if (d == 0 || n == 0)
        throw InvalidShapeError("generate_system: dimension and count must be positive");
    Rng rng(seed);
    switch (kind) {
        case SystemKind::onb: {
            require_shape(n == d, kind, "needs count == dim");
            return UnitVectorSystem(d, unitary_columns(random_unitary(d, rng)));
        }
        case SystemKind::perturbed_onb: {
            require_shape(n == d, kind, "needs count == dim");
            // fixed perturbation size: large enough to destroy orthonormality
            // decisively, small enough to keep the system a basis
            const double eps = 0.05;
            std::vector<Vector> cols = unitary_columns(random_unitary(d, rng));
            for (Vector& v : cols) {
                Vector w = normalized(rng.gaussian_vector(d));
                axpy(Complex{eps, 0.0}, w, v);
                v = normalized(v);
            }
            return UnitVectorSystem(d, std::move(cols));
        }
        case SystemKind::repeated_vector: {
            require_shape(n == d + 1, kind, "needs count == dim + 1");
            std::vector<Vector> cols = unitary_columns(random_unitary(d, rng));
            std::vector<Vector> vs;
            vs.reserve(n);
            vs.push_back(cols[0]);
            vs.push_back(cols[0]);  // exact repeat
            for (std::size_t j = 1; j < d; ++j) vs.push_back(cols[j]);
            return UnitVectorSystem(d, std::move(vs));
        }
        case SystemKind::remark: {
            require_shape(d >= 2 && n == d, kind, "needs dim >= 2 and count == dim");
            // canonical construction: e_0 = delta_0, e_1 at angle 60 degrees
            // to e_0 inside span{delta_0, delta_1}, the rest the canonical
            // basis of the orthogonal complement
            std::vector<Vector> vs(n, Vector(d));
            vs[0][0] = 1.0;
            vs[1][0] = 0.5;
            vs[1][1] = std::sqrt(3.0) / 2.0;
            for (std::size_t k = 2; k < n; ++k) vs[k][k] = 1.0;
            return UnitVectorSystem(d, std::move(vs));
        }
        case SystemKind::parseval_rows: {
            require_shape(n >= d, kind, "needs count >= dim");
            // harmonic frame: e_m[k] = exp(2 pi i m k / N) / sqrt(d), then a
            // random rotation.  Its frame operator is (N / d) * I exactly.
            Matrix q = random_unitary(d, rng);
            std::vector<Vector> vs;
            vs.reserve(n);
            const double two_pi = 6.283185307179586476925286766559;
            double scale = 1.0 / std::sqrt(static_cast<double>(d));
            for (std::size_t m = 0; m < n; ++m) {
                Vector v(d);
                for (std::size_t k = 0; k < d; ++k) {
                    double a = two_pi * static_cast<double>(m * k % n) / static_cast<double>(n);
                    v[k] = Complex{std::cos(a), std::sin(a)} * scale;
                }
                vs.push_back(apply(q, v));
            }
            return UnitVectorSystem(d, std::move(vs));
        }
        case SystemKind::random_unit: {
            std::vector<Vector> vs;
            vs.reserve(n);
            for (std::size_t m = 0; m < n; ++m) vs.push_back(normalized(rng.gaussian_vector(d)));
            return UnitVectorSystem(d, std::move(vs));
        }
    }
    throw Error("generate_system: unknown kind");
}

}  // namespace kf
