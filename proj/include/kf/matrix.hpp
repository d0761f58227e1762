// matrix.hpp — dense complex matrices (row-major) and unit lower triangular
// matrices stored in packed strict-lower form.
#pragma once

#include <cstddef>
#include <vector>

#include "kf/vector.hpp"

namespace kf {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> data;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Complex& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    Vector row(std::size_t i) const {
        return Vector(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                      data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    Vector col(std::size_t j) const {
        Vector v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
};

inline Matrix adjoint(const Matrix& a) {
    Matrix b(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) b(j, i) = std::conj(a(i, j));
    return b;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw ShapeMismatchError("matmul: inner dimensions differ");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// y = A x
inline Vector apply(const Matrix& a, const Vector& x) {
    if (a.cols != x.size()) throw ShapeMismatchError("apply: dimension mismatch");
    Vector y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        Complex s{};
        for (std::size_t j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline Matrix sub(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw ShapeMismatchError("sub: shape mismatch");
    Matrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
    return c;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw ShapeMismatchError("add: shape mismatch");
    Matrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
    return c;
}

inline double max_abs(const Matrix& a) {
    double m = 0.0;
    for (const Complex& v : a.data) m = std::max(m, std::abs(v));
    return m;
}

inline double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (const Complex& v : a.data) s += std::norm(v);
    return std::sqrt(s);
}

inline bool all_finite(const Matrix& a) {
    for (const Complex& v : a.data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

// Unit lower triangular matrix: implicit ones on the diagonal, strict-lower
// entries packed row by row (row i contributes i entries).
struct UnitLowerTriangular {
    std::size_t n = 0;
    std::vector<Complex> strict;  // size n(n-1)/2

    UnitLowerTriangular() = default;
    explicit UnitLowerTriangular(std::size_t dim) : n(dim), strict(dim * (dim - 1) / 2) {}

    // strict-lower entry (i, j), i > j
    Complex& entry(std::size_t i, std::size_t j) { return strict[i * (i - 1) / 2 + j]; }
    const Complex& entry(std::size_t i, std::size_t j) const { return strict[i * (i - 1) / 2 + j]; }

    // general accessor including the implicit diagonal and upper zeros
    Complex at(std::size_t i, std::size_t j) const {
        if (i == j) return Complex{1.0, 0.0};
        if (i < j) return Complex{};
        return entry(i, j);
    }

    Matrix dense() const {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
            for (std::size_t j = 0; j < i; ++j) m(i, j) = entry(i, j);
        }
        return m;
    }
};

// Inverse of a unit lower triangular matrix by forward substitution; the
// inverse is unit lower triangular again.  O(n^3/6).
inline UnitLowerTriangular invert_unit_lower_triangular(const UnitLowerTriangular& m) {
    UnitLowerTriangular c(m.n);
    for (std::size_t j = 0; j < m.n; ++j) {
        for (std::size_t i = j + 1; i < m.n; ++i) {
            // solve (M C)(i, j) = 0 for c_ij given column j above row i
            Complex s = m.entry(i, j);  // k = j term, c_jj = 1
            for (std::size_t k = j + 1; k < i; ++k) s += m.entry(i, k) * c.entry(k, j);
            c.entry(i, j) = -s;
        }
    }
    return c;
}

}  // namespace kf
