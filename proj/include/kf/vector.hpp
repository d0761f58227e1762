// vector.hpp — dense complex vectors and the inner product used everywhere.
//
// Convention: inner(x, y) = sum_i x_i * conj(y_i), i.e. the product is linear
// in the first argument and conjugate-linear in the second.  Every module in
// the library sticks to this.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "kf/errors.hpp"

namespace kf {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

inline Complex inner(const Vector& x, const Vector& y) {
    if (x.size() != y.size())
        throw ShapeMismatchError("inner: length mismatch");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

inline double norm_sq(const Vector& x) {
    double s = 0.0;
    for (const Complex& v : x) s += std::norm(v);
    return s;
}

inline double norm(const Vector& x) { return std::sqrt(norm_sq(x)); }

inline bool all_finite(const Vector& x) {
    for (const Complex& v : x)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

// y += alpha * x
inline void axpy(Complex alpha, const Vector& x, Vector& y) {
    if (x.size() != y.size())
        throw ShapeMismatchError("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline Vector scaled(const Vector& x, Complex alpha) {
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = alpha * x[i];
    return y;
}

inline Vector sub(const Vector& x, const Vector& y) {
    if (x.size() != y.size())
        throw ShapeMismatchError("sub: length mismatch");
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

inline Vector add(const Vector& x, const Vector& y) {
    if (x.size() != y.size())
        throw ShapeMismatchError("add: length mismatch");
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

inline Vector conj(const Vector& x) {
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::conj(x[i]);
    return y;
}

inline double dist(const Vector& x, const Vector& y) { return norm(sub(x, y)); }

// x / ||x||; rejects vectors with norm <= 1e-12.
inline Vector normalized(const Vector& x) {
    double n = norm(x);
    if (n <= 1e-12) throw Error("cannot normalize a (near-)zero vector");
    return scaled(x, Complex{1.0 / n, 0.0});
}

}  // namespace kf
