#include "kf/rng.hpp"

namespace kf {

Matrix random_unitary(std::size_t n, Rng& rng) {
    Matrix q(n, n);
    std::vector<Vector> cols;
    cols.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector v = rng.gaussian_vector(n);
        // two MGS passes keep the columns orthogonal to machine precision
        for (int pass = 0; pass < 2; ++pass)
            for (const Vector& u : cols) axpy(-inner(v, u), u, v);
        double nv = norm(v);
        if (nv <= 1e-8) {  // essentially impossible; retry deterministically
            --j;
            continue;
        }
        v = scaled(v, Complex{1.0 / nv, 0.0});
        cols.push_back(v);
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) q(i, j) = cols[j][i];
    return q;
}

}  // namespace kf
