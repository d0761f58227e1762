// rng.hpp — deterministic random sources.  Everything is seeded mt19937_64
// plus a hand-rolled Box-Muller transform, so streams are reproducible across
// platforms and standard library implementations.
#pragma once

#include <cstdint>
#include <random>

#include "kf/matrix.hpp"
#include "kf/vector.hpp"

namespace kf {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform double in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller (second value cached)
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // standard complex normal: real and imaginary parts N(0, 1/2)
    Complex cgaussian() {
        double re = gaussian();
        double im = gaussian();
        return Complex{re, im} * 0.70710678118654752440;
    }

    Vector gaussian_vector(std::size_t n) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = cgaussian();
        return v;
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Haar-ish random unitary: modified Gram-Schmidt QR of a complex Gaussian
// matrix, with one reorthogonalization pass per column.
Matrix random_unitary(std::size_t n, Rng& rng);

}  // namespace kf
